"""Fractional Fourier quadrature toolkit.

Hermite-basis signals, fractional Fourier transforms by two routes, rotated
quadrature intensities, Weyl and metaplectic operators, symplectic line
geometry, indistinguishable state pairs, and Wigner/Radon tomography.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
