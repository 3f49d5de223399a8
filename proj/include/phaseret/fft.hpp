#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace phaseret::fft {

using cvec = std::vector<std::complex<double>>;

// In-place iterative radix-2 transform; length must be a power of two.
// inverse=true applies the conjugate transform and divides by the length.
void transform_pow2(cvec& a, bool inverse);

// DFT of arbitrary length (Bluestein for non powers of two).
cvec transform(cvec a, bool inverse);

// out[m] = sum_j a[j] * exp(-i * (w0 + m*dw) * (y0 + j*dy)),  m = 0..m_count-1.
// Bluestein chirp factorization with exact (zero-padded) linear convolution.
cvec czt(const cvec& a, double y0, double dy, double w0, double dw, std::size_t m_count);

}  // namespace phaseret::fft
