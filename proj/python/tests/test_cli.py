import json
import os
import subprocess

import pytest

CLI = os.environ.get("PHASERET_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="PHASERET_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def test_counterexample_canonical_triple():
    r = run("counterexample", "0", "pi/4", "pi/2")
    assert r.returncode == 0
    report = json.loads(r.stdout.splitlines()[0])
    assert report["k"] == 16
    assert report["verdict"] is True
    assert max(report["sup_deviations"]) <= 1e-10


def test_counterexample_emit_densities(tmp_path):
    out = tmp_path / "dens"
    r = run("counterexample", "0", "pi/3", "2pi/3", "--emit-densities", str(out))
    assert r.returncode == 0
    files = sorted(p.name for p in out.iterdir())
    assert files == [
        "density_minus_0.csv", "density_minus_1.csv", "density_minus_2.csv",
        "density_plus_0.csv", "density_plus_1.csv", "density_plus_2.csv",
    ]
    for i in range(3):
        plus = (out / f"density_plus_{i}.csv").read_text().splitlines()[1:]
        minus = (out / f"density_minus_{i}.csv").read_text().splitlines()[1:]
        worst = max(
            abs(float(a.split(",")[1]) - float(b.split(",")[1]))
            for a, b in zip(plus, minus)
        )
        assert worst <= 1e-5


def test_counterexample_degenerate_exit_code():
    assert run("counterexample", "0", "0", "pi/2").returncode == 3


def test_counterexample_parse_error_exit_code():
    assert run("counterexample", "0", "banana", "pi/2").returncode == 2


def test_frft_identity_roundtrip(tmp_path):
    import math
    sig = tmp_path / "h0.csv"
    n, hw = 256, 12.0
    dx = 2 * hw / (n - 1)
    rows = ["x,re,im"]
    for i in range(n):
        x = -hw + i * dx
        rows.append(f"{x:.17g},{math.pi ** -0.25 * math.exp(-x * x / 2):.17g},0")
    sig.write_text("\n".join(rows) + "\n")

    out = run("frft", str(sig), "0", "--method", "grid")
    assert out.returncode == 0
    body = out.stdout.splitlines()
    assert body[0] == "x,re,im"
    assert body[1:] == rows[1:]


def test_frft_gaussian_invariance(tmp_path):
    import math
    sig = tmp_path / "h0.csv"
    n, hw = 1024, 12.0
    dx = 2 * hw / (n - 1)
    rows = ["x,re,im"]
    for i in range(n):
        x = -hw + i * dx
        rows.append(f"{x:.17g},{math.pi ** -0.25 * math.exp(-x * x / 2):.17g},0")
    sig.write_text("\n".join(rows) + "\n")

    def parse(text):
        out = []
        for line in text.splitlines()[1:]:
            _, re_, im_ = line.split(",")
            out.append((float(re_), float(im_)))
        return out

    spectral = parse(run("frft", str(sig), "pi/2", "--method", "spectral").stdout)
    grid = parse(run("frft", str(sig), "pi/2", "--method", "grid").stdout)
    orig = parse("\n".join(rows))
    assert max(abs(a[0] - b[0]) + abs(a[1] - b[1]) for a, b in zip(spectral, grid)) < 1e-6
    assert max(abs(a[0] - b[0]) + abs(a[1] - b[1]) for a, b in zip(spectral, orig)) < 1e-6


def test_frft_malformed_csv_exit_code(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,re\n0,1\n")
    assert run("frft", str(bad), "pi/4").returncode == 2


def test_obstruction_outputs_and_caveat():
    r = run("obstruction", "acot(pi)", "--max-denominator", "6")
    assert r.returncode == 0
    report = json.loads(r.stdout.splitlines()[0])
    assert report["min_residual"] > 0
    assert report["examined"] == 495
    assert "does not prove" in r.stdout

    zero = run("obstruction", "pi/3", "--max-denominator", "6")
    assert json.loads(zero.stdout.splitlines()[0])["min_residual"] == 0

    assert run("obstruction", "pi/3", "--max-denominator", "1").returncode == 2


def test_obstruction_byte_determinism():
    a = run("obstruction", "acot(pi)", "--max-denominator", "6")
    b = run("obstruction", "acot(pi)", "--max-denominator", "6")
    assert a.stdout == b.stdout


def test_counterexample_byte_determinism():
    a = run("counterexample", "0.2", "1.0", "2.5")
    b = run("counterexample", "0.2", "1.0", "2.5")
    assert a.stdout == b.stdout


def test_verify_single_suite():
    r = run("verify", "--suite", "hermite")
    assert r.returncode == 0
    assert "hermite.gram_identity_h0_h20" in r.stdout
    assert "FAIL" not in r.stdout
