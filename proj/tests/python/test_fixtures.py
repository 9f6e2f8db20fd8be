"""Checks the golden CLI fixtures with numpy and mpmath, independently of the C++ code."""

import json
import math
from pathlib import Path

import mpmath
import numpy as np
import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def as_complex(pairs):
    return np.array([complex(re, im) for re, im in pairs])


def taylor_of_exp_antiderivative(a, n):
    # s(z) = exp(-sum a_j z^{j+1}/(j+1)) truncated at degree n, in 50-digit arithmetic
    mpmath.mp.dps = 50
    a = [mpmath.mpc(x.real, x.imag) for x in a]
    coeffs = mpmath.taylor(
        lambda z: mpmath.exp(-sum(aj * z ** (j + 1) / (j + 1) for j, aj in enumerate(a[:n]))), 0, n
    )
    return [complex(c) for c in coeffs]


@pytest.mark.parametrize("name", ["represent_zeros_n1", "represent_a01_n2", "represent_invsq_n10"])
def test_represent_fixture(name):
    job = load(f"{name}.job.json")
    out = load(f"{name}.out.json")
    n = job["n"]
    a = as_complex(job["a"])
    lam = as_complex(out["lambdas"])
    assert len(lam) == 2 * n + 1
    assert np.allclose(np.abs(lam), 1.0, atol=1e-14)
    for j in range(n):
        assert abs(np.sum(lam ** (j + 1)) - a[j]) <= 1e-9

    # the points are reciprocals of the roots of s(z) + z^N conj(s)(1/z)
    s = taylor_of_exp_antiderivative(a, n)
    big_n = 2 * n + 1
    p = np.zeros(big_n + 1, dtype=complex)
    for k, c in enumerate(s):
        p[k] = c
        p[big_n - k] = np.conj(c)
    values = np.polyval(p[::-1], 1 / lam)
    assert np.max(np.abs(values)) <= 1e-10 * np.max(np.abs(p))

    for row in out["tail_bounds"]:
        j = row["j"]
        target = a[j] if j < len(a) else 0
        assert row["value"] == pytest.approx(abs(np.sum(lam ** (j + 1)) - target), abs=1e-12)
        if row["certified"]:
            assert row["value"] <= row["bound"]


def test_zero_targets_are_conjugated_cube_roots_of_minus_one():
    lam = as_complex(load("represent_zeros_n1.out.json")["lambdas"])
    assert np.allclose(lam**3, -1.0, atol=1e-14)


def test_harmonics_fixture():
    doc = load("harmonics_nu2.out.json")
    entry = doc["harmonics"][0]
    phases = np.array(entry["phases"])
    assert len(phases) == 5
    signal = lambda t: 3 * np.cos(2 * t) + 4 * np.sin(2 * t)
    for t, theta in zip(entry["samples"]["t"], entry["samples"]["theta"]):
        assert np.sum(signal(t - phases)) == pytest.approx(theta, abs=1e-12)
        assert theta == pytest.approx(signal(t), abs=1e-8)
    assert entry["a"] == pytest.approx(3.0, abs=1e-8)
    assert entry["b"] == pytest.approx(4.0, abs=1e-8)

    lam = np.exp(-1j * phases)
    assert abs(np.sum(lam)) <= 1e-10
    assert abs(np.sum(lam**2) - 1) <= 1e-10


def test_csv_fixture_matches_document():
    doc = load("harmonics_nu2.out.json")["harmonics"][0]["samples"]
    rows = (FIXTURES / "harmonics_nu2.csv").read_text().splitlines()
    assert rows[0] == "t,T,tau_nu,Theta"
    data = np.array([[float(x) for x in r.split(",")] for r in rows[1:]])
    assert np.allclose(data[:, 0], doc["t"], atol=1e-15)
    assert np.allclose(data[:, 3], doc["theta"], atol=1e-15)


def test_tampered_fixtures_differ_by_one_phase():
    good = load("represent_a01_n2.out.json")
    bad = load("represent_a01_n2.tampered.json")
    diff = [k for k, (g, b) in enumerate(zip(good["lambdas"], bad["lambdas"])) if g != b]
    assert len(diff) == 1
    k = diff[0]
    arg = lambda pair: math.atan2(pair[1], pair[0])
    shift = arg(good["lambdas"][k]) - arg(bad["lambdas"][k])
    assert abs(math.remainder(shift, 2 * math.pi)) == pytest.approx(1e-3, rel=1e-6)
