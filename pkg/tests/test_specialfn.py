import cmath
import math
import random

import pytest
import scipy.special

from extsq.specialfn import (
    CutoffSpec,
    PoleError,
    as_parity,
    g_delta,
    g_delta_integral,
    gamma,
    gamma_c,
    gamma_r,
    gcancel,
    lgamma,
    smooth_cutoff,
)


def test_as_parity():
    assert as_parity(0) == 0
    assert as_parity(1) == 1
    for bad in (0.5, 2, -1, "0"):
        with pytest.raises(ValueError):
            as_parity(bad)


def test_lgamma_matches_scipy_on_reals():
    for x in (0.5, 1.0, 2.5, 7.3, 12.0):
        assert lgamma(x).real == pytest.approx(math.lgamma(x), rel=1e-12)
        assert abs(lgamma(x).imag) < 1e-12


def test_gamma_matches_scipy_complex():
    rng = random.Random(5)
    for _ in range(50):
        z = complex(rng.uniform(0.1, 6.0), rng.uniform(-5.0, 5.0))
        want = scipy.special.gamma(z)
        assert gamma(z) == pytest.approx(want, rel=1e-11)


def test_gamma_reflection_into_left_halfplane():
    rng = random.Random(6)
    for _ in range(30):
        z = complex(rng.uniform(-6.0, -0.1), rng.uniform(0.2, 4.0))
        want = scipy.special.gamma(z)
        assert gamma(z) == pytest.approx(want, rel=1e-9)


def test_gamma_poles():
    for k in (0, -1, -2, -5):
        with pytest.raises(PoleError) as exc:
            gamma(complex(k))
        assert exc.value.location == complex(k)


def test_gamma_r_and_c_anchors():
    assert gamma_r(1) == pytest.approx(1.0, rel=1e-14)
    # gamma_r(s) = pi^(-s/2) Gamma(s/2); at s=2 that is 1/pi
    assert gamma_r(2) == pytest.approx(1.0 / math.pi, rel=1e-14)
    assert gamma_c(1) == pytest.approx(1.0 / math.pi, rel=1e-14)
    assert gamma_c(2) == pytest.approx(1.0 / (2.0 * math.pi**2), rel=1e-13)


def test_duplication_identity():
    rng = random.Random(7)
    for _ in range(100):
        s = complex(rng.uniform(0.1, 4.0), rng.uniform(-3.0, 3.0))
        lhs = gamma_c(s)
        rhs = gamma_r(s) * gamma_r(s + 1)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_g_delta_anchor():
    # delta = 0 at the symmetric point: the ratio is 1 and the sign factor is 1
    assert g_delta(0, 0.5) == pytest.approx(1.0, rel=1e-12)


def test_g_delta_reflection():
    rng = random.Random(8)
    for _ in range(100):
        delta = rng.randint(0, 1)
        s = complex(rng.uniform(0.1, 0.9), rng.uniform(-2.0, 2.0))
        prod = g_delta(delta, s) * g_delta(delta, 1 - s)
        assert prod == pytest.approx((-1.0) ** delta, rel=1e-10)


def test_g_delta_num_pole_raises_den_pole_vanishes():
    # numerator Gamma_R(s + delta) has poles at s = -delta - 2k
    with pytest.raises(PoleError):
        g_delta(0, 0.0)
    with pytest.raises(PoleError):
        g_delta(1, -1.0)
    # denominator Gamma_R(1 - s + delta) poles give exact zeros
    assert g_delta(0, 1.0) == 0.0
    assert g_delta(1, 2.0) == 0.0


def test_smooth_cutoff_profile():
    spec = CutoffSpec(1.0, 2.0, 4)
    assert smooth_cutoff(0.3, spec) == 1.0
    assert smooth_cutoff(1.0, spec) == 1.0
    assert smooth_cutoff(2.0, spec) == 0.0
    assert smooth_cutoff(5.0, spec) == 0.0
    mid = smooth_cutoff(1.5, spec)
    assert 0.0 < mid < 1.0
    vals = [smooth_cutoff(1.0 + 0.1 * k, spec) for k in range(11)]
    assert vals == sorted(vals, reverse=True)


def test_cutoff_spec_validation():
    with pytest.raises(ValueError):
        CutoffSpec(2.0, 1.0, 4)
    with pytest.raises(ValueError):
        CutoffSpec(1.0, 2.0, 0)


CUTOFF = CutoffSpec(1.0, 2.0, 4)


@pytest.mark.parametrize("delta", [0, 1])
@pytest.mark.parametrize("re", [0.1, 0.5, 1.0, 1.5, 1.9])
@pytest.mark.parametrize("im", [-2.0, 0.0, 2.0])
def test_quadrature_agrees_with_closed_form(delta, re, im):
    s = complex(re, im)
    want = g_delta(delta, s)
    got = g_delta_integral(delta, s, CUTOFF, budget=1e-6)
    assert got == pytest.approx(want, abs=1e-5)


def test_quadrature_cutoff_independence():
    s = complex(0.7, 0.4)
    a = g_delta_integral(0, s, CutoffSpec(1.0, 2.0, 4))
    b = g_delta_integral(0, s, CutoffSpec(0.5, 3.0, 5))
    assert a == pytest.approx(b, abs=2e-6)


def test_quadrature_domain_check():
    with pytest.raises(ValueError):
        g_delta_integral(0, complex(-0.2, 0.0), CUTOFF)
    with pytest.raises(ValueError):
        g_delta_integral(0, complex(4.5, 0.0), CUTOFF)


def test_gcancel_pair_agrees():
    rng = random.Random(9)
    for _ in range(40):
        eta1 = rng.randint(0, 1)
        eta2 = rng.randint(0, 1)
        m = 2 * rng.randint(-2, 2) + eta1 - eta2 + 1
        im = rng.uniform(-1.0, 1.0)
        z2 = complex(rng.uniform(-0.4, 0.4), im)
        z1 = z2 + m
        s = complex(rng.uniform(0.05, 0.45), rng.uniform(-1.0, 1.0))
        try:
            lhs, rhs = gcancel(eta1, eta2, z1, z2, s)
        except PoleError:
            continue
        assert cmath.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-12)


def test_gcancel_lattice_constraint():
    with pytest.raises(ValueError):
        gcancel(0, 0, 0.0, 0.0, 0.3)  # difference 0 is even, needs odd
    with pytest.raises(ValueError):
        gcancel(0, 1, 1.0, 0.0, 0.3)  # difference 1, needs even
    with pytest.raises(ValueError):
        gcancel(0, 0, complex(1.0, 0.5), 0.0, 0.3)  # non-real difference
