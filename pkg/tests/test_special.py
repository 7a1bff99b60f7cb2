import math

import numpy as np
import pytest

from mblab import (
    AccuracyWindowError,
    BesselOrder,
    bessel_j,
    bessel_j_derivative,
    log_gamma,
    smallest_positive_zero,
)
from conftest import j0_oracle


def test_log_gamma_closed_forms():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-14)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)


def test_log_gamma_matches_stdlib_on_window():
    xs = np.geomspace(0.1, 200.0, 160)
    for x in xs:
        assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-13, abs=1e-13)


def test_log_gamma_domain():
    with pytest.raises(ValueError):
        log_gamma(0.0)
    with pytest.raises(ValueError):
        log_gamma(-1.5)


def test_bessel_at_origin():
    assert bessel_j(0.0, 0.0) == 1.0
    assert bessel_j(2.3, 0.0) == 0.0
    assert bessel_j(-0.5, 0.0) == math.inf


def test_bessel_half_integer_closed_form():
    # J_{1/2}(x) = sqrt(2/(pi x)) sin x
    assert bessel_j(0.5, math.pi / 2) == pytest.approx(2.0 / math.pi, abs=1e-13)
    for x in np.linspace(0.05, 10.0, 80):
        want = math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
        assert abs(bessel_j(0.5, x) - want) < 1e-12


def test_bessel_order_object():
    order = BesselOrder(0.5)
    assert bessel_j(order, math.pi) == pytest.approx(0.0, abs=1e-13)
    with pytest.raises(ValueError):
        BesselOrder(-1.0)


def test_bessel_domain_and_window():
    with pytest.raises(ValueError):
        bessel_j(0.0, -1.0)
    with pytest.raises(ValueError):
        bessel_j(-1.2, 1.0)
    with pytest.raises(AccuracyWindowError):
        bessel_j(0.0, 121.0)
    with pytest.raises(AccuracyWindowError):
        bessel_j(50.5, 1.0)


def test_three_term_recurrence():
    rng = np.random.default_rng(3)
    for _ in range(60):
        nu = rng.uniform(0.2, 20.0)
        x = rng.uniform(0.3, 40.0)
        lhs = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x)
        rhs = (2.0 * nu / x) * bessel_j(nu, x)
        assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))


def test_derivative_against_finite_differences():
    rng = np.random.default_rng(5)
    for _ in range(25):
        nu = rng.uniform(-0.9, 6.0)
        x = rng.uniform(0.5, 12.0)
        h = 1e-5
        fd = (bessel_j(nu, x + h) - bessel_j(nu, x - h)) / (2.0 * h)
        assert bessel_j_derivative(nu, x) == pytest.approx(fd, abs=5e-9, rel=5e-9)


def test_smallest_zero_closed_forms():
    assert abs(smallest_positive_zero(-0.5) - math.pi / 2) < 1e-12
    assert abs(smallest_positive_zero(0.5) - math.pi) < 1e-12


def test_smallest_zero_j0_against_bisection_oracle():
    j0 = smallest_positive_zero(0.0)
    assert abs(j0 - j0_oracle()) < 1e-12
    assert j0 == pytest.approx(2.404825557695773, abs=1e-12)


def test_zero_is_a_zero_and_first():
    for nu in np.linspace(-0.99, 10.0, 23):
        j = smallest_positive_zero(nu)
        assert abs(bessel_j(nu, j)) < 1e-12
        # no sign change before it
        probes = np.linspace(j * 1e-3, j * 0.995, 40)
        assert all(bessel_j(nu, t) > 0.0 for t in probes)


def test_zero_monotone_in_order():
    grid = np.linspace(-0.99, 10.0, 23)
    zeros = [smallest_positive_zero(nu) for nu in grid]
    assert all(a < b for a, b in zip(zeros, zeros[1:]))


def test_large_order_zero():
    j = smallest_positive_zero(50.0)
    assert 50.0 < j < 60.0
    assert abs(bessel_j(50.0, j)) < 1e-12


def test_bessel_against_scipy_reference():
    # third route: scipy's jv is an entirely different algorithm
    import scipy.special as sp

    rng = np.random.default_rng(17)
    for _ in range(150):
        nu = rng.uniform(-0.99, 50.0)
        x = rng.uniform(0.0, 60.0)
        ref = float(sp.jv(nu, x))
        assert abs(bessel_j(nu, x) - ref) < 1e-13 * max(1.0, abs(ref))


def test_integer_order_zeros_against_scipy():
    import scipy.special as sp

    for k in range(0, 16):
        want = float(sp.jn_zeros(k, 1)[0])
        assert abs(smallest_positive_zero(float(k)) - want) < 1e-12
