import math

import numpy as np
import pytest

from mblab import (
    JacobiWeightParams,
    ProfileBranch,
    bessel_j,
    convergence_study,
    ode_residual,
    ode_residual_of,
    predicted_constant,
    profile_compare,
    profile_y,
    root_condition_min_l,
    smallest_positive_zero,
)

P00 = JacobiWeightParams(0.0, 0.0)
P11 = JacobiWeightParams(1.0, 1.0)


def test_branch_validation():
    with pytest.raises(ValueError):
        ProfileBranch(j=3, b=1.0, l=1.0)
    with pytest.raises(ValueError):
        ProfileBranch(j=1, b=1.0, l=0.0)
    with pytest.raises(ValueError):
        ProfileBranch(j=1, b=-1.2, l=1.0)
    assert ProfileBranch(j=1, b=2.0, l=1.0).nu == 0.5


def test_profile_unit_exponent_reduces_to_bessel():
    # b = 1 gives nu = 0 and the prefactor collapses to 2
    br = ProfileBranch(j=1, b=1.0, l=7.0)
    for t in (0.2, 0.6, 1.0):
        want = 2.0 * t * bessel_j(0.0, math.sqrt(7.0) * t * t / 2.0)
        assert profile_y(br, t) == pytest.approx(want, rel=1e-13)


def test_profile_vanishes_at_matched_root():
    for b in (0.0, 1.0, 2.5):
        nu = (b - 1.0) / 2.0
        l = (2.0 * smallest_positive_zero(nu)) ** 2
        br = ProfileBranch(j=1, b=b, l=l)
        assert abs(profile_y(br, 1.0)) < 1e-11


def test_profile_small_t_matching():
    # y / t^b -> 2 with an O(t^4 l) relative correction, so the defect
    # drops ~16x per halving of t
    for b, l in [(1.0, 10.0), (2.5, 23.0), (-0.5, 4.0)]:
        br = ProfileBranch(j=1, b=b, l=l)
        defects = [abs(profile_y(br, t) / t**b - 2.0) for t in (0.02, 0.01, 0.005)]
        assert defects[0] > defects[1] > defects[2]
        for d1, d2 in zip(defects, defects[1:]):
            assert 14.0 < d1 / d2 < 18.0


def test_profile_derivative_matching():
    # 2 t y'(t) / t^b -> 4 b (third component of the limiting vector)
    for b in (1.0, 2.5):
        br = ProfileBranch(j=1, b=b, l=10.0)
        for t in (0.02, 0.01, 0.005):
            h = t / 20.0
            stencil = [profile_y(br, t + i * h) for i in (-2, -1, 1, 2)]
            d1 = (-stencil[3] + 8 * stencil[2] - 8 * stencil[1] + stencil[0]) / (12 * h)
            assert abs(2 * t * d1 / t**b - 4.0 * b) < 1e-3


def test_profile_domain():
    br = ProfileBranch(j=1, b=1.0, l=1.0)
    with pytest.raises(ValueError):
        profile_y(br, 0.0)


@pytest.mark.parametrize("b", [-0.5, 0.0, 1.0, 2.5])
@pytest.mark.parametrize("l", [4.0, 23.13, 100.0])
def test_ode_residual_grid(b, l):
    br = ProfileBranch(j=1, b=b, l=l)
    for t in (0.1, 0.5, 1.0):
        assert ode_residual(br, t) < 1e-6


def test_ode_residual_examples_and_control():
    assert ode_residual(ProfileBranch(j=1, b=1.0, l=10.0), 0.5) < 1e-6
    assert ode_residual(ProfileBranch(j=1, b=0.0, l=4 * math.pi**2), 1.0) < 1e-6
    # y = t is generically not a solution
    assert ode_residual_of(lambda s: s, 1.0, 0.5, 10.0) > 0.1


def test_predicted_constant_values():
    assert predicted_constant(P00, 10) == pytest.approx(100.0 / math.pi, rel=1e-13)
    # the smaller of the two orders rules
    assert predicted_constant(JacobiWeightParams(0.0, 2.0), 10) == pytest.approx(
        100.0 / math.pi, rel=1e-13
    )
    assert predicted_constant(P11, 10) == pytest.approx(
        100.0 / (2.0 * 2.404825557695773), rel=1e-12
    )


def test_root_condition_values():
    assert root_condition_min_l(P00) == pytest.approx(math.pi**2, rel=1e-12)
    j0 = 2.404825557695773
    assert root_condition_min_l(P11) == pytest.approx((2 * j0) ** 2, rel=1e-12)
    assert root_condition_min_l(P11) == pytest.approx(23.132745, abs=1e-5)
    # min rule: (3,1) has nu* = nu(1) = 0, same as (1,1)
    assert root_condition_min_l(JacobiWeightParams(3.0, 1.0)) == pytest.approx(
        root_condition_min_l(P11), rel=1e-13
    )


def test_profile_compare_branch_selection():
    c = profile_compare(JacobiWeightParams(1.0, 0.0), 100)
    assert c.branch == 2 and not c.degenerate
    c = profile_compare(JacobiWeightParams(0.0, 1.0), 100)
    assert c.branch == 1 and not c.degenerate
    c = profile_compare(P00, 100)
    assert c.branch == 1 and c.degenerate
    with pytest.raises(ValueError):
        profile_compare(P00, 30)


def test_profile_compare_converges():
    defects = {}
    for n in (100, 200):
        c = profile_compare(P00, n)
        defects[n] = c.sup_defect
        assert np.max(np.abs(c.discrete)) == pytest.approx(1.0)
        assert np.max(np.abs(c.closed_form)) == pytest.approx(1.0)
        assert len(c.t) == len(c.discrete) == len(c.closed_form)
    assert defects[200] < defects[100] < 0.1


def test_profile_compare_l_star_near_root_condition():
    c = profile_compare(P00, 200)
    assert c.l_star == pytest.approx(root_condition_min_l(P00), rel=0.05)


def test_convergence_study():
    reports = convergence_study(P00, [20, 40, 80])
    assert [r.n for r in reports] == [20, 40, 80]
    defects = [abs(r.ratio - 1.0) for r in reports]
    assert defects[2] < defects[0]
    with pytest.raises(ValueError):
        convergence_study(P00, [40, 20])


def test_convergence_study_outside_restriction_is_exploratory():
    # |alpha - beta| >= 4: data is produced but nothing is asserted
    # about the ratio column
    reports = convergence_study(JacobiWeightParams(0.0, 6.0), [20, 40])
    assert len(reports) == 2
    assert all(np.isfinite(r.ratio) for r in reports)


def test_eigenvalue_to_root_defect_decreases():
    for p in (P00, JacobiWeightParams(1.0, 0.5)):
        l_inf = root_condition_min_l(p)
        defs = [
            abs(r.lambda_min * r.n**4 - l_inf) for r in convergence_study(p, [50, 100, 200])
        ]
        assert defs[0] > defs[1] > defs[2]
