"""Continuum limit of the discrete problem: Bessel profiles, the limiting
ODE, the root condition for the rescaled spectral parameter, and the
numerical comparison of eigenvectors against the closed-form profile.

With t = k/n and l = n^4 lambda, the bundle components converge to

    y_j(t, l) = 2^{b_j} Gamma(nu_j + 1) / l^{nu_j/2} * t * J_{nu_j}(sqrt(l) t^2 / 2),

nu_j = (b_j - 1)/2, which solves   y'' = y'/t - (t^2 l - b_j(b_j-2)/t^2) y
and matches 2 t^{b_j} as t -> 0.  The smallest admissible l is (2 j_nu*)^2,
giving the large-n law M_n ~ n^2 / (2 j_nu*).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discrete import y_bundle
from .eigensolver import _solve_scaled, sharp_constant
from .special import bessel_j, log_gamma, smallest_positive_zero

__all__ = [
    "ProfileBranch",
    "profile_y",
    "ode_residual",
    "ode_residual_of",
    "predicted_constant",
    "root_condition_min_l",
    "ProfileComparison",
    "profile_compare",
    "convergence_study",
]


@dataclass(frozen=True)
class ProfileBranch:
    """Branch j in {1, 2} with exponent b (alpha for 1, beta for 2) and
    rescaled spectral parameter l > 0."""

    j: int
    b: float
    l: float

    def __post_init__(self):
        if self.j not in (1, 2):
            raise ValueError(f"branch must be 1 or 2, got {self.j}")
        if not self.l > 0.0:
            raise ValueError(f"rescaled parameter l must be positive, got {self.l}")
        if not self.nu > -1.0:
            raise ValueError(f"branch exponent {self.b} gives order <= -1")

    @property
    def nu(self):
        return (self.b - 1.0) / 2.0


def branch_for(params, j, l):
    return ProfileBranch(j=j, b=params.alpha if j == 1 else params.beta, l=l)


def profile_y(branch, t):
    """Closed-form profile value at t > 0."""
    t = float(t)
    if not t > 0.0:
        raise ValueError(f"profile requires t > 0, got {t}")
    nu = branch.nu
    const = math.exp(
        branch.b * math.log(2.0) + log_gamma(nu + 1.0) - 0.5 * nu * math.log(branch.l)
    )
    return const * t * bessel_j(nu, math.sqrt(branch.l) * t * t / 2.0)


def profile_values(branch, ts):
    return np.array([profile_y(branch, t) for t in np.asarray(ts, dtype=float)])


def ode_residual_of(
    fn, b, t, l, steps=(0.02, 0.01, 0.005, 0.0025, 0.00125, 0.000625, 0.0003125)
):
    """Relative defect of y'' = y'/t - (t^2 l - b(b-2)/t^2) y for the
    callable fn, via fourth-order central differences; the smallest
    defect over the refined steps is returned.  Steps are capped at t/8
    because the 1/t^2 term steepens the derivatives near the origin."""
    best = math.inf
    for h0 in steps:
        h = min(h0, t / 8.0)
        ys = [fn(t + i * h) for i in (-2, -1, 0, 1, 2)]
        d1 = (-ys[4] + 8.0 * ys[3] - 8.0 * ys[1] + ys[0]) / (12.0 * h)
        d2 = (-ys[4] + 16.0 * ys[3] - 30.0 * ys[2] + 16.0 * ys[1] - ys[0]) / (
            12.0 * h * h
        )
        lhs = d2 - d1 / t + (t * t * l - b * (b - 2.0) / (t * t)) * ys[2]
        scale = max(abs(ys[2]), abs(d1), abs(d2), 1e-30)
        best = min(best, abs(lhs) / scale)
    return best


def ode_residual(branch, t, l=None):
    """Finite-difference defect of the closed-form profile in the
    limiting ODE (analytically zero; truncation only)."""
    lval = branch.l if l is None else float(l)
    br = branch if l is None else ProfileBranch(branch.j, branch.b, lval)
    return ode_residual_of(lambda s: profile_y(br, s), br.b, float(t), lval)


def predicted_constant(params, n):
    """Leading-order prediction n^2 / (2 j_nu*) for the sharp constant."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return float(n) ** 2 / (2.0 * smallest_positive_zero(params.nu_star))


def root_condition_min_l(params):
    """Smallest l with J_nu(alpha)(sqrt(l)/2) * J_nu(beta)(sqrt(l)/2) = 0,
    namely (2 j_nu*)^2."""
    return (2.0 * smallest_positive_zero(params.nu_star)) ** 2


@dataclass(frozen=True)
class ProfileComparison:
    """Eigenvector bundle vs closed-form profile over the window
    k in [n/4, n-2], both normalized to unit sup norm."""

    sup_defect: float
    branch: int
    degenerate: bool
    l_star: float
    t: np.ndarray
    discrete: np.ndarray
    closed_form: np.ndarray


def _sup_normalize(seq):
    imax = int(np.argmax(np.abs(seq)))
    peak = seq[imax]
    if peak == 0.0:
        raise ValueError("cannot normalize an identically zero sequence")
    return seq / peak


def profile_compare(params, n, tol=1e-12):
    """Compare the extremal eigenvector's bundle component against the
    closed-form profile at l* = n^4 lambda_min.

    The branch realizing nu* is used (component 1 for branch 1,
    component 2 for branch 2, de-alternated by (-1)^k).  At alpha = beta
    both branches are admissible; branch 1 is used by convention and the
    result is flagged degenerate.
    """
    if n < 50:
        raise ValueError(f"profile comparison needs n >= 50, got {n}")
    lam, w, _, _, _ = _solve_scaled(params, n, tol)
    l_star = lam * float(n) ** 4

    # x_k = w_k / (sqrt(d_k) * scale_k); the combined factor is only
    # polynomially large, so the bundle is formed without over/underflow.
    a, b = params.alpha, params.beta
    s = a + b
    g = np.array(
        [
            0.5
            * (
                log_gamma(k + 1.0)
                + log_gamma(k + s + 1.0)
                - log_gamma(k + a + 1.0)
                - log_gamma(k + b + 1.0)
                + math.log(2 * k + s + 1.0)
            )
            for k in range(n)
        ]
    )
    x = w * np.exp(-g)

    degenerate = params.alpha == params.beta
    if degenerate:
        branch = 1
    else:
        branch = 1 if params.nu_alpha < params.nu_beta else 2
    comp = branch - 1

    ks = np.arange(int(math.ceil(n / 4.0)), n - 1)
    discrete = np.empty(len(ks), dtype=float)
    for i, k in enumerate(ks):
        yk = y_bundle(x, int(k))[comp]
        if branch == 2 and k % 2 == 1:
            yk = -yk
        discrete[i] = yk
    br = branch_for(params, branch, l_star)
    ts = ks / float(n)
    closed = profile_values(br, ts)

    discrete = _sup_normalize(discrete)
    closed = _sup_normalize(closed)
    defect = float(np.max(np.abs(discrete - closed)))
    return ProfileComparison(
        sup_defect=defect,
        branch=branch,
        degenerate=degenerate,
        l_star=l_star,
        t=ts,
        discrete=discrete,
        closed_form=closed,
    )


def convergence_study(params, n_list, tol=1e-12):
    """Sharp-constant reports for an ascending list of degrees; the ratio
    column records M_n * 2 j_nu* / n^2."""
    n_list = list(n_list)
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be strictly ascending")
    return [sharp_constant(params, n, tol) for n in n_list]
