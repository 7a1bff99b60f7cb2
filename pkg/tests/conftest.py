"""Shared oracles for the test suite, kept independent of the library
paths they check."""

from fractions import Fraction

import numpy as np
import scipy.linalg

from mblab import bessel_j


def bisect_zero(fn, lo, hi, iters=90):
    """Plain bisection, no marching or Newton; fn(lo) > 0 > fn(hi)."""
    assert fn(lo) > 0 > fn(hi)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if fn(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def j0_oracle():
    """Smallest positive zero of J_0 by bisection on the series."""
    return bisect_zero(lambda x: bessel_j(0.0, x), 2.0, 3.0)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _weight_coeffs(alpha, beta):
    """Coefficients of (1-x)^alpha (1+x)^beta for integer exponents."""
    coeffs = [Fraction(1)]
    for _ in range(alpha):
        coeffs = _poly_mul(coeffs, [Fraction(1), Fraction(-1)])
    for _ in range(beta):
        coeffs = _poly_mul(coeffs, [Fraction(1), Fraction(1)])
    return coeffs


def exact_moment(alpha, beta, k):
    """Integral of x^k (1-x)^alpha (1+x)^beta over (-1, 1), exactly,
    for integer alpha, beta >= 0."""
    total = Fraction(0)
    for j, c in enumerate(_weight_coeffs(alpha, beta)):
        p = k + j
        if p % 2 == 0:
            total += c * Fraction(2, p + 1)
    return total


def rayleigh_supremum(alpha, beta, n):
    """Brute-force sharp ratio sup ||Q'||/||Q|| over degree <= n, from
    exact monomial moments and a dense generalized eigensolve.  Built on
    nothing but integer arithmetic and LAPACK."""
    moments = [float(exact_moment(alpha, beta, k)) for k in range(2 * n + 1)]
    size = n + 1
    gram = np.array([[moments[i + j] for j in range(size)] for i in range(size)])
    deriv = np.zeros((size, size))
    for i in range(1, size):
        for j in range(1, size):
            deriv[i, j] = i * j * moments[i + j - 2]
    eigs = scipy.linalg.eigh(deriv, gram, eigvals_only=True)
    return float(np.sqrt(eigs[-1]))
