"""Banded matrices of the derivative-norm pencil.

The squared sharp constant is the reciprocal of the smallest generalized
eigenvalue of (A, D) where

    A = C1^T C2^T N^-1 D+ N^-1 C2 C1,      D = diag(d_0..d_{n-1}),

C1, C2 are unit upper bidiagonal, N = diag(1..n) and D+ = diag(d_1..d_n).
A is symmetric pentadiagonal and assembled here in banded storage, both
in raw units and in the symmetrized, ratio-scaled form

    B = D^-1/2 A D^-1/2 = H^T H,    H = D+^1/2 (N^-1 C2 C1) D^-1/2,

whose entries involve only the well-scaled ratios sqrt(d_{k+1}/d_k).
The raw form underflows around n ~ 600; the scaled form works for any n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .jacobi import JacobiWeightParams, norm_ratio, norm_sequence

__all__ = [
    "UpperBidiagonal",
    "BandedPencil",
    "ScaledPencil",
    "build_c1",
    "build_c2",
    "build_pencil",
    "scaled_pencil",
    "apply_operator",
    "symmetrized_bands",
    "dense_a",
    "dense_d",
    "dump_banded",
]


@dataclass(frozen=True)
class UpperBidiagonal:
    """Unit-diagonal upper bidiagonal matrix; only the superdiagonal is stored."""

    n: int
    superdiagonal: np.ndarray

    def to_dense(self):
        out = np.eye(self.n)
        for i, s in enumerate(self.superdiagonal):
            out[i, i + 1] = s
        return out


@dataclass(frozen=True)
class BandedPencil:
    """The pair (A, D) in banded storage.

    `diag`, `super1`, `super2` are the three stored bands of the
    symmetric pentadiagonal A; `norms` holds d_0..d_n so that
    D = diag(norms[:-1]) and D+ = diag(norms[1:]).
    """

    n: int
    params: JacobiWeightParams
    diag: np.ndarray
    super1: np.ndarray
    super2: np.ndarray
    norms: np.ndarray

    @property
    def d(self):
        return self.norms[: self.n]

    @property
    def dplus(self):
        return self.norms[1:]


@dataclass(frozen=True)
class ScaledPencil:
    """Symmetrized pencil B = H^T H with H upper triangular, bandwidth 2.

    h0/h1/h2 are the bands of H, b0/b1/b2 those of B.  Eigenvalues of B
    equal the generalized eigenvalues of (A, D).
    """

    n: int
    params: JacobiWeightParams
    h0: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    b0: np.ndarray
    b1: np.ndarray
    b2: np.ndarray


def _c1_entries(params, n):
    a, b = params.alpha, params.beta
    s = a + b
    k = np.arange(1, n, dtype=float)
    return -2.0 * k * (k + b) / ((2 * k + s) * (2 * k + s + 1))


def _c2_entries(params, n):
    a, b = params.alpha, params.beta
    s = a + b
    k = np.arange(1, n, dtype=float)
    return 2.0 * k * (k + a + 1) / ((2 * k + s + 1) * (2 * k + s + 2))


def build_c1(params, n):
    """C1 = I - diag(2k(k+beta)/((2k+a+b)(2k+a+b+1))) T, T the upper shift."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return UpperBidiagonal(n=n, superdiagonal=_c1_entries(params, n))


def build_c2(params, n):
    """C2 = I + diag(2k(k+alpha+1)/((2k+a+b+1)(2k+a+b+2))) T."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return UpperBidiagonal(n=n, superdiagonal=_c2_entries(params, n))


def _g_bands(params, n):
    """Bands of G = N^-1 C2 C1 (upper triangular, bandwidth 2)."""
    c1 = _c1_entries(params, n)
    c2 = _c2_entries(params, n)
    rows = np.arange(1, n + 1, dtype=float)
    g0 = 1.0 / rows
    g1 = (c1 + c2) / rows[:-1] if n > 1 else np.empty(0)
    g2 = (c2[:-1] * c1[1:]) / rows[:-2] if n > 2 else np.empty(0)
    return g0, g1, g2


def build_pencil(params, n):
    """Assemble A = G^T D+ G and D in banded storage (raw norm units)."""
    norms = norm_sequence(params, n).values
    dp = norms[1:]
    g0, g1, g2 = _g_bands(params, n)
    diag = dp * g0 ** 2
    if n > 1:
        diag[1:] += dp[:-1] * g1 ** 2
    if n > 2:
        diag[2:] += dp[:-2] * g2 ** 2
    super1 = np.empty(max(n - 1, 0))
    if n > 1:
        super1[:] = dp[:-1] * g0[:-1] * g1
        if n > 2:
            super1[1:] += dp[:-2] * g1[:-1] * g2
    super2 = dp[:-2] * g0[:-2] * g2 if n > 2 else np.empty(0)
    return BandedPencil(
        n=n, params=params, diag=diag, super1=super1, super2=super2, norms=norms
    )


def scaled_pencil(params, n):
    """Build the symmetrized pencil directly from norm ratios; never
    forms the raw d_k, so it is safe for any n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ratios = np.array([norm_ratio(params, k) for k in range(n)])
    sr = np.sqrt(ratios)
    c1 = _c1_entries(params, n)
    c2 = _c2_entries(params, n)
    rows = np.arange(1, n + 1, dtype=float)
    h0 = sr / rows
    h1 = (c1 + c2) / rows[:-1] if n > 1 else np.empty(0)
    h2 = (c2[:-1] * c1[1:]) / (rows[:-2] * sr[1 : n - 1]) if n > 2 else np.empty(0)

    b0 = h0 ** 2
    if n > 1:
        b0[1:] += h1 ** 2
    if n > 2:
        b0[2:] += h2 ** 2
    b1 = np.empty(max(n - 1, 0))
    if n > 1:
        b1[:] = h0[:-1] * h1
        if n > 2:
            b1[1:] += h1[:-1] * h2
    b2 = h0[:-2] * h2 if n > 2 else np.empty(0)
    return ScaledPencil(n=n, params=params, h0=h0, h1=h1, h2=h2, b0=b0, b1=b1, b2=b2)


def symmetrized_bands(pencil):
    """Bands of B = D^-1/2 A D^-1/2 obtained by congruence from the
    stored raw bands (so any modification of A flows through)."""
    d = pencil.d
    sd = np.sqrt(d)
    b0 = pencil.diag / d
    b1 = pencil.super1 / (sd[:-1] * sd[1:]) if pencil.n > 1 else np.empty(0)
    b2 = pencil.super2 / (sd[:-2] * sd[2:]) if pencil.n > 2 else np.empty(0)
    return b0, b1, b2


def apply_operator(pencil, lam, v):
    """(A - lam D) v with banded arithmetic."""
    v = np.asarray(v, dtype=float)
    if v.shape != (pencil.n,):
        raise ValueError(f"vector length {v.shape} does not match pencil size {pencil.n}")
    out = pencil.diag * v - lam * (pencil.d * v)
    if pencil.n > 1:
        out[:-1] += pencil.super1 * v[1:]
        out[1:] += pencil.super1 * v[:-1]
    if pencil.n > 2:
        out[:-2] += pencil.super2 * v[2:]
        out[2:] += pencil.super2 * v[:-2]
    return out


def dense_a(pencil):
    a = np.diag(pencil.diag)
    n = pencil.n
    for i in range(n - 1):
        a[i, i + 1] = a[i + 1, i] = pencil.super1[i]
    for i in range(n - 2):
        a[i, i + 2] = a[i + 2, i] = pencil.super2[i]
    return a


def dense_d(pencil):
    return np.diag(pencil.d)


def dump_banded(pencil, stream):
    """Plain-text dump: one line per band of A, then the diagonal of D,
    space-separated full-precision decimals."""
    for band in (pencil.diag, pencil.super1, pencil.super2, pencil.d):
        stream.write(" ".join(format(x, ".17g") for x in band) + "\n")
