"""The filtered (de la Vallee Poussin) polynomial basis and fundamental polynomials.

For degree parameters 0 < m < n the basis consists of the n polynomials

    q_{n,j}^m(w, x) = p_j(w, x)                                   j <= n-m,
    q_{n,j}^m(w, x) = g(j) p_j(w, x) - g(2n-j) p_{2n-j}(w, x)     n-m < j < n,

with g(j) = (m+n-j)/(2m).  They are orthogonal with respect to w and span
the filtered space nested between the polynomials of degree n-m and those
of degree n+m-1.  The fundamental polynomials attached to the n Chebyshev
nodes are

    Phi_{n,k}^m(x) = lam_k * sum_{j=0}^{n-1} p_j(w, x_k) q_{n,j}^m(w, x),

a cardinal-like system (Kronecker delta at the nodes) that also equals a
delayed mean of reproducing kernels and has a closed trigonometric form
built from the kernel Psi(N, M, tau) = sin(N tau/2) sin(M tau/2) / sin^2(tau/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chebyshev import (
    ChebyshevKind,
    _as_points,
    eta_coeff,
    gamma_coeff,
    jacobi_matrix,
    nodes,
    ortho_matrix,
)

__all__ = [
    "DegreePair",
    "q_poly",
    "q_matrix",
    "q_poly_deriv",
    "q_deriv_matrix",
    "fundamental",
    "fundamental_matrix",
    "fundamental_closed",
    "psi_kernel",
]


@dataclass(frozen=True)
class DegreePair:
    """Degree parameters (n, m) with 0 < m < n.

    n is the number of interpolation nodes and m the filter's action ray;
    theta = m/n is the localization parameter.  The derived constants
    n_w, m_w and C_w feed the explicit Lebesgue-constant bound and depend
    on the Chebyshev kind, so they are exposed as kind-parameterized
    accessors.
    """

    n: int
    m: int

    def __post_init__(self):
        if not 0 < self.m < self.n:
            raise ValueError("degree parameters must satisfy 0 < m < n")

    @property
    def theta(self) -> Fraction:
        return Fraction(self.m, self.n)

    def n_w(self, kind: ChebyshevKind) -> Fraction:
        """n, n+1 or (2n+1)/2 for kinds 1, 2 and 3/4 respectively."""
        if kind is ChebyshevKind.FIRST:
            return Fraction(self.n)
        if kind is ChebyshevKind.SECOND:
            return Fraction(self.n + 1)
        return Fraction(2 * self.n + 1, 2)

    def m_w(self, kind: ChebyshevKind) -> int:
        """n+m for kinds 1/2, 2(n+m)-1 for kinds 3/4."""
        if kind in (ChebyshevKind.FIRST, ChebyshevKind.SECOND):
            return self.n + self.m
        return 2 * (self.n + self.m) - 1

    def c_w(self, kind: ChebyshevKind) -> float:
        """2 for the first kind, 1 otherwise."""
        return 2.0 if kind is ChebyshevKind.FIRST else 1.0


def _check_index(pair: DegreePair, j: int) -> None:
    if not 0 <= j < pair.n:
        raise IndexError(f"basis index {j} outside 0..{pair.n - 1}")


def _check_node(pair: DegreePair, k: int) -> None:
    if not 1 <= k <= pair.n:
        raise IndexError(f"node index {k} outside 1..{pair.n}")


def q_matrix(kind: ChebyshevKind, pair: DegreePair, t) -> np.ndarray:
    """All basis polynomials at angles t: entry (j, l) = q_{n,j}^m(w, cos t_l)."""
    n, m = pair.n, pair.m
    P = ortho_matrix(kind, n + m, t)
    Q = P[:n].copy()
    for j in range(n - m + 1, n):
        Q[j] = gamma_coeff(n, m, j) * P[j] - gamma_coeff(n, m, 2 * n - j) * P[2 * n - j]
    return Q


def q_poly(kind: ChebyshevKind, pair: DegreePair, j: int, x):
    """Basis polynomial q_{n,j}^m(w, x); plain p_j below the filtered band."""
    _check_index(pair, j)
    arr = _as_points(x)
    scalar = arr.ndim == 0
    t = np.arccos(np.atleast_1d(arr))
    n, m = pair.n, pair.m
    if j <= n - m:
        out = ortho_matrix(kind, j + 1, t)[j]
    else:
        P = ortho_matrix(kind, 2 * n - j + 1, t)
        out = gamma_coeff(n, m, j) * P[j] - gamma_coeff(n, m, 2 * n - j) * P[2 * n - j]
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def q_deriv_matrix(kind: ChebyshevKind, pair: DegreePair, r: int, x) -> np.ndarray:
    """r-th derivatives of all basis polynomials at points x (r >= 1).

    Row j holds (q_{n,j}^m)^(r)(w, x).  Differentiation maps p_j(w, .) to
    eta_j^r p_{j-r}(w phi^{2r}, .) with phi^2 = 1 - x^2, so the rows are
    assembled from the orthonormal family of the shifted Jacobi weight;
    negative-degree terms vanish.
    """
    if r < 1:
        raise ValueError("derivative order must be >= 1")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    n, m = pair.n, pair.m
    top = n + m - 1 - r
    D = jacobi_matrix(kind, r, max(top + 1, 0), x)
    eta = eta_coeff(kind, np.arange(n + m), r)

    def dp(j):
        # eta vanishes for j < r, matching the dropped negative degrees
        return eta[j] * D[j - r] if j >= r else np.zeros(x.size)

    Q = np.zeros((n, x.size))
    for j in range(n):
        if j <= n - m:
            Q[j] = dp(j)
        else:
            Q[j] = gamma_coeff(n, m, j) * dp(j) - gamma_coeff(n, m, 2 * n - j) * dp(2 * n - j)
    return Q


def q_poly_deriv(kind: ChebyshevKind, pair: DegreePair, j: int, r: int, x):
    """r-th derivative of q_{n,j}^m(w, .) at x."""
    _check_index(pair, j)
    arr = _as_points(x)
    scalar = arr.ndim == 0
    out = q_deriv_matrix(kind, pair, r, np.atleast_1d(arr))[j]
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def fundamental_matrix(kind: ChebyshevKind, pair: DegreePair, x) -> np.ndarray:
    """All fundamental polynomials at points x: entry (k-1, l) = Phi_{n,k}^m(x_l).

    Direct orthogonal-expansion evaluation; this is the semantic reference
    for the transform-based fast path.
    """
    ns = nodes(kind, pair.n)
    Pk = ortho_matrix(kind, pair.n, ns.t)
    Q = q_matrix(kind, pair, np.arccos(np.atleast_1d(np.asarray(x, dtype=float))))
    return ns.lam[:, None] * (Pk.T @ Q)


def fundamental(kind: ChebyshevKind, pair: DegreePair, k: int, x):
    """Fundamental polynomial Phi_{n,k}^m(x) for the k-th node (k = 1..n)."""
    _check_node(pair, k)
    arr = _as_points(x)
    scalar = arr.ndim == 0
    ns = nodes(kind, pair.n)
    pk = ortho_matrix(kind, pair.n, ns.t[k - 1 : k])[:, 0]
    Q = q_matrix(kind, pair, np.arccos(np.atleast_1d(arr)))
    out = ns.lam[k - 1] * (pk @ Q)
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


_PSI_SMALL = 1e-6


def psi_kernel(N: int, M: int, tau):
    """Psi(N, M, tau) = sin(N tau/2) sin(M tau/2) / sin^2(tau/2).

    Defined by its limit N*M at the removable singularities tau = 2 pi q.
    Near those images the angle is first reduced, tau = 2 pi q + eps, and
    the three sine factors are evaluated as sin(y)/y ratios of the reduced
    argument, which is stable arbitrarily close to the pole.
    """
    tau = np.asarray(tau, dtype=float)
    scalar = tau.ndim == 0
    tau = np.atleast_1d(tau)
    out = np.empty_like(tau)

    half = np.sin(tau / 2.0)
    near = np.abs(half) < _PSI_SMALL

    far = ~near
    if far.any():
        tf = tau[far]
        out[far] = np.sin(N * tf / 2.0) * np.sin(M * tf / 2.0) / half[far] ** 2
    if near.any():
        q = np.round(tau[near] / (2.0 * np.pi))
        eps = tau[near] - 2.0 * np.pi * q
        # sin(K tau/2) = (-1)^(K q) sin(K eps/2)
        sign = np.where((N + M) * q % 2 == 0, 1.0, -1.0)
        out[near] = sign * N * M * _sinc(N * eps / 2.0) * _sinc(M * eps / 2.0) / _sinc(eps / 2.0) ** 2
    if scalar:
        return float(out[0])
    return out


def _sinc(y):
    """sin(y)/y with the value 1 at y = 0."""
    y = np.asarray(y, dtype=float)
    return np.where(y == 0.0, 1.0, np.sin(np.where(y == 0.0, 1.0, y)) / np.where(y == 0.0, 1.0, y))


# Fall back to the expansion form when the closed form's outer quotient
# becomes this small: the bracketed difference then cancels as well.
_CLOSED_FALLBACK = 1e-6


def fundamental_closed(kind: ChebyshevKind, pair: DegreePair, k: int, t):
    """Closed trigonometric form of Phi_{n,k}^m at angles t (x = cos t).

    Evaluates the kind-specific combination of Psi(N, 2m, t -+ t_k):

        w1:  [Psi(2n, 2m, t-t_k) + Psi(2n, 2m, t+t_k)] / (4nm)
        w2:  sin(t_k) [Psi(2n+2, 2m, t-t_k) - Psi(2n+2, 2m, t+t_k)]
             / (4m(n+1) sin t)
        w3:  cos(t_k/2) [Psi(2n+1, 2m, t-t_k) + Psi(2n+1, 2m, t+t_k)]
             / (2m(2n+1) cos(t/2))
        w4:  sin(t_k/2) [Psi(2n+1, 2m, t-t_k) - Psi(2n+1, 2m, t+t_k)]
             / (2m(2n+1) sin(t/2))

    Near the outer quotient's endpoint zeros the expansion form is used
    instead; the expansion is the semantic definition and wins any
    disagreement.
    """
    _check_node(pair, k)
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    n, m = pair.n, pair.m
    tk = float(nodes(kind, n).t[k - 1])

    if kind is ChebyshevKind.FIRST:
        out = (psi_kernel(2 * n, 2 * m, t - tk) + psi_kernel(2 * n, 2 * m, t + tk)) / (4.0 * n * m)
        bad = np.zeros(t.shape, dtype=bool)
    elif kind is ChebyshevKind.SECOND:
        den = np.sin(t)
        bad = np.abs(den) < _CLOSED_FALLBACK
        out = (
            np.sin(tk)
            * (psi_kernel(2 * (n + 1), 2 * m, t - tk) - psi_kernel(2 * (n + 1), 2 * m, t + tk))
            / (4.0 * m * (n + 1) * np.where(bad, 1.0, den))
        )
    elif kind is ChebyshevKind.THIRD:
        den = np.cos(t / 2.0)
        bad = np.abs(den) < _CLOSED_FALLBACK
        out = (
            np.cos(tk / 2.0)
            * (psi_kernel(2 * n + 1, 2 * m, t - tk) + psi_kernel(2 * n + 1, 2 * m, t + tk))
            / (2.0 * m * (2 * n + 1) * np.where(bad, 1.0, den))
        )
    else:
        den = np.sin(t / 2.0)
        bad = np.abs(den) < _CLOSED_FALLBACK
        out = (
            np.sin(tk / 2.0)
            * (psi_kernel(2 * n + 1, 2 * m, t - tk) - psi_kernel(2 * n + 1, 2 * m, t + tk))
            / (2.0 * m * (2 * n + 1) * np.where(bad, 1.0, den))
        )

    if bad.any():
        out[bad] = fundamental(kind, pair, k, np.cos(t[bad]))
    if scalar:
        return float(out[0])
    return out
