"""Orthonormal Chebyshev systems of the four kinds.

The four Chebyshev weights on [-1, 1] are

    w1 = (1-x^2)^(-1/2),    w2 = (1-x^2)^(1/2),
    w3 = sqrt((1+x)/(1-x)), w4 = sqrt((1-x)/(1+x)).

Each induces an orthonormal polynomial family p_n(w, x) with an explicit
trigonometric form in t = arccos(x), a Gauss quadrature rule whose nodes
are the zeros of p_n, and Christoffel numbers in closed form.  This
module also provides the de la Vallee Poussin filter coefficients and
the scalar coefficient families (gamma, eta) used by the filtered basis
and its derivatives.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

_SQRT_2_PI = math.sqrt(2.0 / math.pi)
_SQRT_1_PI = 1.0 / math.sqrt(math.pi)

__all__ = [
    "ChebyshevKind",
    "NodeSet",
    "FilterCoefficients",
    "ortho_poly",
    "ortho_matrix",
    "nodes",
    "vp_filter",
    "gamma_coeff",
    "eta_coeff",
    "jacobi_ortho_poly",
    "jacobi_matrix",
    "darboux_kernel",
]


class ChebyshevKind(enum.Enum):
    """The four Chebyshev weights, tagged by their Jacobi exponents (alpha, beta)."""

    FIRST = (-0.5, -0.5)
    SECOND = (0.5, 0.5)
    THIRD = (-0.5, 0.5)
    FOURTH = (0.5, -0.5)

    @property
    def alpha(self) -> float:
        return self.value[0]

    @property
    def beta(self) -> float:
        return self.value[1]

    @property
    def chi(self) -> int:
        """alpha + beta, an exact integer in {-1, 1, 0, 0}."""
        return round(self.value[0] + self.value[1])

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "ChebyshevKind":
        """Parse 'w1'..'w4' (case-insensitive; plain '1'..'4' also accepted)."""
        key = label.strip().lower().lstrip("w")
        for kind, lab in _LABELS.items():
            if lab.lstrip("w") == key:
                return kind
        raise ValueError(f"unknown Chebyshev kind {label!r}; expected w1, w2, w3 or w4")

    def weight(self, x):
        """The weight function itself, evaluated on (-1, 1)."""
        x = np.asarray(x, dtype=float)
        return (1.0 - x) ** self.alpha * (1.0 + x) ** self.beta


_LABELS = {
    ChebyshevKind.FIRST: "w1",
    ChebyshevKind.SECOND: "w2",
    ChebyshevKind.THIRD: "w3",
    ChebyshevKind.FOURTH: "w4",
}


@dataclass(frozen=True)
class NodeSet:
    """Gauss-Chebyshev nodes of one kind.

    Attributes
    ----------
    kind : ChebyshevKind
    n : int
        Number of nodes.
    t : ndarray
        Angles t_k in (0, pi), strictly increasing, k = 1..n.
    x : ndarray
        Nodes x_k = cos(t_k), strictly decreasing.
    lam : ndarray
        Christoffel numbers (Gauss quadrature weights), all positive.
    """

    kind: ChebyshevKind
    n: int
    t: np.ndarray
    x: np.ndarray
    lam: np.ndarray


@dataclass(frozen=True)
class FilterCoefficients:
    """De la Vallee Poussin filter: flat up to n-m, linear decay on (n-m, n+m).

    mu[j] = 1 for j <= n-m and (n+m-j)/(2m) for n-m < j < n+m.
    """

    n: int
    m: int
    mu: np.ndarray


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _as_points(x) -> np.ndarray:
    """Validate points in [-1, 1] and return them as a float array."""
    arr = np.asarray(x, dtype=float)
    if arr.size:
        if not np.all(np.isfinite(arr)):
            raise ValueError("evaluation points must be finite")
        if np.abs(arr).max() > 1.0:
            raise ValueError("evaluation points must lie in [-1, 1]")
    return arr


def nodes(kind: ChebyshevKind, n: int) -> NodeSet:
    """Zeros of p_n(w, .) with their angles and Christoffel numbers.

    The angles are

        w1: (2k-1)pi/(2n),  w2: k pi/(n+1),
        w3: (2k-1)pi/(2n+1),  w4: 2k pi/(2n+1),    k = 1..n,

    and the Christoffel numbers are pi/n, pi/(n+1) sin^2 t_k,
    4pi/(2n+1) cos^2(t_k/2) and 4pi/(2n+1) sin^2(t_k/2) respectively.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    k = np.arange(1, n + 1, dtype=float)
    if kind is ChebyshevKind.FIRST:
        t = (2.0 * k - 1.0) * np.pi / (2.0 * n)
        lam = np.full(n, np.pi / n)
    elif kind is ChebyshevKind.SECOND:
        t = k * np.pi / (n + 1.0)
        lam = np.pi / (n + 1.0) * np.sin(t) ** 2
    elif kind is ChebyshevKind.THIRD:
        t = (2.0 * k - 1.0) * np.pi / (2.0 * n + 1.0)
        lam = 4.0 * np.pi / (2.0 * n + 1.0) * np.cos(t / 2.0) ** 2
    else:
        t = 2.0 * k * np.pi / (2.0 * n + 1.0)
        lam = 4.0 * np.pi / (2.0 * n + 1.0) * np.sin(t / 2.0) ** 2
    return NodeSet(kind, n, _freeze(t), _freeze(np.cos(t)), _freeze(lam))


def ortho_matrix(kind: ChebyshevKind, count: int, t) -> np.ndarray:
    """Stack the orthonormal polynomials of degrees 0..count-1 at angles t.

    Parameters
    ----------
    kind : ChebyshevKind
    count : int
        Number of degrees (rows).
    t : array_like
        Angles in [0, pi]; the evaluation points are x = cos(t).

    Returns
    -------
    ndarray of shape (count, len(t)) with entry (j, l) = p_j(w, cos t_l).

    Evaluation uses the trigonometric closed forms.  The quotient forms
    of kinds 2-4 are continuous extensions at the endpoint angles; the
    only floating-point pole sits at t == 0 (kinds 2 and 4), where the
    exact limit values (j+1) resp. (2j+1) are substituted.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    j = np.arange(count, dtype=float)
    if kind is ChebyshevKind.FIRST:
        P = _SQRT_2_PI * np.cos(np.outer(j, t))
        if count > 0:
            P[0] = _SQRT_1_PI
        return P
    if kind is ChebyshevKind.SECOND:
        den = np.sin(t)
        at_zero = den == 0.0
        P = _SQRT_2_PI * np.sin(np.outer(j + 1.0, t)) / np.where(at_zero, 1.0, den)
        if at_zero.any():
            P[:, at_zero] = (_SQRT_2_PI * (j + 1.0))[:, None]
        return P
    if kind is ChebyshevKind.THIRD:
        den = np.cos(t / 2.0)
        at_pole = den == 0.0
        P = _SQRT_1_PI * np.cos(np.outer(j + 0.5, t)) / np.where(at_pole, 1.0, den)
        if at_pole.any():
            P[:, at_pole] = (_SQRT_1_PI * (2.0 * j + 1.0) * (-1.0) ** j)[:, None]
        return P
    den = np.sin(t / 2.0)
    at_zero = den == 0.0
    P = _SQRT_1_PI * np.sin(np.outer(j + 0.5, t)) / np.where(at_zero, 1.0, den)
    if at_zero.any():
        P[:, at_zero] = (_SQRT_1_PI * (2.0 * j + 1.0))[:, None]
    return P


def ortho_poly(kind: ChebyshevKind, n: int, x):
    """Orthonormal Chebyshev polynomial p_n(w, x) of the given kind.

    Accepts scalars or arrays with |x| <= 1; values at x = +-1 are the
    continuous extensions of the trigonometric quotients.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    arr = _as_points(x)
    scalar = arr.ndim == 0
    out = ortho_matrix(kind, n + 1, np.arccos(np.atleast_1d(arr)))[n]
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def vp_filter(n: int, m: int) -> FilterCoefficients:
    """Filter coefficients mu_{n,j}^m for j = 0..n+m-1, requiring 0 < m < n."""
    if not 0 < m < n:
        raise ValueError("filter parameters must satisfy 0 < m < n")
    j = np.arange(n + m, dtype=float)
    mu = np.ones(n + m)
    tail = j > n - m
    mu[tail] = (n + m - j[tail]) / (2.0 * m)
    return FilterCoefficients(n, m, _freeze(mu))


def gamma_coeff(n: int, m: int, j) -> float:
    """(m + n - j) / (2m), the filtered-band mixing coefficient."""
    return (m + n - np.asarray(j, dtype=float)) / (2.0 * m)


def eta_coeff(kind: ChebyshevKind, n, r: int):
    """Derivative scaling sqrt(prod_{k=0}^{r-1}(n-k) * prod_{k=1}^{r}(n+k+chi)).

    Relates the r-th derivative of p_n(w, .) to the orthonormal polynomial
    of degree n-r for the weight w * (1-x^2)^r.  Returns 0 when n < r so
    that vanishing negative-degree terms propagate without branching.
    """
    narr = np.asarray(n, dtype=float)
    acc = np.ones_like(narr)
    for k in range(r):
        acc = acc * (narr - k)
    for k in range(1, r + 1):
        acc = acc * (narr + k + kind.chi)
    out = np.where(narr >= r, np.sqrt(np.maximum(acc, 0.0)), 0.0)
    if np.ndim(n) == 0:
        return float(out)
    return out


def _jacobi_recurrence(a: float, b: float, count: int):
    """Monic three-term recurrence coefficients for the weight (1-x)^a (1+x)^b.

    Returns (alpha, beta) arrays of length count; beta[0] is the weight's
    total mass.  The k = 1 coefficient needs its own formula (the generic
    expression degenerates when a + b is 0 or -1).
    """
    apb = a + b
    alpha = np.zeros(count)
    beta = np.zeros(count)
    alpha[0] = (b - a) / (apb + 2.0)
    beta[0] = (
        2.0 ** (apb + 1.0)
        * math.gamma(a + 1.0)
        * math.gamma(b + 1.0)
        / math.gamma(apb + 2.0)
    )
    if count > 1:
        alpha[1] = (b - a) * apb / ((apb + 2.0) * (apb + 4.0))
        beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) ** 2 * (apb + 3.0))
    if count > 2:
        k = np.arange(2, count, dtype=float)
        d = 2.0 * k + apb
        alpha[2:] = (b * b - a * a) / (d * (d + 2.0))
        beta[2:] = (
            4.0 * k * (k + a) * (k + b) * (k + apb)
            / (d * d * (d + 1.0) * (d - 1.0))
        )
    return alpha, beta


def jacobi_matrix(kind: ChebyshevKind, r: int, count: int, x) -> np.ndarray:
    """Orthonormal polynomials of degrees 0..count-1 for the weight w * (1-x^2)^r.

    For r = 0 this is the trigonometric closed form; for r >= 1 the
    orthonormal three-term recurrence with Jacobi exponents
    (alpha + r, beta + r) is used.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if r == 0:
        return ortho_matrix(kind, count, np.arccos(x))
    if count <= 0:
        return np.zeros((0, x.size))
    alpha, beta = _jacobi_recurrence(kind.alpha + r, kind.beta + r, max(count, 2))
    sqb = np.sqrt(beta)
    P = np.zeros((count, x.size))
    P[0] = 1.0 / sqb[0]
    if count > 1:
        P[1] = (x - alpha[0]) * P[0] / sqb[1]
    for k in range(1, count - 1):
        P[k + 1] = ((x - alpha[k]) * P[k] - sqb[k] * P[k - 1]) / sqb[k + 1]
    return P


def jacobi_ortho_poly(kind: ChebyshevKind, r: int, k: int, x):
    """Orthonormal Jacobi polynomial of degree k for the weight w * (1-x^2)^r."""
    if r < 0 or k < 0:
        raise ValueError("r and k must be nonnegative")
    arr = _as_points(x)
    scalar = arr.ndim == 0
    out = jacobi_matrix(kind, r, k + 1, np.atleast_1d(arr))[k]
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def darboux_kernel(kind: ChebyshevKind, r: int, x, y):
    """Reproducing kernel K_r(x, y) = sum_{j=0}^{r} p_j(w, x) p_j(w, y)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    xa = _as_points(x)
    ya = _as_points(y)
    scalar = xa.ndim == 0 and ya.ndim == 0
    xb, yb = np.broadcast_arrays(np.atleast_1d(xa), np.atleast_1d(ya))
    Px = ortho_matrix(kind, r + 1, np.arccos(xb.ravel()))
    Py = ortho_matrix(kind, r + 1, np.arccos(yb.ravel()))
    out = (Px * Py).sum(axis=0).reshape(xb.shape)
    if scalar:
        return float(out.ravel()[0])
    return out
