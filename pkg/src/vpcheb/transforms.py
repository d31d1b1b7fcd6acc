"""Discrete cosine/sine block transforms and the fundamental-polynomial matrix.

Four transforms act column-wise on a real n x N data block A = {a_{j,l}}:

    IDC: b_{s,l} = sum_j w_j a_{j,l} cos[j (2s-1) pi / (2n)],
         w_0 = sqrt(1/n), w_j = sqrt(2/n) otherwise
    IDS: b_{s,l} = 2/(n+1) sum_j a_{j,l} sin[(j+1) s pi / (n+1)]
    GDC: b_{s,l} = 2 sum_j a_{j,l} cos[(2j+1)(2s-1) pi / (2(2n+1))]
    GDS: b_{s,l} = 2 sum_j a_{j,l} sin[(2j+1) s pi / (2n+1)]

with s = 1..n.  The GDS angle is (2j+1) t_s / 2 with t_s = 2 s pi/(2n+1)
the fourth-kind node angles; this is the choice for which the scaled
transform of the filtered basis reproduces the fourth-kind fundamental
polynomials exactly (the variant with denominator 2(n+1) does not).

Each transform ships in two forms: a fast path (FFT-based) and a naive
O(n^2 N) summation kept as the reference.  Applied to the filtered-basis
block Q = [q_{n,j}^m(w, z_l)] and scaled per kind, the transforms produce
the matrix with entries Phi_{n,k}^m(z_l) / sqrt(lam_k); the remaining
sqrt(lam_k) either multiplies the sample vector (evaluation pipeline) or
the rows (phi_matrix).
"""

from __future__ import annotations

import numpy as np
import scipy.fft

from .basis import DegreePair, q_deriv_matrix, q_matrix
from .chebyshev import ChebyshevKind, _as_points, nodes

__all__ = [
    "idc",
    "ids",
    "gdc",
    "gds",
    "idc_naive",
    "ids_naive",
    "gdc_naive",
    "gds_naive",
    "scaled_transform",
    "phi_matrix",
    "phi_deriv_matrix",
]


def _as_block(A):
    """Validate a transform input; returns (2-D array, had_single_column)."""
    arr = np.asarray(A, dtype=float)
    if arr.ndim == 1:
        return arr[:, None], True
    if arr.ndim != 2:
        raise ValueError("transform input must be a vector or a matrix")
    if arr.shape[0] == 0:
        raise ValueError("transform input must have at least one row")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("transform input must be finite")
    return arr, False


def _restore(B, squeeze):
    return B[:, 0] if squeeze else B


# ---------------------------------------------------------------------------
# fast paths


def idc(A):
    """Inverse discrete cosine transform (orthonormal DCT-III column-wise)."""
    arr, squeeze = _as_block(A)
    return _restore(scipy.fft.idct(arr, type=2, axis=0, norm="ortho"), squeeze)


def ids(A):
    """Inverse discrete sine transform (DST-I scaled by 1/(n+1))."""
    arr, squeeze = _as_block(A)
    return _restore(scipy.fft.dst(arr, type=1, axis=0) / (arr.shape[0] + 1.0), squeeze)


def gdc(A):
    """Generalized discrete cosine transform, via a length-2(2n+1) real FFT.

    Both row and column frequencies are odd half-integers, so the block is
    zero-padded to length 2(2n+1), transformed, and the odd bins are
    rotated back by the residual half-sample phase.
    """
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    L = 2 * n + 1
    pad = np.zeros((2 * L, arr.shape[1]))
    pad[:n] = arr
    F = np.fft.rfft(pad, axis=0)
    s = np.arange(1, n + 1)
    tw = np.exp(1j * np.pi * (2 * s - 1) / (2.0 * L))
    return _restore(2.0 * np.real(tw[:, None] * np.conj(F[2 * s - 1])), squeeze)


def gds(A):
    """Generalized discrete sine transform, via a length-2(2n+1) real FFT.

    Row j is placed in slot 2j+1 of a zero-padded length-2(2n+1) block, so
    bin s of the FFT carries exactly the odd-frequency sine sum.
    """
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    L = 2 * n + 1
    pad = np.zeros((2 * L, arr.shape[1]))
    pad[1 : 2 * n : 2] = arr
    F = np.fft.rfft(pad, axis=0)
    s = np.arange(1, n + 1)
    return _restore(-2.0 * np.imag(F[s]), squeeze)


# ---------------------------------------------------------------------------
# naive reference paths

# The angle multipliers are integers; reducing them modulo the trig period
# before multiplying by pi/denominator keeps every argument below 2*pi and
# the reference accurate at large n.


def idc_naive(A):
    """IDC by direct summation."""
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    w = np.full(n, np.sqrt(2.0 / n))
    w[0] = np.sqrt(1.0 / n)
    j = np.arange(n)
    s = np.arange(1, n + 1)
    idx = np.outer(2 * s - 1, j) % (4 * n)
    M = np.cos(idx * (np.pi / (2.0 * n))) * w[None, :]
    return _restore(M @ arr, squeeze)


def ids_naive(A):
    """IDS by direct summation."""
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    j = np.arange(n)
    s = np.arange(1, n + 1)
    idx = np.outer(s, j + 1) % (2 * (n + 1))
    M = np.sin(idx * (np.pi / (n + 1.0))) * (2.0 / (n + 1.0))
    return _restore(M @ arr, squeeze)


def gdc_naive(A):
    """GDC by direct summation."""
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    L = 2 * n + 1
    j = np.arange(n)
    s = np.arange(1, n + 1)
    idx = np.outer(2 * s - 1, 2 * j + 1) % (4 * L)
    M = 2.0 * np.cos(idx * (np.pi / (2.0 * L)))
    return _restore(M @ arr, squeeze)


def gds_naive(A):
    """GDS by direct summation."""
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    L = 2 * n + 1
    j = np.arange(n)
    s = np.arange(1, n + 1)
    idx = np.outer(s, 2 * j + 1) % (2 * L)
    M = 2.0 * np.sin(idx * (np.pi / L))
    return _restore(M @ arr, squeeze)


# ---------------------------------------------------------------------------
# fundamental-polynomial pipelines


def scaled_transform(kind: ChebyshevKind, A) -> np.ndarray:
    """Apply the kind-specific scaled block transform.

    IDC for the first kind, sqrt((n+1)/2) IDS for the second, and the
    generalized transforms divided by sqrt(2n+1) for the third and fourth.
    Fed with the basis block Q the result has entries
    Phi_{n,k}^m(z_l) / sqrt(lam_k).
    """
    arr, squeeze = _as_block(A)
    n = arr.shape[0]
    if kind is ChebyshevKind.FIRST:
        out = idc(arr)
    elif kind is ChebyshevKind.SECOND:
        out = np.sqrt((n + 1.0) / 2.0) * ids(arr)
    elif kind is ChebyshevKind.THIRD:
        out = gdc(arr) / np.sqrt(2.0 * n + 1.0)
    else:
        out = gds(arr) / np.sqrt(2.0 * n + 1.0)
    return _restore(out, squeeze)


def phi_matrix(kind: ChebyshevKind, pair: DegreePair, points) -> np.ndarray:
    """Fundamental polynomials at arbitrary points, entry (k-1, l) = Phi_{n,k}^m(z_l).

    Computed as the kind-scaled block transform of Q = [q_{n,j}^m(w, z_l)]
    with row k multiplied by sqrt(lam_k).
    """
    pts = np.atleast_1d(_as_points(points))
    Q = q_matrix(kind, pair, np.arccos(pts))
    T = scaled_transform(kind, Q)
    return np.sqrt(nodes(kind, pair.n).lam)[:, None] * T


def phi_deriv_matrix(kind: ChebyshevKind, pair: DegreePair, r: int, points) -> np.ndarray:
    """r-th derivatives of the fundamental polynomials via the same transforms.

    Identical pipeline to phi_matrix with the basis block replaced by its
    elementwise r-th derivative block.
    """
    pts = np.atleast_1d(_as_points(points))
    Qr = q_deriv_matrix(kind, pair, r, pts)
    T = scaled_transform(kind, Qr)
    return np.sqrt(nodes(kind, pair.n).lam)[:, None] * T
