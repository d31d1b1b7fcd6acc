"""Construction and evaluation of the filtered interpolation polynomial.

Given samples of f at the n Chebyshev nodes of one kind, the filtered
interpolant of degree parameters (n, m) is

    V f(x) = sum_k f(x_k) Phi_{n,k}^m(x) = sum_j c_j q_{n,j}^m(w, x),
    c_j = sum_k lam_k f(x_k) p_j(w, x_k),

a polynomial of degree at most n+m-1 that interpolates f at the nodes and
reproduces every polynomial of degree at most n-m.  Evaluation at a batch
of points uses the block-transform pipeline: the sample row vector times
diag(sqrt(lam)) times the kind-scaled transform of the basis block.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import DegreePair, q_matrix
from .chebyshev import (
    ChebyshevKind,
    _as_points,
    eta_coeff,
    jacobi_matrix,
    nodes,
    ortho_matrix,
)
from .transforms import scaled_transform

__all__ = [
    "VPInterpolant",
    "build",
    "evaluate",
    "evaluate_lagrange_comparison",
    "write_values",
    "read_values",
]


@dataclass(frozen=True)
class VPInterpolant:
    """Immutable record of kind, degree parameters, node samples and coefficients.

    coeffs[j] is the discretized Fourier coefficient c_{n,j}(f); evaluation
    at the nodes recovers the samples.
    """

    kind: ChebyshevKind
    pair: DegreePair
    samples: np.ndarray
    coeffs: np.ndarray


def build(kind: ChebyshevKind, pair: DegreePair, samples) -> VPInterpolant:
    """Build the interpolant of the given node samples.

    Parameters
    ----------
    kind : ChebyshevKind
    pair : DegreePair
    samples : array_like of shape (n,)
        Values f(x_k) at the nodes of `nodes(kind, pair.n)`, k = 1..n.
    """
    f = np.asarray(samples, dtype=float)
    if f.shape != (pair.n,):
        raise ValueError(f"expected {pair.n} samples, got shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("samples must be finite")
    ns = nodes(kind, pair.n)
    Pk = ortho_matrix(kind, pair.n, ns.t)
    coeffs = Pk @ (ns.lam * f)
    f = f.copy()
    f.setflags(write=False)
    coeffs.setflags(write=False)
    return VPInterpolant(kind, pair, f, coeffs)


def evaluate(interp: VPInterpolant, points, method: str = "fast") -> np.ndarray:
    """Evaluate the interpolant at points in [-1, 1].

    method = "fast" runs the transform pipeline (samples times
    diag(sqrt(lam)) times the scaled transform of the basis block);
    method = "coeff" sums the coefficient expansion directly.  The two
    agree to roundoff and exist so that each can check the other.
    """
    pts = np.atleast_1d(_as_points(points))
    Q = q_matrix(interp.kind, interp.pair, np.arccos(pts))
    if method == "fast":
        lam = nodes(interp.kind, interp.pair.n).lam
        return (interp.samples * np.sqrt(lam)) @ scaled_transform(interp.kind, Q)
    if method == "coeff":
        return interp.coeffs @ Q
    raise ValueError(f"unknown evaluation method {method!r}")


def _barycentric_weights(kind: ChebyshevKind, n: int) -> np.ndarray:
    """Weights proportional to 1/prod_{j!=k}(x_k - x_j) at the kind's nodes.

    The node polynomial is p_n(w, .) up to a constant, so the weights are
    proportional to 1/p_n'(x_k), with the derivative expressed through the
    degree-(n-1) orthonormal polynomial of the shifted weight.
    """
    ns = nodes(kind, n)
    dp = eta_coeff(kind, n, 1) * jacobi_matrix(kind, 1, n, ns.x)[n - 1]
    return 1.0 / dp


def evaluate_lagrange_comparison(kind: ChebyshevKind, n: int, samples, points) -> np.ndarray:
    """Classical Lagrange interpolant at the same nodes (barycentric form).

    Baseline for stability and Gibbs comparisons; exact on polynomials of
    degree at most n-1.
    """
    f = np.asarray(samples, dtype=float)
    if f.shape != (n,):
        raise ValueError(f"expected {n} samples, got shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise ValueError("samples must be finite")
    pts = np.atleast_1d(_as_points(points))
    ns = nodes(kind, n)
    w = _barycentric_weights(kind, n)

    diff = pts[:, None] - ns.x[None, :]
    hit = diff == 0.0
    any_hit = hit.any(axis=1)
    diff[any_hit] = np.where(hit[any_hit], 1.0, diff[any_hit])
    ratio = w[None, :] / diff
    out = (ratio @ f) / ratio.sum(axis=1)
    if any_hit.any():
        out[any_hit] = f[hit.argmax(axis=1)[any_hit]]
    return out


def write_values(target, values) -> None:
    """Serialize a value vector as CSV, one value per line, round-trip precision."""
    vals = np.asarray(values, dtype=float).ravel()
    text = "\n".join(repr(float(v)) for v in vals) + "\n"
    if isinstance(target, (str, bytes)) or hasattr(target, "__fspath__"):
        with open(target, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        target.write(text)


def read_values(source) -> np.ndarray:
    """Read a value-per-line CSV written by `write_values`."""
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = source.read()
    lines = [ln.strip() for ln in text.splitlines()]
    return np.array([float(ln) for ln in lines if ln and not ln.startswith("#")])


def _unused_io_guard() -> None:  # keeps io import for type checkers on 3.10
    del io
