"""Classical multidimensional scaling, EDM classification, and trilateration.

The exact-EDM test is the positive-semidefiniteness of the double-centered
squared-distance matrix; classical MDS keeps the eigenvectors of its
positive eigenvalues to recover coordinates, which also yields the inherent
dimensionality of the input distances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentAnchorsError, NoSolutionError
from .matrices import (
    DEFAULT_TOLERANCES,
    DistanceMatrix,
    Realization,
    Tolerances,
    _psd_from_spectrum,
    double_center,
    edm_from_realization,
    symmetric_eigendecomposition,
)

__all__ = [
    "EdmClassification",
    "MdsResult",
    "TrilaterationProblem",
    "classify_edm",
    "classical_mds",
    "trilaterate",
]


@dataclass(frozen=True)
class EdmClassification:
    """Whether a distance matrix is a Euclidean distance matrix.

    ``dim`` is the minimal embedding dimension when ``is_edm`` holds.
    ``witness_eigenvalue`` is the smallest eigenvalue of the centered Gram
    matrix; it is significantly negative exactly when the verdict is
    negative.
    """

    is_edm: bool
    dim: int
    witness_eigenvalue: float


@dataclass(frozen=True)
class MdsResult:
    """Outcome of classical multidimensional scaling.

    ``eigenvalues`` is the full descending spectrum of the centered Gram
    matrix, negatives included.  ``inherent_dim`` equals the number of
    coordinate columns kept (positive eigenvalues above the rank threshold,
    possibly capped).  ``residual`` is the largest relative error between
    the realized and input distances.
    """

    realization: Realization
    eigenvalues: np.ndarray
    inherent_dim: int
    residual: float


@dataclass(frozen=True)
class TrilaterationProblem:
    """Known anchor points plus measured distances to one unknown point."""

    anchors: Realization
    dists: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.dists, dtype=float)
        if d.ndim != 1 or d.size != self.anchors.n:
            raise ValueError(
                f"need one distance per anchor: {self.anchors.n} anchors, {d.size} distances"
            )
        if not np.all(np.isfinite(d)) or np.any(d < 0):
            raise ValueError("distances must be finite and nonnegative")
        d = d.copy()
        d.setflags(write=False)
        object.__setattr__(self, "dists", d)


def classify_edm(D: DistanceMatrix, tol: Tolerances | None = None) -> EdmClassification:
    """Decide whether D is the distance matrix of points in some R^r.

    D is an EDM exactly when the double-centered Gram matrix is PSD; the
    minimal embedding dimension is that matrix's rank.
    """
    tol = tol or DEFAULT_TOLERANCES
    dec = symmetric_eigendecomposition(double_center(D), tol)
    verdict = _psd_from_spectrum(dec.eigenvalues, tol)
    return EdmClassification(verdict.is_psd, verdict.rank, verdict.min_eigenvalue)


def _max_relative_distance_error(realized: np.ndarray, target: np.ndarray) -> float:
    n = target.shape[0]
    if n < 2:
        return 0.0
    iu = np.triu_indices(n, 1)
    want = target[iu]
    got = realized[iu]
    floor = max(float(target.max()), 1.0)
    denom = np.where(want > 0, want, floor)
    return float(np.max(np.abs(got - want) / denom))


def classical_mds(
    D: DistanceMatrix,
    tol: Tolerances | None = None,
    dim_cap: int | None = None,
) -> MdsResult:
    """Embed a (possibly non-Euclidean) distance matrix by classical MDS.

    Double-center the squared distances, eigendecompose, and keep the
    eigenvector columns of eigenvalues above ``rank_tol * max(1, lambda_max)``
    scaled by the square roots of those eigenvalues.  ``dim_cap`` truncates
    to the leading dimensions.  Approximate input is the intended use; the
    returned spectrum includes any negative eigenvalues so callers can judge
    how non-Euclidean the input was.
    """
    tol = tol or DEFAULT_TOLERANCES
    dec = symmetric_eigendecomposition(double_center(D), tol)
    w = dec.eigenvalues
    threshold = tol.rank_tol * max(1.0, float(w[0]))
    h = int(np.sum(w > threshold))
    if dim_cap is not None:
        if dim_cap < 0:
            raise ValueError("dim_cap must be nonnegative")
        h = min(h, dim_cap)
    coords = dec.eigenvectors[:, :h] * np.sqrt(np.clip(w[:h], 0.0, None))
    realization = Realization(coords)
    realized = edm_from_realization(realization)
    residual = _max_relative_distance_error(realized.d, D.d)
    return MdsResult(realization, w, h, residual)


def trilaterate(p: TrilaterationProblem, tol: Tolerances | None = None) -> Realization:
    """Locate the unknown point from anchor distances.

    Subtracting the first sphere equation from the others linearizes the
    system; least squares solves it, and the candidate is accepted only if
    it reproduces every measured distance within ``dist_tol`` (relative).

    Raises DependentAnchorsError when the anchors do not affinely span the
    ambient space, and NoSolutionError (carrying the worst residual) when
    the distances are inconsistent.
    """
    tol = tol or DEFAULT_TOLERANCES
    anchors = p.anchors.coords
    m, k = anchors.shape
    if k == 0:
        raise DependentAnchorsError("anchors live in a zero-dimensional space")
    if m < k + 1:
        raise DependentAnchorsError(
            f"need at least {k + 1} anchors in {k} dimensions, got {m}"
        )
    a = 2.0 * (anchors[1:] - anchors[0])
    b = (
        (anchors[1:] ** 2).sum(axis=1)
        - (anchors[0] ** 2).sum()
        - (p.dists[1:] ** 2 - p.dists[0] ** 2)
    )
    solution, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < k:
        raise DependentAnchorsError("anchors are affinely dependent")

    realized = np.linalg.norm(anchors - solution, axis=1)
    residual = float(np.max(np.abs(realized - p.dists) / np.maximum(1.0, p.dists)))
    if residual > tol.dist_tol:
        raise NoSolutionError(residual)
    return Realization(solution[None, :])
