"""Dense symmetric-matrix core.

Distance and Gram matrix types, double centering, a self-contained cyclic
Jacobi eigensolver, positive-semidefiniteness tests, and the conversions
between Gram matrices and point realizations that underpin classical
multidimensional scaling.

All values are immutable after construction (backing arrays are read-only)
and every operation is a pure function of its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetricMatrixError,
    NegativeEntryError,
    NoConvergenceError,
    NonSquareError,
    NonzeroDiagonalError,
    NotPSDInputError,
)

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "DistanceMatrix",
    "GramMatrix",
    "SpectralDecomposition",
    "Realization",
    "PsdVerdict",
    "validate_distance_matrix",
    "double_center",
    "schoenberg_gram",
    "symmetric_eigendecomposition",
    "psd_verdict",
    "realization_from_gram",
    "gram_from_realization",
    "edm_from_realization",
    "center_realization",
]

JACOBI_SWEEP_CAP = 100


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


def _require_finite(a: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains non-finite entries")


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared across the toolkit.

    eig_tol : convergence threshold of the Jacobi eigensolver (off-diagonal
        Frobenius mass relative to the matrix norm).
    rank_tol : relative cutoff below which eigenvalues count as zero.
    dist_tol : relative threshold for distance comparisons.
    """

    eig_tol: float = 1e-12
    rank_tol: float = 1e-9
    dist_tol: float = 1e-8

    def __post_init__(self):
        for name in ("eig_tol", "rank_tol", "dist_tol"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric hollow nonnegative n-by-n matrix of pairwise distances.

    The constructor enforces the invariants exactly; use
    :func:`validate_distance_matrix` to admit raw data with floating-point
    slack.
    """

    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise NonSquareError(d.shape)
        if d.shape[0] == 0:
            raise ValueError("distance matrix needs at least one point")
        _require_finite(d, "distance matrix")
        if not np.array_equal(d, d.T):
            idx = np.argwhere(d != d.T)[0]
            raise AsymmetricMatrixError((int(idx[0]), int(idx[1])), abs(d[idx[0], idx[1]] - d[idx[1], idx[0]]))
        diag = np.diag(d)
        if np.any(diag != 0.0):
            i = int(np.argmax(diag != 0.0))
            raise NonzeroDiagonalError(i, diag[i])
        if np.any(d < 0.0):
            idx = np.argwhere(d < 0.0)[0]
            raise NegativeEntryError((int(idx[0]), int(idx[1])), d[idx[0], idx[1]])
        object.__setattr__(self, "d", _readonly(d))

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def restrict(self, indices) -> "DistanceMatrix":
        """Sub-matrix on the given point indices (order preserved)."""
        idx = list(indices)
        return DistanceMatrix(self.d[np.ix_(idx, idx)])


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of pairwise inner products (squared-distance units)."""

    g: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.g, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise NonSquareError(g.shape)
        if g.shape[0] == 0:
            raise ValueError("Gram matrix needs at least one point")
        _require_finite(g, "Gram matrix")
        skew = np.abs(g - g.T)
        worst = float(skew.max()) if skew.size else 0.0
        if worst > 1e-8 * max(1.0, float(np.abs(g).max())):
            idx = np.argwhere(skew == worst)[0]
            raise AsymmetricMatrixError((int(idx[0]), int(idx[1])), worst)
        object.__setattr__(self, "g", _readonly(0.5 * (g + g.T)))

    @property
    def n(self) -> int:
        return self.g.shape[0]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending) and orthonormal eigenvectors of a symmetric matrix.

    Column ``j`` of ``eigenvectors`` pairs with ``eigenvalues[j]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.eigenvalues, dtype=float)
        v = np.asarray(self.eigenvectors, dtype=float)
        if w.ndim != 1 or v.ndim != 2 or v.shape != (w.size, w.size):
            raise ValueError("eigenvalue/eigenvector shapes are inconsistent")
        if np.any(np.diff(w) > 0):
            raise ValueError("eigenvalues must be sorted in descending order")
        object.__setattr__(self, "eigenvalues", _readonly(w))
        object.__setattr__(self, "eigenvectors", _readonly(v))

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def reconstruct(self) -> np.ndarray:
        """Return Y diag(lambda) Y^T."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


@dataclass(frozen=True)
class Realization:
    """Ordered list of n points in R^k as an n-by-k coordinate array."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.ndim != 2:
            raise ValueError(f"coordinates must be a 2-d array, got shape {c.shape}")
        if c.shape[0] == 0:
            raise ValueError("realization needs at least one point")
        _require_finite(c, "realization")
        object.__setattr__(self, "coords", _readonly(c))

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def k(self) -> int:
        return self.coords.shape[1]


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of a positive-semidefiniteness test.

    ``rank`` counts eigenvalues above the relative zero threshold; it is the
    numerical rank whenever ``is_psd`` holds.  ``min_eigenvalue`` is the most
    negative (i.e. smallest) eigenvalue found.
    """

    is_psd: bool
    rank: int
    min_eigenvalue: float


def validate_distance_matrix(m, tol: Tolerances | None = None) -> DistanceMatrix:
    """Check a raw square array and return it as a typed distance matrix.

    Symmetry, a zero diagonal and nonnegativity are enforced within
    ``tol.dist_tol`` (relative to the largest entry); violations raise the
    matching validation error naming the offending index.  Entries inside
    the tolerance band are canonicalized (symmetrized, clamped to zero).
    """
    tol = tol or DEFAULT_TOLERANCES
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(arr.shape)
    if arr.shape[0] == 0:
        raise NonSquareError(arr.shape)
    _require_finite(arr, "matrix")

    scale = max(1.0, float(np.abs(arr).max()))
    atol = tol.dist_tol * scale

    skew = np.abs(arr - arr.T)
    if float(skew.max()) > atol:
        i, j = np.unravel_index(int(np.argmax(skew)), skew.shape)
        raise AsymmetricMatrixError((min(i, j), max(i, j)), skew[i, j])
    sym = 0.5 * (arr + arr.T)

    diag = np.abs(np.diag(sym))
    if float(diag.max()) > atol:
        i = int(np.argmax(diag))
        raise NonzeroDiagonalError(i, sym[i, i])

    if float(sym.min()) < -atol:
        i, j = np.unravel_index(int(np.argmin(sym)), sym.shape)
        raise NegativeEntryError((int(i), int(j)), sym[i, j])

    out = np.clip(sym, 0.0, None)
    np.fill_diagonal(out, 0.0)
    return DistanceMatrix(out)


def double_center(D: DistanceMatrix) -> GramMatrix:
    """Gram matrix of the centered configuration: G = -1/2 J D^2 J.

    J = I - (1/n) 11^T is the centering projector; D is squared elementwise.
    Rows and columns of the result sum to zero.
    """
    d2 = D.d**2
    n = D.n
    j = np.eye(n) - np.full((n, n), 1.0 / n)
    g = -0.5 * (j @ d2 @ j)
    return GramMatrix(0.5 * (g + g.T))


def schoenberg_gram(D: DistanceMatrix) -> GramMatrix:
    """Gram matrix anchored at point 0: G_ij = (d_0i^2 + d_0j^2 - d_ij^2) / 2.

    The output is (n-1)-by-(n-1), indexed by points 1..n-1.  It is PSD
    exactly when ``D`` is a Euclidean distance matrix, and its rank is the
    minimal embedding dimension.
    """
    if D.n < 2:
        raise ValueError("anchored Gram matrix needs at least 2 points")
    d2 = D.d**2
    row = d2[0, 1:]
    g = 0.5 * (row[:, None] + row[None, :] - d2[1:, 1:])
    return GramMatrix(g)


def _jacobi(a: np.ndarray, eig_tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations on a symmetric matrix (modified in place).

    Returns (eigenvalues, eigenvector columns), unsorted.  Converges when the
    off-diagonal Frobenius mass drops below ``eig_tol`` times the norm of the
    input; raises NoConvergenceError after the sweep cap.
    """
    n = a.shape[0]
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if n == 1:
        return np.diag(a).copy(), v
    polished = False
    for _ in range(JACOBI_SWEEP_CAP):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= eig_tol * norm:
            # One extra sweep once the criterion fires: quadratic convergence
            # pushes the off-diagonal mass to the machine floor, which the
            # reconstruction guarantee needs.
            if polished or off == 0.0:
                return np.diag(a).copy(), v
            polished = True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                theta = diff / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)

                app, aqq = a[p, p], a[q, q]
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = ap - s * (aq + tau * ap)
                a[:, q] = aq + s * (ap - tau * aq)
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp - s * (vq + tau * vp)
                v[:, q] = vq + s * (vp - tau * vq)
    raise NoConvergenceError(
        f"Jacobi eigensolver did not converge within {JACOBI_SWEEP_CAP} sweeps"
    )


def symmetric_eigendecomposition(
    g: GramMatrix | np.ndarray, tol: Tolerances | None = None
) -> SpectralDecomposition:
    """Full spectral decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Eigenvalues come back sorted in descending order with matching
    eigenvector columns.  The reconstruction Y diag(lambda) Y^T matches the
    input to ``tol.eig_tol`` relative accuracy.
    """
    tol = tol or DEFAULT_TOLERANCES
    a = np.array(g.g if isinstance(g, GramMatrix) else g, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(a.shape)
    w, v = _jacobi(a, tol.eig_tol)
    order = np.argsort(-w, kind="stable")
    return SpectralDecomposition(w[order], v[:, order])


def _psd_from_spectrum(w: np.ndarray, tol: Tolerances) -> PsdVerdict:
    threshold = tol.rank_tol * max(1.0, float(w[0]))
    return PsdVerdict(
        is_psd=bool(w[-1] >= -threshold),
        rank=int(np.sum(w > threshold)),
        min_eigenvalue=float(w[-1]),
    )


def psd_verdict(g: GramMatrix | np.ndarray, tol: Tolerances | None = None) -> PsdVerdict:
    """Decide positive semidefiniteness and numerical rank.

    A matrix passes when its smallest eigenvalue is above
    ``-rank_tol * max(1, lambda_max)``; the rank counts eigenvalues above
    the same threshold.
    """
    tol = tol or DEFAULT_TOLERANCES
    dec = symmetric_eigendecomposition(g, tol)
    return _psd_from_spectrum(dec.eigenvalues, tol)


def realization_from_gram(g: GramMatrix, tol: Tolerances | None = None) -> Realization:
    """Factor a PSD Gram matrix into point coordinates: x = Y sqrt(lambda).

    Only eigenvalues above the rank threshold contribute columns, so the
    ambient dimension equals the numerical rank.  Raises NotPSDInputError
    when the matrix has a significantly negative eigenvalue.
    """
    tol = tol or DEFAULT_TOLERANCES
    dec = symmetric_eigendecomposition(g, tol)
    verdict = _psd_from_spectrum(dec.eigenvalues, tol)
    if not verdict.is_psd:
        raise NotPSDInputError(verdict.min_eigenvalue)
    k = verdict.rank
    lam = np.clip(dec.eigenvalues[:k], 0.0, None)
    coords = dec.eigenvectors[:, :k] * np.sqrt(lam)
    return Realization(coords)


def gram_from_realization(x: Realization) -> GramMatrix:
    """Pairwise inner products of the rows of x: G = x x^T."""
    g = x.coords @ x.coords.T
    return GramMatrix(0.5 * (g + g.T))


def edm_from_realization(x: Realization) -> DistanceMatrix:
    """Euclidean distance matrix of the rows of x."""
    diff = x.coords[:, None, :] - x.coords[None, :, :]
    d = np.sqrt((diff**2).sum(axis=-1))
    return DistanceMatrix(d)


def center_realization(x: Realization) -> Realization:
    """Translate so the barycenter sits at the origin; distances are unchanged."""
    return Realization(x.coords - x.coords.mean(axis=0))
