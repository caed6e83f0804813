"""Finite semi-metric spaces, congruence, and embeddability in R^n.

A semi-metric space assigns a symmetric positive distance to every pair of
distinct points; the triangle inequality is NOT required.  Congruence
between two spaces is a distance-preserving bijection.  Embeddability of a
space in R^n is decided two independent ways: through the PSD test on the
centered Gram matrix, and through the finitistic criterion that checks
small subsets only -- an independent (n+1)-point base plus vanishing
bordered determinants on all (n+2)- and (n+3)-point subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import SizeMismatchError, TooLargeError, ZeroOffDiagonalError
from .matrices import (
    DEFAULT_TOLERANCES,
    DistanceMatrix,
    Realization,
    Tolerances,
    double_center,
    realization_from_gram,
    validate_distance_matrix,
)
from .embedding import classify_edm
from .simplex import SimplexSides, is_flat

__all__ = [
    "CONGRUENCE_SEARCH_CAP",
    "MENGER_SUBSET_CAP",
    "FiniteSemiMetricSpace",
    "CongruenceWitness",
    "EmbeddabilityVerdict",
    "MengerReport",
    "validate_semi_metric",
    "find_congruence",
    "congruently_embeddable",
    "verify_menger_criterion",
]

CONGRUENCE_SEARCH_CAP = 10
MENGER_SUBSET_CAP = 12


@dataclass(frozen=True)
class FiniteSemiMetricSpace:
    """Labelled finite point set with symmetric positive pairwise distances."""

    labels: tuple
    d: DistanceMatrix

    def __post_init__(self):
        if len(self.labels) != self.d.n:
            raise ValueError(
                f"{len(self.labels)} labels for {self.d.n} points"
            )
        off = self.d.d + np.eye(self.d.n)
        if np.any(off <= 0.0):
            idx = np.argwhere(off <= 0.0)[0]
            raise ZeroOffDiagonalError((int(idx[0]), int(idx[1])))
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return self.d.n

    def restrict(self, indices) -> "FiniteSemiMetricSpace":
        idx = list(indices)
        return FiniteSemiMetricSpace(
            tuple(self.labels[i] for i in idx), self.d.restrict(idx)
        )


@dataclass(frozen=True)
class CongruenceWitness:
    """Bijection between index sets: point i of the source maps to mapping[i]."""

    mapping: tuple

    def __post_init__(self):
        m = tuple(int(i) for i in self.mapping)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"mapping {m} is not a permutation")
        object.__setattr__(self, "mapping", m)

    def inverse(self) -> "CongruenceWitness":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return CongruenceWitness(tuple(inv))

    def compose(self, other: "CongruenceWitness") -> "CongruenceWitness":
        """Witness mapping i -> other.mapping[self.mapping[i]]."""
        return CongruenceWitness(tuple(other.mapping[j] for j in self.mapping))


@dataclass(frozen=True)
class EmbeddabilityVerdict:
    """Result of the embeddability test for a fixed target dimension.

    When embeddable, ``realization`` holds coordinates (in the minimal
    dimension, at most the requested one).  Otherwise ``failing_subset`` is
    the lexicographically smallest subset of minimal size that is itself not
    embeddable, restricted to at most dim+3 points.
    """

    embeddable: bool
    dim: int
    realization: Realization | None = None
    failing_subset: tuple | None = None


@dataclass(frozen=True)
class MengerReport:
    """Per-condition outcome of the finitistic embeddability criterion.

    Conditions:
      base  -- every min(dim+1, n)-point subset is itself a Euclidean
               distance matrix;
      flat2 -- the bordered determinant vanishes on every (dim+2)-subset;
      flat3 -- the bordered determinant vanishes on every (dim+3)-subset;
      flat3_anchored -- same, restricted to (dim+3)-subsets containing the
               independent anchor subset (the theorem-statement reading;
               checked only when an anchor exists).

    ``anchor_subset`` is the first (dim+1)-subset realizing dimension
    exactly ``dim``; it exists iff the space needs all of R^dim.  The
    overall ``embeddable`` verdict is base and flat2 and flat3, which by
    the finitistic characterization agrees with the PSD route.
    """

    dim: int
    embeddable: bool
    anchor_subset: tuple | None
    base_size: int
    base_checked: int
    base_failures: tuple
    flat2_checked: int
    flat2_failures: tuple
    flat3_checked: int
    flat3_failures: tuple
    flat3_anchored_checked: int
    flat3_anchored_failures: tuple


def validate_semi_metric(
    m, labels=None, tol: Tolerances | None = None
) -> FiniteSemiMetricSpace:
    """Validate a raw square array as a finite semi-metric space.

    On top of the distance-matrix checks (symmetry, hollowness,
    nonnegativity), off-diagonal entries must be strictly positive:
    distinct points at distance zero violate the model where zero distance
    identifies points.  Triangle-inequality violations are accepted.
    """
    dm = validate_distance_matrix(m, tol)
    if labels is None:
        labels = tuple(range(dm.n))
    return FiniteSemiMetricSpace(tuple(labels), dm)


def find_congruence(
    s: FiniteSemiMetricSpace,
    t: FiniteSemiMetricSpace,
    tol: Tolerances | None = None,
) -> CongruenceWitness | None:
    """Search for a distance-preserving bijection from s onto t.

    Exhaustive backtracking over point assignments, capped at
    CONGRUENCE_SEARCH_CAP points per space.  Returns the lexicographically
    smallest witness, or None when the spaces are not congruent.
    """
    tol = tol or DEFAULT_TOLERANCES
    if s.n != t.n:
        raise SizeMismatchError(s.n, t.n)
    if s.n > CONGRUENCE_SEARCH_CAP:
        raise TooLargeError(s.n, CONGRUENCE_SEARCH_CAP)

    ds = s.d.d
    dt = t.d.d
    n = s.n
    atol = tol.dist_tol * max(1.0, float(ds.max()), float(dt.max()))

    assigned = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for candidate in range(n):
            if used[candidate]:
                continue
            ok = True
            for j in range(i):
                if abs(ds[i, j] - dt[candidate, assigned[j]]) > atol:
                    ok = False
                    break
            if ok:
                assigned[i] = candidate
                used[candidate] = True
                if extend(i + 1):
                    return True
                used[candidate] = False
                assigned[i] = -1
        return False

    if extend(0):
        return CongruenceWitness(tuple(assigned))
    return None


def _subset_embeddable(D: DistanceMatrix, dim: int, tol: Tolerances) -> bool:
    c = classify_edm(D, tol)
    return c.is_edm and c.dim <= dim


def congruently_embeddable(
    s: FiniteSemiMetricSpace, dim: int, tol: Tolerances | None = None
) -> EmbeddabilityVerdict:
    """Decide whether the space embeds in R^dim, with a witness either way.

    Embeddable exactly when the distance matrix is an EDM of rank at most
    ``dim``; the witness realization comes from the centered Gram
    factorization.  When not embeddable, subsets are enumerated by size
    (then lexicographically) up to dim+3 points, and the first subset that
    itself fails the test is reported -- by the finitistic characterization
    such a small witness always exists.
    """
    tol = tol or DEFAULT_TOLERANCES
    if dim < 0:
        raise ValueError("dimension must be nonnegative")
    c = classify_edm(s.d, tol)
    if c.is_edm and c.dim <= dim:
        realization = realization_from_gram(double_center(s.d), tol)
        return EmbeddabilityVerdict(True, dim, realization=realization)

    n = s.n
    for size in range(2, min(n, dim + 3) + 1):
        for subset in combinations(range(n), size):
            if not _subset_embeddable(s.d.restrict(subset), dim, tol):
                return EmbeddabilityVerdict(False, dim, failing_subset=subset)
    # Numerically possible when the whole space sits right at the verdict
    # threshold while every small subset clears it; report without witness.
    return EmbeddabilityVerdict(False, dim, failing_subset=None)


def verify_menger_criterion(
    s: FiniteSemiMetricSpace, dim: int, tol: Tolerances | None = None
) -> MengerReport:
    """Run the finitistic embeddability criterion subset by subset.

    Checks, for n = ``dim``: (base) every min(n+1, |S|)-point subset is a
    Euclidean distance matrix; (flat2) every (n+2)-point subset has a
    vanishing bordered determinant; (flat3) every (n+3)-point subset has a
    vanishing bordered determinant.  The determinant test uses the
    unit-invariant flatness threshold.  Both quantifier readings of the
    third condition are reported: over all (n+3)-subsets, and only over
    those containing the independent anchor subset.
    """
    tol = tol or DEFAULT_TOLERANCES
    if dim < 0:
        raise ValueError("dimension must be nonnegative")
    n = s.n
    if n > MENGER_SUBSET_CAP:
        raise TooLargeError(n, MENGER_SUBSET_CAP)

    points = range(n)

    base_size = min(dim + 1, n)
    base_failures = []
    base_checked = 0
    for subset in combinations(points, base_size):
        base_checked += 1
        if not _subset_embeddable(s.d.restrict(subset), dim, tol):
            base_failures.append(subset)

    anchor = None
    if n >= dim + 1:
        for subset in combinations(points, dim + 1):
            c = classify_edm(s.d.restrict(subset), tol)
            if c.is_edm and c.dim == dim:
                anchor = subset
                break

    def flat_failures(size: int, must_contain: tuple | None):
        checked = 0
        failures = []
        if size > n:
            return checked, tuple(failures)
        for subset in combinations(points, size):
            if must_contain is not None and not set(must_contain) <= set(subset):
                continue
            checked += 1
            if not is_flat(SimplexSides(s.d.restrict(subset)), tol):
                failures.append(subset)
        return checked, tuple(failures)

    flat2_checked, flat2_fail = flat_failures(dim + 2, None)
    flat3_checked, flat3_fail = flat_failures(dim + 3, None)
    if anchor is not None:
        flat3a_checked, flat3a_fail = flat_failures(dim + 3, anchor)
    else:
        flat3a_checked, flat3a_fail = 0, ()

    embeddable = not base_failures and not flat2_fail and not flat3_fail
    return MengerReport(
        dim=dim,
        embeddable=embeddable,
        anchor_subset=anchor,
        base_size=base_size,
        base_checked=base_checked,
        base_failures=tuple(base_failures),
        flat2_checked=flat2_checked,
        flat2_failures=flat2_fail,
        flat3_checked=flat3_checked,
        flat3_failures=flat3_fail,
        flat3_anchored_checked=flat3a_checked,
        flat3_anchored_failures=flat3a_fail,
    )
