"""Simplex geometry from side lengths.

Triangle area and inradius from the semiperimeter product, Cayley-Menger
determinants of the bordered squared-distance matrix, simplex volumes in any
dimension, and a unit-invariant flatness test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleError
from .matrices import DEFAULT_TOLERANCES, DistanceMatrix, Tolerances

__all__ = [
    "TriangleSides",
    "SimplexSides",
    "heron_area",
    "inradius",
    "cayley_menger_determinant",
    "simplex_volume",
    "is_flat",
]


@dataclass(frozen=True)
class TriangleSides:
    """Three positive side lengths; the semiperimeter s is derived."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"side {name} must be a positive real, got {value!r}")

    @property
    def s(self) -> float:
        return 0.5 * (self.a + self.b + self.c)


@dataclass(frozen=True)
class SimplexSides:
    """Side-length matrix of an (m-1)-simplex on m >= 2 vertices."""

    d: DistanceMatrix

    def __post_init__(self):
        if self.d.n < 2:
            raise ValueError("a simplex needs at least 2 vertices")

    @property
    def m(self) -> int:
        return self.d.n

    @classmethod
    def from_triangle(cls, t: TriangleSides) -> "SimplexSides":
        m = np.array([[0.0, t.a, t.b], [t.a, 0.0, t.c], [t.b, t.c, 0.0]])
        return cls(DistanceMatrix(m))


def heron_area(t: TriangleSides) -> float:
    """Triangle area sqrt(s (s-a) (s-b) (s-c)).

    Raises InfeasibleError carrying the negative radicand when no triangle
    has these side lengths.
    """
    s = t.s
    radicand = s * (s - t.a) * (s - t.b) * (s - t.c)
    if radicand < 0.0:
        raise InfeasibleError("no triangle with these side lengths", radicand)
    return math.sqrt(radicand)


def inradius(t: TriangleSides) -> float:
    """Radius of the inscribed circle: sqrt(xyz / (x+y+z)) with x,y,z = s-a, s-b, s-c.

    Equals heron_area(t) / s.  Raises InfeasibleError when any of x, y, z is
    negative.
    """
    s = t.s
    x, y, z = s - t.a, s - t.b, s - t.c
    smallest = min(x, y, z)
    if smallest < 0.0:
        raise InfeasibleError("no triangle with these side lengths", smallest)
    return math.sqrt(max(x * y * z, 0.0) / (x + y + z))


def _det_partial_pivot(m: np.ndarray) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    det = 1.0
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0.0:
            return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= factors[:, None] * a[col, col:]
    return det


def _bordered_matrix(d: np.ndarray) -> np.ndarray:
    m = d.shape[0]
    b = np.empty((m + 1, m + 1))
    b[:m, :m] = d**2
    b[:m, m] = 1.0
    b[m, :m] = 1.0
    b[m, m] = 0.0
    return b


def cayley_menger_determinant(s: SimplexSides) -> float:
    """Determinant of the squared-distance matrix bordered by a row and column of ones.

    For m vertices this is the (m+1)-by-(m+1) determinant whose sign
    alternates with the dimension; it vanishes exactly on flat simplices.
    """
    return _det_partial_pivot(_bordered_matrix(s.d.d))


def simplex_volume(s: SimplexSides, tol: Tolerances | None = None) -> float:
    """Volume of the (m-1)-simplex with the given side lengths.

    Uses V_n^2 = (-1)^(n-1) / (2^n (n!)^2) * det with n = m-1.  A squared
    volume inside -rank_tol (scaled by the largest squared distance to the
    n-th power) clamps to zero; anything more negative raises
    InfeasibleError carrying the squared volume.
    """
    tol = tol or DEFAULT_TOLERANCES
    n = s.m - 1
    delta = cayley_menger_determinant(s)
    v2 = ((-1.0) ** (n - 1) / (2.0**n * math.factorial(n) ** 2)) * delta
    dmax = float(s.d.d.max())
    scale = max(1.0, dmax ** (2 * n))
    if v2 < -tol.rank_tol * scale:
        raise InfeasibleError("side lengths are not realizable", v2)
    return math.sqrt(max(v2, 0.0))


def is_flat(s: SimplexSides, tol: Tolerances | None = None) -> bool:
    """True when the simplex has zero volume within tolerance.

    The determinant is normalized by (max squared distance)^(m-1) so the
    test does not depend on measurement units.
    """
    tol = tol or DEFAULT_TOLERANCES
    delta = cayley_menger_determinant(s)
    dmax2 = float((s.d.d ** 2).max())
    return abs(delta) <= tol.rank_tol * dmax2 ** (s.m - 1)
