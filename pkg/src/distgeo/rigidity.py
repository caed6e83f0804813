"""Combinatorial checks used in polyhedral rigidity arguments.

Sign-change counting around a cyclic sequence (always even) and the Euler
characteristic test V + F - E = 2 for polyhedral count data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "CyclicSignSequence",
    "PolyhedralCounts",
    "cyclic_sign_changes",
    "euler_characteristic_holds",
]

_ALLOWED = (-1, 0, 1)


@dataclass(frozen=True)
class CyclicSignSequence:
    """Ordered entries over {-1, 0, +1}, interpreted cyclically."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if any(e not in _ALLOWED for e in entries):
            raise ValueError(f"entries must be -1, 0 or +1, got {entries}")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class PolyhedralCounts:
    """Vertex, edge and face counts of a polyhedral surface."""

    vertices: int
    edges: int
    faces: int

    def __post_init__(self):
        for name in ("vertices", "edges", "faces"):
            value = getattr(self, name)
            if not (isinstance(value, int) and value >= 0):
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def cyclic_sign_changes(s: CyclicSignSequence | Sequence[int]) -> int:
    """Number of sign changes around the cycle, zeros dropped first.

    The change between the last and first nonzero entries counts too, so
    the result is always even.  Fewer than two nonzero entries give 0.
    """
    entries = s.entries if isinstance(s, CyclicSignSequence) else CyclicSignSequence(tuple(s)).entries
    signs = [e for e in entries if e != 0]
    if len(signs) < 2:
        return 0
    count = 0
    previous = signs[-1]
    for current in signs:
        if current != previous:
            count += 1
        previous = current
    return count


def euler_characteristic_holds(c: PolyhedralCounts) -> bool:
    """True exactly when V + F - E = 2."""
    return c.vertices + c.faces - c.edges == 2
