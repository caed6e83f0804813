"""Simplex volumes from side lengths alone.

The bordered determinant of squared distances measures simplex volume in
any dimension: for triangles it reproduces the semiperimeter-product
formula, for a regular tetrahedron the textbook volume, and it vanishes on
flat configurations.
"""

import math

import numpy as np

from distgeo import (
    DistanceMatrix,
    SimplexSides,
    TriangleSides,
    cayley_menger_determinant,
    heron_area,
    inradius,
    is_flat,
    simplex_volume,
)


def main():
    t = TriangleSides(3, 4, 5)
    print(f"triangle (3,4,5): area={heron_area(t)}, inradius={inradius(t)}")
    s = SimplexSides.from_triangle(t)
    print(f"bordered determinant={cayley_menger_determinant(s)}  (equals -16 * 36)")
    print(f"volume route gives the same area: {simplex_volume(s)}")

    tetra = SimplexSides(DistanceMatrix(np.ones((4, 4)) - np.eye(4)))
    print(f"\nregular tetrahedron side 1: volume={simplex_volume(tetra):.12f}")
    print(f"analytic 1/(6 sqrt 2)      = {1 / (6 * math.sqrt(2)):.12f}")

    s2 = math.sqrt(2)
    square = SimplexSides(
        DistanceMatrix([[0, 1, s2, 1], [1, 0, 1, s2], [s2, 1, 0, 1], [1, s2, 1, 0]])
    )
    print(f"\nunit square corners as a 'tetrahedron': flat={is_flat(square)}")

    # five points in 3-space: the 4-simplex on them always has zero volume
    rng = np.random.default_rng(1)
    pts = rng.uniform(0, 1, (5, 3))
    dm = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    dm = np.maximum(dm, dm.T)
    np.fill_diagonal(dm, 0.0)
    five = SimplexSides(DistanceMatrix(dm))
    print(f"five random points in 3-space: flat={is_flat(five)}, "
          f"determinant={cayley_menger_determinant(five):.2e}")


if __name__ == "__main__":
    main()
