"""Locate an unknown point from distances to known anchors.

Subtracting one sphere equation from the rest linearizes the problem; least
squares plus a residual check either returns the point or proves the
measurements inconsistent.
"""

import numpy as np

from distgeo import NoSolutionError, Realization, TrilaterationProblem, trilaterate


def main():
    anchors = Realization([[0.0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    target = np.array([1.0, 1.0, 1.0])
    dists = np.linalg.norm(anchors.coords - target, axis=1)
    print("anchors:\n", anchors.coords)
    print("true point:", target, " measured distances:", np.round(dists, 6))

    found = trilaterate(TrilaterationProblem(anchors, dists))
    print("recovered:", found.coords[0])

    # corrupt one measurement: the linear solve still produces a candidate,
    # but the residual check rejects it
    corrupted = dists.copy()
    corrupted[0] *= 1.5
    try:
        trilaterate(TrilaterationProblem(anchors, corrupted))
    except NoSolutionError as err:
        print(f"corrupted distances rejected: residual={err.residual:.4f}")

    # noisy-but-consistent measurements pass with a loosened tolerance
    from distgeo import Tolerances

    rng = np.random.default_rng(3)
    noisy = dists * (1 + rng.uniform(-1e-4, 1e-4, dists.size))
    point = trilaterate(TrilaterationProblem(anchors, noisy), Tolerances(dist_tol=1e-3))
    print("noisy recovery:", np.round(point.coords[0], 6))


if __name__ == "__main__":
    main()
