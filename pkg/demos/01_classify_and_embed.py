"""Classify a distance matrix and recover coordinates by classical MDS.

A walk through the core pipeline: validate raw distances, test whether they
are Euclidean, and embed them.  The unit square is exact; a noisy copy shows
how the inherent dimensionality survives perturbation when the rank
threshold is scaled to the noise.
"""

import math

import numpy as np

from distgeo import Tolerances, classical_mds, classify_edm, validate_distance_matrix

s2 = math.sqrt(2)
square = [
    [0, 1, s2, 1],
    [1, 0, 1, s2],
    [s2, 1, 0, 1],
    [1, s2, 1, 0],
]


def main():
    d = validate_distance_matrix(square)
    verdict = classify_edm(d)
    print(f"unit square: EDM={verdict.is_edm}, minimal dimension r={verdict.dim}")

    result = classical_mds(d)
    print(f"inherent dimensionality H={result.inherent_dim}, residual={result.residual:.2e}")
    print("recovered coordinates (unique up to rigid motion):")
    print(np.round(result.realization.coords, 6))

    # (1,1,3) violates the triangle inequality: the centered Gram matrix
    # picks up a negative eigenvalue
    bad = validate_distance_matrix([[0, 1, 1], [1, 0, 3], [1, 3, 0]])
    v = classify_edm(bad)
    print(f"\n(1,1,3): EDM={v.is_edm}, witness eigenvalue={v.witness_eigenvalue:.6f}")

    # perturb the square and embed with a noise-scaled rank threshold
    rng = np.random.default_rng(0)
    noise = rng.uniform(0, 1e-3, (4, 4))
    noise = 0.5 * (noise + noise.T)
    np.fill_diagonal(noise, 0.0)
    noisy = validate_distance_matrix(np.asarray(square) + noise, Tolerances(dist_tol=1e-2))
    noisy_result = classical_mds(noisy, Tolerances(rank_tol=1e-2))
    print(f"\nnoisy square: H={noisy_result.inherent_dim}, residual={noisy_result.residual:.2e}")
    print("spectrum:", np.round(noisy_result.eigenvalues, 6))


if __name__ == "__main__":
    main()
