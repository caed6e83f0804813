"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines as they complete.  Every tolerance is pinned here; nothing is left to
later calibration.
"""

import functools
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from distgeo.errors import NoSolutionError
from distgeo.matrices import (
    Realization,
    double_center,
    edm_from_realization,
    realization_from_gram,
    validate_distance_matrix,
)
from distgeo.embedding import TrilaterationProblem, classify_edm, trilaterate
from distgeo.semimetric import (
    congruently_embeddable,
    validate_semi_metric,
    verify_menger_criterion,
)
from distgeo.simplex import (
    SimplexSides,
    TriangleSides,
    cayley_menger_determinant,
    heron_area,
    simplex_volume,
)
from distgeo.sphere import GeodesicTetrahedron, embed_on_sphere
from distgeo.rigidity import cyclic_sign_changes

FIXTURES = Path(__file__).parent / "fixtures"


def criterion(number, label):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number} [{label}]: FAIL")
                raise
            print(f"criterion {number} [{label}]: PASS")

        return wrapper

    return decorate


@criterion(1, "triangle area: semiperimeter product vs bordered determinant")
def test_criterion_1_heron_vs_determinant():
    # analytic anchor: the 4x4 bordered determinant of sides (3,4,5) equals
    # -16 s(s-a)(s-b)(s-c) = -576
    s345 = SimplexSides.from_triangle(TriangleSides(3, 4, 5))
    assert abs(cayley_menger_determinant(s345) - (-576.0)) <= 1e-9

    rng = np.random.default_rng(101)
    for _ in range(10_000):
        pts = rng.standard_normal((3, 2)) * rng.uniform(0.2, 5)
        a = float(np.linalg.norm(pts[0] - pts[1]))
        b = float(np.linalg.norm(pts[0] - pts[2]))
        c = float(np.linalg.norm(pts[1] - pts[2]))
        t = TriangleSides(a, b, c)
        area = heron_area(t)
        volume = simplex_volume(SimplexSides.from_triangle(t))
        assert abs(area - volume) <= 1e-9 * max(1.0, area)


@criterion(2, "five points in 3-space have vanishing bordered determinant")
def test_criterion_2_flatness_of_five_points():
    rng = np.random.default_rng(102)

    def five_points():
        # the perturbed point needs a non-degenerate base tetrahedron,
        # otherwise lifting it creates no 4-volume; resample thin bases
        while True:
            pts = rng.uniform(0.0, 1.0, (5, 3))
            if abs(np.linalg.det(pts[1:4] - pts[0])) / 6 >= 0.01:
                return pts

    for _ in range(500):
        pts = five_points()
        lifted = np.zeros((5, 4))
        lifted[:, :3] = pts
        d = edm_from_realization(Realization(lifted))
        scaled = abs(cayley_menger_determinant(SimplexSides(d)))
        scaled /= float((d.d**2).max()) ** 4
        assert scaled <= 1e-6

        perturbed = lifted.copy()
        perturbed[4, 3] = 0.1
        dp = edm_from_realization(Realization(perturbed))
        scaled_p = abs(cayley_menger_determinant(SimplexSides(dp)))
        scaled_p /= float((dp.d**2).max()) ** 4
        assert scaled_p > 1e-6


@criterion(3, "distances -> centered Gram -> coordinates -> distances")
def test_criterion_3_round_trip():
    rng = np.random.default_rng(103)
    trials = 200
    rank_hits = 0
    for _ in range(trials):
        n = int(rng.integers(2, 21))
        k = int(rng.integers(1, 6))
        pts = rng.standard_normal((n, k)) * rng.uniform(0.5, 3)
        d = edm_from_realization(Realization(pts))
        x = realization_from_gram(double_center(d))
        back = edm_from_realization(x)
        iu = np.triu_indices(n, 1)
        rel = np.abs(back.d[iu] - d.d[iu]) / np.maximum(d.d[iu], 1e-300)
        assert rel.max() <= 1e-8
        generating_rank = min(n - 1, k)
        if x.k == generating_rank:
            rank_hits += 1
    assert rank_hits >= 0.99 * trials


@criterion(4, "subset criterion agrees with the PSD test on 500 random spaces")
def test_criterion_4_menger_schoenberg_agreement():
    rng = np.random.default_rng(104)

    def random_space(i):
        n = int(rng.integers(2, 9))
        kind = i % 4
        if kind in (0, 1):
            pts = rng.standard_normal((n, int(rng.integers(1, 5)))) * 2
            return validate_semi_metric(edm_from_realization(Realization(pts)).d)
        if kind == 2:
            m = rng.uniform(0.3, 3.0, (n, n))
            m = 0.5 * (m + m.T)
            np.fill_diagonal(m, 0.0)
            return validate_semi_metric(m)
        pts = rng.standard_normal((n, int(rng.integers(1, 4)))) * 2
        noisy = edm_from_realization(Realization(pts)).d * rng.uniform(0.9, 1.1, (n, n))
        noisy = 0.5 * (noisy + noisy.T)
        np.fill_diagonal(noisy, 0.0)
        return validate_semi_metric(noisy)

    for i in range(500):
        space = random_space(i)
        for dim in (1, 2, 3):
            psd_route = congruently_embeddable(space, dim).embeddable
            subset_route = verify_menger_criterion(space, dim).embeddable
            assert psd_route == subset_route


@criterion(5, "fixed point on the inverse radius recovers the unit sphere")
def test_criterion_5_spherical_embedding():
    # six geodesics of the regular tetrahedron inscribed in the unit sphere,
    # rounded to the 6 decimals used in the fixture files
    anchor = 1.910633
    g = GeodesicTetrahedron(np.full(6, anchor))
    emb = embed_on_sphere(g)
    assert abs(emb.radius - 1.0) <= 1e-6
    assert np.abs(emb.geodesics / anchor - 1.0).max() <= 1e-6

    for t in (0.5, 2.0):
        scaled = embed_on_sphere(GeodesicTetrahedron(np.full(6, anchor * t)))
        assert abs(scaled.radius / (t * emb.radius) - 1.0) <= 1e-6


@criterion(6, "trilateration recovers forward-generated points")
def test_criterion_6_trilateration():
    rng = np.random.default_rng(106)
    for _ in range(200):
        k = int(rng.integers(1, 4))
        m = int(rng.integers(k + 1, k + 5))
        anchors = rng.standard_normal((m, k)) * 2
        target = rng.standard_normal(k) * 2
        dists = np.linalg.norm(anchors - target, axis=1)
        got = trilaterate(TrilaterationProblem(Realization(anchors), dists))
        assert np.abs(got.coords[0] - target).max() <= 1e-9

    inconsistent = TrilaterationProblem(
        Realization([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), np.array([10.0, 10.0, 10.0])
    )
    with pytest.raises(NoSolutionError):
        trilaterate(inconsistent)


@criterion(7, "cyclic sign-change counts are even and invariant")
def test_criterion_7_sign_change_parity():
    rng = np.random.default_rng(107)
    for _ in range(100_000):
        length = int(rng.integers(0, 21))
        entries = [int(v) for v in rng.integers(-1, 2, length)]
        count = cyclic_sign_changes(entries)
        assert count % 2 == 0
        assert cyclic_sign_changes([-v for v in entries]) == count
        if length:
            shift = int(rng.integers(0, length))
            assert cyclic_sign_changes(entries[shift:] + entries[:shift]) == count


@criterion(8, "CLI fixtures: documented verdicts, byte-identical reruns")
def test_criterion_8_cli_contract():
    cases = [
        (("heron", "3", "4", "5"), 0, "6.00000000000"),
        (("check-edm", str(FIXTURES / "triangle345.txt")), 0, "EDM r=2"),
        (("check-edm", str(FIXTURES / "triangle113.txt")), 1, "NOT-EDM lambda_min="),
        (("volume", str(FIXTURES / "triangle345.txt")), 0, "6.00000000000"),
        (("volume", str(FIXTURES / "five_points_3d.txt")), 0, None),
        (("mds", str(FIXTURES / "square.txt")), 0, "eigenvalues:"),
        (
            (
                "trilaterate",
                "--anchors",
                str(FIXTURES / "anchors3d.txt"),
                "--dists",
                "1.7320508075688772,1.4142135623730951,1.4142135623730951,1.4142135623730951",
            ),
            0,
            None,
        ),
        (
            (
                "trilaterate",
                "--anchors",
                str(FIXTURES / "anchors3d.txt"),
                "--dists",
                "10,10,10,10",
            ),
            1,
            "NO-SOLUTION residual=",
        ),
        (("sphere-embed", str(FIXTURES / "regular_geodesics.txt")), 0, "radius="),
        (("menger", str(FIXTURES / "tetra_unit.txt"), "--dim", "2"), 1,
         "NOT-EMBEDDABLE subset=[0,1,2,3]"),
        (("menger", str(FIXTURES / "tetra_unit.txt"), "--dim", "3"), 0, "EMBEDDABLE r=3"),
    ]
    for args, want_code, want_prefix in cases:
        first = subprocess.run(
            [sys.executable, "-m", "distgeo", *args], capture_output=True, text=True
        )
        second = subprocess.run(
            [sys.executable, "-m", "distgeo", *args], capture_output=True, text=True
        )
        assert first.returncode == want_code, (args, first.returncode, first.stderr)
        if want_prefix is not None:
            assert first.stdout.splitlines()[0].startswith(want_prefix), (
                args,
                first.stdout,
            )
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode

    # documented verdict values parsed back from the CLI
    mds_out = subprocess.run(
        [sys.executable, "-m", "distgeo", "mds", str(FIXTURES / "square.txt")],
        capture_output=True,
        text=True,
    )
    assert "H=2" in mds_out.stdout
    sphere_out = subprocess.run(
        [sys.executable, "-m", "distgeo", "sphere-embed", str(FIXTURES / "regular_geodesics.txt")],
        capture_output=True,
        text=True,
    )
    radius = float(sphere_out.stdout.splitlines()[0].split("=")[1])
    assert abs(radius - 1.0) <= 1e-6
    tri_out = subprocess.run(
        [
            sys.executable,
            "-m",
            "distgeo",
            "trilaterate",
            "--anchors",
            str(FIXTURES / "anchors3d.txt"),
            "--dists",
            "1.7320508075688772,1.4142135623730951,1.4142135623730951,1.4142135623730951",
        ],
        capture_output=True,
        text=True,
    )
    point = [float(v) for v in tri_out.stdout.strip().split("\t")]
    assert np.abs(np.asarray(point) - 1.0).max() <= 1e-9
