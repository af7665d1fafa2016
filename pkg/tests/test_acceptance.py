"""Acceptance criteria, one test each, printing a PASS/FAIL line per criterion.

Run standalone with `pytest tests/test_acceptance.py -v -s`.
"""

import math
import time
from contextlib import contextmanager

import pytest

from mixedspec import (BoundarySpec, bound_obtuse_upper, classify_sides, closed_form,
                       gap_identity_residual, gap_quadratic_factor, right_triangle,
                       to_json, triangle_to_rhombus_matching)
from mixedspec.pipeline import mesh_sequence, sweep_polygon
from mixedspec.verifier import cmd_bounds, cmd_conjecture, cmd_order, cmd_rhombus, cmd_trapezium
from prop_helpers import (check_constraint_monotonicity, check_galerkin_monotonicity,
                          check_nodal_counts, check_report_determinism)

PI2 = math.pi ** 2
HALF_EQ_B = math.tan(math.pi / 6.0)


@contextmanager
def criterion(num, description):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {num:>2} [FAIL] {description}")
        raise
    print(f"\nACCEPTANCE {num:>2} [PASS] {description}")


@pytest.fixture(scope="module")
def bounds_report():
    return cmd_bounds(levels=4)


def _margin_of(report, name):
    for c in report.checks:
        if c.name == name:
            return c.margin, c.status
    raise KeyError(name)


def test_criterion_1_right_isosceles_closed_forms():
    with criterion(1, "right isosceles reproduces square-mode eigenvalues"):
        start = time.perf_counter()
        oracle_neumann = closed_form("right-isosceles", "neumann", 3)
        oracle_hyp = closed_form("right-isosceles", "L", 1)
        oracle_dirichlet = closed_form("right-isosceles", "dirichlet", 1)
        assert math.isclose(oracle_neumann[1], PI2, rel_tol=1e-14)
        assert math.isclose(oracle_neumann[2], 2.0 * PI2, rel_tol=1e-14)
        assert math.isclose(oracle_hyp[0], PI2, rel_tol=1e-14)
        assert math.isclose(oracle_dirichlet[0], 5.0 * PI2, rel_tol=1e-14)

        t = right_triangle(1.0)
        cls = classify_sides(t)
        meshes = mesh_sequence(t, 2, 5)  # levels 2..6
        neumann = sweep_polygon(meshes, BoundarySpec.all_neumann(3), k=3)
        lam_l = sweep_polygon(meshes, cls.dirichlet_spec("L"), k=1)
        lam = sweep_polygon(meshes, cls.dirichlet_spec("SML"), k=1)
        elapsed = time.perf_counter() - start

        mu2, mu3 = neumann.estimates[1], neumann.estimates[2]
        assert abs(mu2.value - oracle_neumann[1]) <= 0.002 * oracle_neumann[1], \
            f"mu2 {mu2.value} vs {oracle_neumann[1]}"
        assert abs(lam_l.estimates[0].value - oracle_hyp[0]) <= 0.002 * oracle_hyp[0]
        assert abs(lam.estimates[0].value - oracle_dirichlet[0]) <= 0.005 * oracle_dirichlet[0]
        assert abs(mu3.value - oracle_neumann[2]) <= 0.005 * oracle_neumann[2]
        assert elapsed < 30.0, f"took {elapsed:.1f}s"
        print(f"  mu2={mu2.value:.6f} lam1_L={lam_l.estimates[0].value:.6f} "
              f"lam1={lam.estimates[0].value:.6f} mu3={mu3.value:.6f} ({elapsed:.1f}s)")


def test_criterion_2_half_equilateral():
    with criterion(2, "half-equilateral lam1_M = mu2 = 16*pi^2/9"):
        target = 16.0 * PI2 / 9.0
        t = right_triangle(HALF_EQ_B, scale=math.sqrt(3.0) / 2.0)  # hypotenuse 1
        assert math.isclose(max(t.side_lengths()), 1.0, rel_tol=1e-12)
        cls = classify_sides(t)
        meshes = mesh_sequence(t, 2, 5)
        lam_m = sweep_polygon(meshes, cls.dirichlet_spec("M"), k=1).estimates[0]
        mu2 = sweep_polygon(meshes, BoundarySpec.all_neumann(3), k=2).estimates[1]
        assert abs(lam_m.value - target) <= 0.005 * target
        assert abs(mu2.value - target) <= 0.005 * target
        assert abs(lam_m.value - mu2.value) <= lam_m.error_bar + mu2.error_bar
        print(f"  lam1_M={lam_m.value:.6f} mu2={mu2.value:.6f} target={target:.6f}")


def test_criterion_3_theorem_chain():
    with criterion(3, "ordering chain verified for interior alphas and alpha=0.45"):
        start = time.perf_counter()
        for alpha in (0.55, 0.60, 0.65, 0.70, 0.75):
            report = cmd_order(alpha=alpha, levels=5)
            chain = [c for c in report.checks if c.name != "mu1=0"]
            assert len(chain) == 8
            bad = [(c.name, c.status) for c in chain if c.status != "verified"]
            assert not bad, f"alpha={alpha}: {bad}"
        report = cmd_order(alpha=0.45, levels=5)
        status = {c.name: c.status for c in report.checks}
        assert status["mu2<lam1_M"] == "verified"
        elapsed = time.perf_counter() - start
        assert elapsed < 300.0, f"took {elapsed:.1f}s"
        print(f"  all chains verified ({elapsed:.1f}s)")


def test_criterion_4_bounds_suite(bounds_report):
    with criterion(4, "Hooker-Protter and isobound hold with positive margin"):
        for b in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
            sb = f"{b:g}"
            margin, status = _margin_of(bounds_report, f"hp[b={sb}]<=lam1_rhombus[b={sb}]")
            assert margin > 0 and status == "verified", f"HP at b={b}"
            margin, status = _margin_of(bounds_report, f"mu2_tri[b={sb}]<=isobound[b={sb}]")
            assert margin > 0 and status == "verified", f"isobound at b={b}"
            margin, status = _margin_of(bounds_report, f"isobound[b={sb}]<hp[b={sb}]")
            assert margin > 0 and status == "verified", f"isobound<hp at b={b}"
            assert abs(gap_identity_residual(b)) <= 1e-12
            assert gap_quadratic_factor(b) < 0.0
        print("  all 9 grid points verified")


def test_criterion_5_obtuse_bound(bounds_report):
    with criterion(5, "obtuse test-function bound dominates FEM mu2"):
        for h in (0.3, 0.5, 0.6):
            sh = f"{h:g}"
            margin, status = _margin_of(bounds_report,
                                        f"mu2_obtuse[h={sh}]<=obtuse_test[h={sh}]")
            assert margin > 0 and status == "verified", f"h={h}"
        first, second = bound_obtuse_upper(1.0 / math.sqrt(2.0))
        assert abs(first - second) <= 1e-12
        print(f"  margins positive; saturation residual {abs(first-second):.2e}")


def test_criterion_6_dichotomy(bounds_report):
    with criterion(6, "mu2(obtuse) < mu2(acute) regardless of the energy-ratio test"):
        for alpha in (0.3, 0.5, 0.7):
            sa = f"{alpha:g}"
            name = next(c.name for c in bounds_report.checks
                        if c.name.startswith(f"dichotomy mu2(O)<mu2(A) at alpha={sa}"))
            margin, status = _margin_of(bounds_report, name)
            assert margin > 0 and status == "verified", f"alpha={alpha}"
            ratio = bounds_report.estimate(f"cond_ratio[alpha={sa}]").value
            tan2 = bounds_report.estimate(f"tan2_beta[alpha={sa}]").value
            print(f"  alpha={alpha}: margin={margin:.4f}, cond ratio={ratio:.4f} "
                  f"vs tan^2(beta)={tan2:.4f} -> cond {'holds' if ratio > tan2 else 'fails'}")


def test_criterion_7_rhombus_corollary():
    with criterion(7, "rhombus mode simplicity, classes, and mu4 < lam1"):
        for two_alpha in (1.2, 1.4, 1.5):
            report = cmd_rhombus(two_alpha, levels=4, with_matching=False)
            status = {c.name: c.status for c in report.checks}
            for key in ("mu2 simple", "mu3 simple", "mu4 simple", "lam2 simple",
                        "mu2 symmetric across long diagonal",
                        "mu2 antisymmetric across short diagonal",
                        "mu3 antisymmetric across long diagonal",
                        "mu3 symmetric across short diagonal",
                        "mu4 symmetric across long diagonal",
                        "mu4 symmetric across short diagonal",
                        "lam2 symmetric across long diagonal",
                        "lam2 antisymmetric across short diagonal",
                        "mu4<lam1"):
                assert status[key] == "verified", f"2a={two_alpha}: {key} {status[key]}"
        report = cmd_rhombus(1.0, levels=4, with_matching=False)
        status = {c.name: c.status for c in report.checks}
        assert status["doubly symmetric mode belongs to mu3"] == "verified"
        report = cmd_rhombus(math.pi / 2.0, levels=4, with_matching=False)
        status = {c.name: c.status for c in report.checks}
        assert status["mu2-mu3 degenerate pair"] == "verified"
        assert status["mu2-mu3 cluster has one SA mode"] == "verified"
        assert status["mu2-mu3 cluster has one AS mode"] == "verified"
        print("  wide, narrow, and square regimes all verified")


def test_criterion_8_triangle_rhombus_matching():
    with criterion(8, "triangle eigenvalues match rhombus symmetry classes"):
        for b in (0.7, 0.9):
            records = triangle_to_rhombus_matching(right_triangle(b), levels=4)
            assert [r.triangle_label for r in records] == ["lam1_S", "lam1_M", "mu2", "lam1_L"]
            for rec in records:
                assert rec.matched, (b, rec.triangle_label, rec.difference, rec.combined_bar)
            worst = max(r.difference for r in records)
            print(f"  b={b}: worst |difference| {worst:.3e} within bars")


def test_criterion_9_trapezium():
    with criterion(9, "sloped-side Dirichlet below top-side Dirichlet"):
        report = cmd_trapezium(levels=4)
        margin, status = _margin_of(report, "lam1_sloped<lam1_top")
        assert margin > 0 and status == "verified"
        sloped = report.estimate("lam1_sloped").value
        top = report.estimate("lam1_top").value
        assert 0 < sloped < top
        archived = to_json(report)
        assert "lam1_sloped" in archived and "lam1_top" in archived
        print(f"  lam1_sloped={sloped:.6f} < lam1_top={top:.6f} (margin {margin:.4f})")


def test_criterion_10_property_suites():
    with criterion(10, "constraint monotonicity, nodal counts, Galerkin, determinism"):
        failures = (check_constraint_monotonicity(n_pairs=20, seed=7)
                    + check_nodal_counts(level=4)
                    + check_galerkin_monotonicity(levels=4)
                    + check_report_determinism())
        assert not failures, failures
        print("  all four property suites passed")


def test_criterion_11_conjecture_scan():
    with criterion(11, "100-cell scalene scan has no violated checks"):
        report = cmd_conjecture(nx=10, ny=10, levels=3, jobs=4)
        counts = report.counts()
        assert counts["violated"] == 0, [c.name for c in report.checks
                                         if c.status == "violated"]
        inconclusive = sorted({c.name.split("[")[1].split("]")[0]
                               for c in report.checks if c.status == "inconclusive"})
        print(f"  cells={len(report.params['cells'])} verified={counts['verified']} "
              f"inconclusive={counts['inconclusive']} (cells: {', '.join(inconclusive) or 'none'})")
