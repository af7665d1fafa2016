import json
import math

import pytest

from mixedspec import (Polygon, regular_polygon, to_json, triangle_to_rhombus_matching,
                       right_triangle)
from mixedspec.verifier import (cmd_bounds, cmd_conjecture, cmd_order, cmd_polygon_lb,
                                cmd_rhombus, cmd_trapezium, export_report)

UNIT_SQUARE = Polygon(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))


def _statuses(report, *names):
    by_name = {c.name: c.status for c in report.checks}
    return [by_name[n] for n in names]


def test_order_interior_chain_verified():
    report = cmd_order(alpha=0.6, levels=4)
    assert report.params["regime"] == "interior"
    assert len(report.checks) == 9  # mu1=0 plus the eight chain links
    assert all(c.status == "verified" for c in report.checks)
    chain = [c.name for c in report.checks[1:]]
    assert chain == ["mu1<lam1_S", "lam1_S<lam1_M", "lam1_M<mu2", "mu2<lam1_L",
                     "lam1_L<lam1_MS", "lam1_MS<lam1_LS", "lam1_LS<lam1_LM", "lam1_LM<lam1"]


def test_order_tie_regime_equalities():
    report = cmd_order(b=1.0, levels=4)
    assert report.params["regime"] == "right-isosceles"
    eqs = {c.name for c in report.checks if c.relation == "="}
    assert {"lam1_S=lam1_M", "mu2=lam1_L", "lam1_LS=lam1_LM"} <= eqs
    assert all(c.status == "verified" for c in report.checks)


def test_order_half_equilateral_equality():
    report = cmd_order(alpha=math.pi / 6.0, levels=4)
    assert report.params["regime"] == "half-equilateral"
    assert _statuses(report, "lam1_M=mu2") == ["verified"]


def test_order_subequilateral_chain():
    report = cmd_order(alpha=0.45, levels=4)
    assert report.params["regime"] == "subequilateral"
    assert _statuses(report, "mu2<lam1_M") == ["verified"]


def test_order_validations():
    with pytest.raises(ValueError):
        cmd_order()
    with pytest.raises(ValueError):
        cmd_order(b=0.5, alpha=0.5)
    with pytest.raises(ValueError):
        cmd_order(b=1.5)


def test_order_sweep_continuity():
    r1 = cmd_order(alpha=0.60, levels=3)
    r2 = cmd_order(alpha=0.61, levels=3)
    for label in ("mu2", "lam1_S", "lam1_M", "lam1_L", "lam1"):
        a = r1.estimate(label).value
        b = r2.estimate(label).value
        assert abs(a - b) / a < 0.05


def test_rhombus_wide_regime():
    report = cmd_rhombus(1.4, levels=3, with_matching=True)
    names = {c.name: c.status for c in report.checks}
    for key in ("mu2 simple", "mu3 simple", "mu4 simple", "lam2 simple",
                "mu2 antisymmetric across short diagonal",
                "mu3 antisymmetric across long diagonal",
                "mu4 symmetric across long diagonal",
                "mu4 symmetric across short diagonal",
                "lam2 antisymmetric across short diagonal",
                "mu4<lam1"):
        assert names[key] == "verified", key
    match_checks = [c for c in report.checks if c.name.startswith("match ")]
    assert len(match_checks) == 4
    assert all(c.status == "verified" for c in match_checks)


def test_rhombus_narrow_regime():
    report = cmd_rhombus(1.0, levels=3, with_matching=False)
    assert report.params["regime"] == "narrow"
    assert _statuses(report, "doubly symmetric mode belongs to mu3") == ["verified"]


def test_rhombus_square_cluster():
    report = cmd_rhombus(math.pi / 2.0, levels=3, with_matching=False)
    assert report.params["regime"] == "square"
    assert _statuses(report, "mu2-mu3 degenerate pair",
                     "mu2-mu3 cluster has one SA mode",
                     "mu2-mu3 cluster has one AS mode") == ["verified"] * 3


def test_rhombus_equilateral_boundary_cluster():
    report = cmd_rhombus(math.pi / 3.0, levels=3, with_matching=False)
    assert report.params["regime"] == "equilateral-boundary"
    assert _statuses(report, "mu3-mu4 degenerate pair at the equilateral rhombus",
                     "mu3-mu4 cluster has one AS mode",
                     "mu3-mu4 cluster has one SS mode") == ["verified"] * 3


def test_rhombus_rejects_bad_angle():
    with pytest.raises(ValueError):
        cmd_rhombus(0.0)
    with pytest.raises(ValueError):
        cmd_rhombus(2.0)


def test_matching_direct():
    records = triangle_to_rhombus_matching(right_triangle(0.8), levels=3)
    assert [r.triangle_label for r in records] == ["lam1_S", "lam1_M", "mu2", "lam1_L"]
    assert all(r.matched for r in records)


def test_trapezium_report():
    report = cmd_trapezium(levels=3)
    sloped = report.estimate("lam1_sloped").value
    top = report.estimate("lam1_top").value
    assert 0 < sloped < top
    assert math.isclose(report.params["side_lengths"]["sloped"], math.sqrt(13.0))
    assert report.params["side_lengths"]["top"] == 3.0
    assert all(c.status == "verified" for c in report.checks)


def test_bounds_report_small():
    report = cmd_bounds(b_grid=(0.4,), h_grid=(0.5,), alpha_grid=(0.5,), levels=3)
    assert all(c.status == "verified" for c in report.checks), \
        [(c.name, c.status) for c in report.checks if c.status != "verified"]


def test_polygon_lb_square():
    report = cmd_polygon_lb(UNIT_SQUARE, 1, levels=3, domain_name="square")
    assert report.checks[0].status == "verified"
    # single-side Dirichlet ground state of the unit square is pi^2/4
    lam = report.estimate("lam1_D0").value
    assert abs(lam - math.pi ** 2 / 4.0) < 0.01
    assert abs(report.estimate("mu2").value - math.pi ** 2) < 0.05


def test_polygon_lb_triangle_reproduces_min_below_mu2():
    report = cmd_polygon_lb(right_triangle(0.8), 1, levels=3, domain_name="triangle")
    assert report.checks[0].status == "verified"
    values = [report.estimate(f"lam1_D{i}").value for i in range(3)]
    assert min(values) < report.estimate("mu2").value


def test_polygon_lb_pentagon_two_sides():
    report = cmd_polygon_lb(regular_polygon(5), 2, levels=3, domain_name="pentagon")
    assert report.checks[0].status == "verified"
    assert len(report.table) == 6  # mu2 + five Dirichlet sets


def test_polygon_lb_side_count_validation():
    with pytest.raises(ValueError):
        cmd_polygon_lb(UNIT_SQUARE, 2, levels=3)


def test_conjecture_small_grid():
    report = cmd_conjecture(nx=2, ny=2, margin=0.15, levels=3)
    assert not any(c.status == "violated" for c in report.checks)
    assert report.params["cells"]
    for meta in report.params["cells"].values():
        assert "mu2_position" in meta


def test_conjecture_near_equilateral_mu2_above_lam1L():
    # apexes close to (1/2, sqrt(3)/2) put mu2 above the single-side Dirichlet values
    report = cmd_conjecture(nx=2, ny=2, margin=0.47, levels=4)
    near = [c for c in report.checks if c.name.startswith("near-equilateral")]
    assert near, [m for m in report.params["cells"].values()]
    assert all(c.status == "verified" for c in near)


def test_export_json_csv_svg(tmp_path):
    report = cmd_trapezium(levels=3)
    json_path = export_report(report, "json", tmp_path / "rep.json")[0]
    data = json.loads(json_path.read_text())
    assert set(data) == {"domain", "params", "levels", "table", "checks"}
    csv_path = export_report(report, "csv", tmp_path / "rep.csv")[0]
    assert csv_path.read_text().startswith("label,level,value")
    svg_paths = export_report(report, "svg", tmp_path / "rep.svg")
    assert len(svg_paths) == 2
    for p in svg_paths:
        assert p.exists()
        assert "<svg" in p.read_text()[:500]
    with pytest.raises(ValueError):
        export_report(report, "pdf", tmp_path / "rep.pdf")


def test_rhombus_svg_nodal_line_on_short_diagonal(tmp_path):
    import numpy as np

    report = cmd_rhombus(1.4, levels=3, with_matching=False)
    # the mu2 eigenfunction vanishes on the short diagonal (x = 0)
    u = report.modes["mu2"]
    mesh = u.mesh
    on_axis = np.abs(mesh.vertices[:, 0]) < 1e-12
    assert on_axis.sum() > 2
    assert np.abs(u.values[on_axis]).max() <= 1e-9 * np.abs(u.values).max()
    paths = export_report(report, "svg", tmp_path / "rhombus.svg")
    assert any(p.name.endswith("mu2.svg") for p in paths)


def test_report_json_deterministic_between_runs():
    a = to_json(cmd_rhombus(1.4, levels=3, with_matching=False))
    b = to_json(cmd_rhombus(1.4, levels=3, with_matching=False))
    assert a == b
