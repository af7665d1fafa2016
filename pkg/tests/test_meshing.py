import math

import numpy as np
import pytest

from mixedspec import (MeshError, Polygon, refine_uniform, right_triangle,
                       rhombus_from_right_triangle, symmetric_rhombus_mesh, trapezium_fixture,
                       triangulate)


def test_triangulate_triangle():
    mesh = triangulate(right_triangle(0.8))
    assert mesh.n_cells == 1
    assert len(mesh.boundary_edges) == 3
    assert sorted(mesh.boundary_edges[:, 2]) == [0, 1, 2]


def test_triangulate_rhombus():
    rhombus, _ = rhombus_from_right_triangle(right_triangle(0.8))
    mesh = triangulate(rhombus)
    assert mesh.n_cells == 2
    assert len(mesh.boundary_edges) == 4


def test_triangulate_trapezium_preserves_area():
    trap = trapezium_fixture()
    mesh = triangulate(trap)
    assert mesh.n_cells == 2
    assert math.isclose(mesh.area(), trap.area(), rel_tol=1e-14)
    assert math.isclose(mesh.area(), 9.0, rel_tol=1e-14)


def test_triangulate_rejects_nonconvex():
    poly = Polygon(((0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (1.0, 0.5), (0.0, 2.0)))
    with pytest.raises(MeshError):
        triangulate(poly)


def test_refine_counts():
    mesh = triangulate(right_triangle(0.8))
    fine = refine_uniform(mesh)
    assert fine.n_cells == 4
    assert fine.n_vertices == 6
    assert fine.level == 1
    assert len(fine.boundary_edges) == 6


def test_refine_conserves_area_six_levels():
    mesh = triangulate(trapezium_fixture())
    area = mesh.area()
    for _ in range(6):
        mesh = refine_uniform(mesh)
        assert math.isclose(mesh.area(), area, rel_tol=1e-12)
    assert mesh.n_cells == 2 * 4 ** 6


def test_refine_boundary_doubles_per_level():
    mesh = triangulate(right_triangle(0.5))
    for level in range(1, 4):
        mesh = refine_uniform(mesh)
        assert len(mesh.boundary_edges) == 3 * 2 ** level


def test_boundary_tags_inherited():
    mesh = triangulate(right_triangle(0.5))
    for _ in range(3):
        mesh = refine_uniform(mesh)
    for side in range(3):
        assert (mesh.boundary_edges[:, 2] == side).sum() == 8


def test_symmetric_rhombus_level0():
    mesh, (long_map, short_map) = symmetric_rhombus_mesh(right_triangle(0.8), 0)
    assert mesh.n_cells == 4
    assert mesh.n_vertices == 5
    assert len(mesh.boundary_edges) == 4


@pytest.mark.parametrize("level", [0, 1, 3])
def test_symmetry_maps_are_involutions(level):
    mesh, maps = symmetric_rhombus_mesh(right_triangle(0.7), level)
    n = mesh.n_vertices
    for m in maps:
        assert np.array_equal(m.permutation[m.permutation], np.arange(n))


def test_symmetry_maps_reflect_coordinates_exactly():
    mesh, (long_map, short_map) = symmetric_rhombus_mesh(right_triangle(0.7), 3)
    coords = mesh.vertices
    assert np.array_equal(coords[long_map.permutation], coords * [1.0, -1.0])
    assert np.array_equal(coords[short_map.permutation], coords * [-1.0, 1.0])


def test_composed_reflections_give_half_turn():
    mesh, (long_map, short_map) = symmetric_rhombus_mesh(right_triangle(0.7), 2)
    half_turn = long_map.permutation[short_map.permutation]
    assert np.array_equal(mesh.vertices[half_turn], -mesh.vertices)


def test_symmetry_maps_permute_cells():
    mesh, maps = symmetric_rhombus_mesh(right_triangle(0.6), 2)
    cellset = {frozenset(c) for c in mesh.cells.tolist()}
    for m in maps:
        mapped = {frozenset(m.permutation[list(c)].tolist()) for c in mesh.cells}
        assert mapped == cellset


def test_rhombus_mesh_area():
    mesh, _ = symmetric_rhombus_mesh(right_triangle(0.8), 3)
    assert math.isclose(mesh.area(), 4.0 * 0.5 * 0.8, rel_tol=1e-12)


def test_mesh_text_export():
    mesh = triangulate(right_triangle(0.5))
    text = mesh.to_text()
    lines = text.strip().split("\n")
    assert sum(ln.startswith("v ") for ln in lines) == 3
    assert sum(ln.startswith("c ") for ln in lines) == 1
    assert sum(ln.startswith("b ") for ln in lines) == 3
    assert lines[-1].split()[-1] in {"0", "1", "2"}


def test_refinement_orientation_positive():
    mesh = triangulate(trapezium_fixture())
    for _ in range(3):
        mesh = refine_uniform(mesh)
    assert (mesh.cell_areas() > 0).all()
