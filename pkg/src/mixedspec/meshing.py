"""Conforming triangulations with side-tagged boundaries and uniform red refinement.

Rhombus meshes are built by mirroring a refined quarter triangle across both
coordinate axes, so the diagonal reflections act as exact vertex permutations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Axis, Point2, Polygon, Triangle, _require_canonical_right_triangle

AREA_RTOL = 1e-12


class MeshError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetryMap:
    """Reflection across `axis` realized as an involutive vertex permutation."""

    axis: Axis
    permutation: np.ndarray


class Mesh:
    """Triangle mesh: vertex coordinates, cell index triples, tagged boundary edges.

    boundary_edges rows are (vertex_a, vertex_b, polygon_side_index).
    """

    def __init__(self, vertices, cells, boundary_edges, level, n_polygon_sides,
                 polygon: Polygon | None = None):
        self.vertices = np.asarray(vertices, dtype=float)
        self.cells = np.asarray(cells, dtype=np.int64).reshape(-1, 3)
        self.boundary_edges = np.asarray(boundary_edges, dtype=np.int64).reshape(-1, 3)
        self.level = int(level)
        self.n_polygon_sides = int(n_polygon_sides)
        self.polygon = polygon
        if np.any(self.cell_areas() <= 0.0):
            raise MeshError("cells must be positively oriented")

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_cells(self) -> int:
        return self.cells.shape[0]

    def cell_areas(self) -> np.ndarray:
        p = self.vertices[self.cells]
        e1 = p[:, 1] - p[:, 0]
        e2 = p[:, 2] - p[:, 0]
        return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])

    def area(self) -> float:
        return float(self.cell_areas().sum())

    def side_vertices(self, side: int) -> np.ndarray:
        """Indices of all vertices lying on the given polygon side."""
        rows = self.boundary_edges[self.boundary_edges[:, 2] == side]
        return np.unique(rows[:, :2])

    def to_text(self) -> str:
        """Plain-text export: `v x y` / `c i j k` / `b i j side` lines."""
        lines = [f"v {x!r} {y!r}" for x, y in self.vertices]
        lines += [f"c {i} {j} {k}" for i, j, k in self.cells]
        lines += [f"b {i} {j} {s}" for i, j, s in self.boundary_edges]
        return "\n".join(lines) + "\n"


def triangulate(polygon: Polygon) -> Mesh:
    """Level-0 fan triangulation from vertex 0; rejects non-convex polygons."""
    if not polygon.is_convex():
        raise MeshError("fan triangulation requires a convex polygon")
    n = polygon.n_sides
    verts = [(p.x, p.y) for p in polygon.vertices]
    cells = [(0, i, i + 1) for i in range(1, n - 1)]
    boundary = [(i, (i + 1) % n, i) for i in range(n)]
    mesh = Mesh(verts, cells, boundary, level=0, n_polygon_sides=n, polygon=polygon)
    if abs(mesh.area() - polygon.area()) > AREA_RTOL * polygon.area():
        raise MeshError("triangulation does not cover the polygon")
    return mesh


def refine_uniform(mesh: Mesh) -> Mesh:
    """Split every cell into 4 via edge midpoints; boundary tags are inherited."""
    verts = [tuple(v) for v in mesh.vertices]
    midpoint: dict[tuple[int, int], int] = {}

    def mid(a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        idx = midpoint.get(key)
        if idx is None:
            xa, ya = verts[a]
            xb, yb = verts[b]
            verts.append((0.5 * (xa + xb), 0.5 * (ya + yb)))
            idx = len(verts) - 1
            midpoint[key] = idx
        return idx

    cells = []
    for a, b, c in mesh.cells:
        mab, mbc, mca = mid(a, b), mid(b, c), mid(c, a)
        cells += [(a, mab, mca), (mab, b, mbc), (mca, mbc, c), (mab, mbc, mca)]

    boundary = []
    for a, b, s in mesh.boundary_edges:
        m = mid(a, b)
        boundary += [(a, m, s), (m, b, s)]

    return Mesh(verts, cells, boundary, level=mesh.level + 1,
                n_polygon_sides=mesh.n_polygon_sides, polygon=mesh.polygon)


_QUADRANT_SIGNS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def symmetric_rhombus_mesh(t: Triangle, level: int) -> tuple[Mesh, tuple[SymmetryMap, SymmetryMap]]:
    """Mesh of the rhombus built from four copies of the canonical right triangle.

    The quarter triangle is refined to `level` and mirrored across both axes;
    mirrored coordinates are exact sign flips, so the two diagonal reflections
    (long = x-axis, short = y-axis) are exact vertex permutations.
    """
    from .geometry import rhombus_from_right_triangle

    _require_canonical_right_triangle(t)
    quad = triangulate(t)
    for _ in range(level):
        quad = refine_uniform(quad)

    def key_of(sx, sy, i):
        x, y = quad.vertices[i]
        return (sx if x != 0.0 else 0, sy if y != 0.0 else 0, i)

    gid: dict[tuple[int, int, int], int] = {}
    coords = []
    for sx, sy in _QUADRANT_SIGNS:
        for i in range(quad.n_vertices):
            key = key_of(sx, sy, i)
            if key not in gid:
                gid[key] = len(coords)
                x, y = quad.vertices[i]
                coords.append((sx * x if x != 0.0 else 0.0, sy * y if y != 0.0 else 0.0))

    cells = []
    boundary = []
    for q, (sx, sy) in enumerate(_QUADRANT_SIGNS):
        lookup = [gid[key_of(sx, sy, i)] for i in range(quad.n_vertices)]
        for a, b, c in quad.cells:
            if sx * sy > 0:
                cells.append((lookup[a], lookup[b], lookup[c]))
            else:
                cells.append((lookup[a], lookup[c], lookup[b]))
        for a, b, s in quad.boundary_edges:
            if s == 1:  # hypotenuse edges land on the rhombus boundary
                boundary.append((lookup[a], lookup[b], q))

    rhombus, (long_axis, short_axis) = rhombus_from_right_triangle(t)
    mesh = Mesh(coords, cells, boundary, level=level, n_polygon_sides=4, polygon=rhombus)

    def permutation(flip_x: bool) -> np.ndarray:
        perm = np.empty(mesh.n_vertices, dtype=np.int64)
        for (kx, ky, i), g in gid.items():
            mirrored = (-kx, ky, i) if flip_x else (kx, -ky, i)
            perm[g] = gid[mirrored]
        return perm

    long_map = SymmetryMap(axis=long_axis, permutation=permutation(flip_x=False))
    short_map = SymmetryMap(axis=short_axis, permutation=permutation(flip_x=True))
    return mesh, (long_map, short_map)
