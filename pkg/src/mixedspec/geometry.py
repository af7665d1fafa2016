"""Planar domains: triangles, their reflections, rhombi, and boundary tags.

Coordinates are plain floats.  Right triangles use the canonical placement
(0,0), (a,0), (0,a*b) with 0 < b <= 1, so the shorter leg lies on the y-axis
and the side labels S (short), M (middle), L (long = hypotenuse) are fixed
by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def dist(p: Point2, q: Point2) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


@dataclass(frozen=True)
class Axis:
    """Line through `point` along unit `direction`; used as a reflection axis."""

    point: Point2
    direction: tuple[float, float]


def _signed_area(points) -> float:
    s = 0.0
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return 0.5 * s


class Polygon:
    """Simple counterclockwise polygon given by its ordered vertices."""

    def __init__(self, vertices):
        pts = tuple(v if isinstance(v, Point2) else Point2(*v) for v in vertices)
        if len(pts) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if len({p.as_tuple() for p in pts}) != len(pts):
            raise ValueError("repeated vertices")
        if _signed_area(pts) <= 0.0:
            raise ValueError("vertices must be counterclockwise with positive area")
        self.vertices: tuple[Point2, ...] = pts

    @property
    def n_sides(self) -> int:
        return len(self.vertices)

    def side(self, i: int) -> tuple[Point2, Point2]:
        return self.vertices[i], self.vertices[(i + 1) % self.n_sides]

    def side_lengths(self) -> tuple[float, ...]:
        return tuple(dist(*self.side(i)) for i in range(self.n_sides))

    def area(self) -> float:
        return _signed_area(self.vertices)

    def is_convex(self, tol: float = 0.0) -> bool:
        n = self.n_sides
        for i in range(n):
            a, b, c = self.vertices[i - 1], self.vertices[i], self.vertices[(i + 1) % n]
            cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
            if cross <= tol:
                return False
        return True

    def scaled(self, factor: float) -> "Polygon":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return type(self)(tuple(Point2(factor * p.x, factor * p.y) for p in self.vertices))

    def __repr__(self):
        coords = ", ".join(f"({p.x:g},{p.y:g})" for p in self.vertices)
        return f"{type(self).__name__}[{coords}]"


class Triangle(Polygon):
    def __init__(self, vertices):
        super().__init__(vertices)
        if self.n_sides != 3:
            raise ValueError("triangle needs exactly 3 vertices")
        a, b, c = self.side_lengths()
        if not (a + b > c and b + c > a and a + c > b):
            raise ValueError("side lengths violate the strict triangle inequality")


@dataclass(frozen=True)
class BoundarySpec:
    """Per-side boundary condition tags, one of DIRICHLET / NEUMANN per side."""

    conditions: tuple[str, ...]

    def __post_init__(self):
        for c in self.conditions:
            if c not in (DIRICHLET, NEUMANN):
                raise ValueError(f"unknown boundary condition {c!r}")

    @classmethod
    def all_neumann(cls, n_sides: int) -> "BoundarySpec":
        return cls((NEUMANN,) * n_sides)

    @classmethod
    def all_dirichlet(cls, n_sides: int) -> "BoundarySpec":
        return cls((DIRICHLET,) * n_sides)

    @classmethod
    def dirichlet_on(cls, n_sides: int, sides) -> "BoundarySpec":
        sides = set(sides)
        if not sides <= set(range(n_sides)):
            raise ValueError(f"side indices {sorted(sides)} out of range for {n_sides} sides")
        return cls(tuple(DIRICHLET if i in sides else NEUMANN for i in range(n_sides)))

    @property
    def n_sides(self) -> int:
        return len(self.conditions)

    @property
    def dirichlet_sides(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.conditions) if c == DIRICHLET)

    @property
    def is_pure_neumann(self) -> bool:
        return not self.dirichlet_sides


@dataclass(frozen=True)
class SideClassification:
    """S/M/L labels per triangle side, with near-equal pairs listed in `ties`."""

    labels: dict[int, str]
    ties: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def index_of(self, label: str) -> int:
        for i, lab in self.labels.items():
            if lab == label:
                return i
        raise KeyError(label)

    def tied(self, label_a: str, label_b: str) -> bool:
        pair = tuple(sorted((self.index_of(label_a), self.index_of(label_b))))
        return pair in self.ties

    def dirichlet_spec(self, labels: str) -> BoundarySpec:
        """Dirichlet on the sides named by `labels` (e.g. "LS"), Neumann elsewhere."""
        return BoundarySpec.dirichlet_on(3, [self.index_of(c) for c in labels])


# --- parameter conversions (alpha = smallest angle, b = tan(alpha), h = sin(alpha)) ---

def b_from_alpha(alpha: float) -> float:
    return math.tan(alpha)


def alpha_from_b(b: float) -> float:
    return math.atan(b)


def h_from_alpha(alpha: float) -> float:
    return math.sin(alpha)


def h_from_b(b: float) -> float:
    return b / math.hypot(1.0, b)


def b_from_h(h: float) -> float:
    if not 0.0 < h < 1.0:
        raise ValueError("h must lie in (0, 1)")
    return h / math.sqrt(1.0 - h * h)


def right_triangle(b: float, scale: float = 1.0) -> Triangle:
    """Canonical right triangle (0,0), (scale,0), (0,scale*b) with 0 < b <= 1.

    Legs scale*b (= S for b < 1) and scale (= M), hypotenuse scale*sqrt(1+b^2)
    (= L); smallest angle arctan(b).
    """
    if not 0.0 < b <= 1.0:
        raise ValueError("b must lie in (0, 1]; swap the legs to normalize b > 1")
    if scale <= 0:
        raise ValueError("scale must be positive")
    return Triangle((Point2(0.0, 0.0), Point2(scale, 0.0), Point2(0.0, scale * b)))


def classify_sides(t: Triangle, tie_tol: float = 1e-9) -> SideClassification:
    """Assign S <= M <= L by sorted side length; ties broken by side index."""
    if tie_tol < 0:
        raise ValueError("tie_tol must be nonnegative")
    lengths = t.side_lengths()
    order = sorted(range(3), key=lambda i: (lengths[i], i))
    labels = {order[0]: "S", order[1]: "M", order[2]: "L"}
    ties = []
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(lengths[i] - lengths[j]) / max(lengths[i], lengths[j]) < tie_tol:
                ties.append((i, j))
    return SideClassification(labels=labels, ties=tuple(ties))


def _reflect_point(p: Point2, a: Point2, b: Point2) -> Point2:
    dx, dy = b.x - a.x, b.y - a.y
    den = dx * dx + dy * dy
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / den
    fx, fy = a.x + t * dx, a.y + t * dy
    return Point2(2.0 * fx - p.x, 2.0 * fy - p.y)


def reflect_double(t: Triangle, side_index: int) -> Polygon:
    """Union of `t` and its mirror image across the chosen side.

    Reflecting a right triangle over a leg yields an isosceles triangle (the
    straight angle at the right-angle vertex is dropped); any other reflection
    yields a kite quadrilateral.
    """
    if side_index not in (0, 1, 2):
        raise ValueError("side_index must be 0, 1 or 2")
    p, q = t.side(side_index)
    r = t.vertices[(side_index + 2) % 3]
    r_mirror = _reflect_point(r, p, q)
    quad = [p, r_mirror, q, r]
    # drop vertices where the two adjacent edges are collinear (unfolded right angle)
    scale2 = max(t.side_lengths()) ** 2
    kept = []
    for i, v in enumerate(quad):
        a, c = quad[i - 1], quad[(i + 1) % 4]
        cross = (v.x - a.x) * (c.y - v.y) - (v.y - a.y) * (c.x - v.x)
        if abs(cross) > 1e-12 * scale2:
            kept.append(v)
    if len(kept) < 3:
        raise ValueError("reflection produced a degenerate polygon")
    out = Polygon(tuple(kept)) if len(kept) == 4 else Triangle(tuple(kept))
    if out.area() <= 0:
        raise ValueError("reflection produced a degenerate polygon")
    return out


def _require_canonical_right_triangle(t: Triangle) -> tuple[float, float]:
    v0, v1, v2 = t.vertices
    if not (v0.x == 0.0 and v0.y == 0.0 and v1.y == 0.0 and v2.x == 0.0
            and v1.x > 0.0 and v2.y > 0.0):
        raise ValueError(
            "expected the canonical right triangle (0,0), (a,0), (0,c); "
            "build it with right_triangle()")
    return v1.x, v2.y


def rhombus_from_right_triangle(t: Triangle) -> tuple[Polygon, tuple[Axis, Axis]]:
    """Four copies of the right triangle glued into the rhombus (+-a,0), (0,+-c).

    Returns the rhombus and its two diagonal reflection axes, long diagonal
    (x-axis) first.  The smallest rhombus angle is 2*arctan(c/a).
    """
    a, c = _require_canonical_right_triangle(t)
    rhombus = Polygon((Point2(a, 0.0), Point2(0.0, c), Point2(-a, 0.0), Point2(0.0, -c)))
    long_axis = Axis(Point2(0.0, 0.0), (1.0, 0.0))
    short_axis = Axis(Point2(0.0, 0.0), (0.0, 1.0))
    return rhombus, (long_axis, short_axis)


def trapezium_fixture() -> Polygon:
    """Trapezium (-3,0), (3,0), (3,2), (0,2); sides 0..3 = bottom, right, top, sloped."""
    return Polygon((Point2(-3.0, 0.0), Point2(3.0, 0.0), Point2(3.0, 2.0), Point2(0.0, 2.0)))


def obtuse_isosceles(h: float) -> Triangle:
    """Isosceles triangle with unit equal sides, apex (0,h), base vertices (+-w,0).

    For h < 1/sqrt(2) this is the obtuse triangle with aperture 2*arccos(h)
    at the apex, i.e. the double of the canonical right triangle across its
    short leg (up to congruence).
    """
    if not 0.0 < h < 1.0:
        raise ValueError("h must lie in (0, 1)")
    w = math.sqrt(1.0 - h * h)
    return Triangle((Point2(-w, 0.0), Point2(w, 0.0), Point2(0.0, h)))


def acute_isosceles(h: float) -> Triangle:
    """Isosceles triangle with unit equal sides, apex (w,0), base vertices (0,+-h).

    Aperture 2*arcsin(h) at the apex; the double of the canonical right
    triangle across its middle leg (up to congruence).
    """
    if not 0.0 < h < 1.0:
        raise ValueError("h must lie in (0, 1)")
    w = math.sqrt(1.0 - h * h)
    return Triangle((Point2(0.0, -h), Point2(w, 0.0), Point2(0.0, h)))


def scalene_from_apex(x: float, y: float) -> Triangle:
    """Triangle with base (0,0)-(1,0) and apex (x,y), y > 0.

    Apexes with 0 < x < 1/2 inside the unit disk around (1,0) cover every
    similarity class once, with strict ordering |apex| < |apex-(1,0)| < 1.
    """
    if y <= 0:
        raise ValueError("apex must lie strictly above the base")
    return Triangle((Point2(0.0, 0.0), Point2(1.0, 0.0), Point2(x, y)))


def regular_polygon(n_sides: int, circumradius: float = 1.0) -> Polygon:
    if n_sides < 3:
        raise ValueError("need at least 3 sides")
    pts = []
    for k in range(n_sides):
        ang = 2.0 * math.pi * k / n_sides
        pts.append(Point2(circumradius * math.cos(ang), circumradius * math.sin(ang)))
    return Polygon(tuple(pts))
