"""Match mixed eigenvalues of a right triangle to rhombus eigenvalues of the
corresponding symmetry class.

The reflection extension sends Dirichlet legs to antisymmetry across the
matching diagonal: Dirichlet on the short leg pairs with the class that is
antisymmetric across the short diagonal, and so on; the triangle's own
Neumann mu_2 pairs with the lowest nonconstant doubly symmetric mode, and
lam_1^L with the rhombus ground state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigensolver import Estimate
from .geometry import Triangle, classify_sides
from .pipeline import DEFAULT_FIRST_LEVEL, mesh_sequence, sweep_polygon, sweep_rhombus

NEUMANN_TARGETS = (
    ("lam1_S", "SA"),  # Dirichlet short leg -> antisymmetric across short diagonal
    ("lam1_M", "AS"),  # Dirichlet middle leg -> antisymmetric across long diagonal
    ("mu2", "SS"),
)


@dataclass(frozen=True)
class MatchRecord:
    triangle_label: str
    rhombus_label: str
    triangle: Estimate
    rhombus: Estimate
    difference: float
    combined_bar: float

    @property
    def matched(self) -> bool:
        return self.difference <= self.combined_bar


def triangle_to_rhombus_matching(t: Triangle, levels: int = 4, k: int = 8,
                                 first_level: int = DEFAULT_FIRST_LEVEL,
                                 tol: float = 1e-7) -> list[MatchRecord]:
    """Compare extrapolated triangle eigenvalues against the rhombus spectrum."""
    cls = classify_sides(t)
    meshes = mesh_sequence(t, first_level, levels)

    tri: dict[str, Estimate] = {}
    neumann = sweep_polygon(meshes, cls.dirichlet_spec(""), k=2, tol=tol)
    tri["mu2"] = neumann.estimates[1]
    for label in ("S", "M", "L"):
        sweep = sweep_polygon(meshes, cls.dirichlet_spec(label), k=1, tol=tol)
        tri[f"lam1_{label}"] = sweep.estimates[0]

    rhombus_neumann = sweep_rhombus(t, "neumann", levels, k, first_level, tol)
    rhombus_dirichlet = sweep_rhombus(t, "dirichlet", levels, 2, first_level, tol)

    records = []
    for tri_label, klass in NEUMANN_TARGETS:
        hit = rhombus_neumann.lowest_in_class(klass, skip_zero=True)
        if hit is None:
            raise RuntimeError(f"no rhombus Neumann mode of class {klass} among the "
                               f"{len(rhombus_neumann.classes)} computed modes")
        idx, est = hit
        records.append(_record(tri_label, f"mu{idx + 1}[{klass}]", tri[tri_label], est))
    records.append(_record("lam1_L", "lam1", tri["lam1_L"], rhombus_dirichlet.sweep.estimates[0]))
    return records


def _record(tri_label: str, rh_label: str, tri_est: Estimate, rh_est: Estimate) -> MatchRecord:
    return MatchRecord(
        triangle_label=tri_label,
        rhombus_label=rh_label,
        triangle=tri_est,
        rhombus=rh_est,
        difference=abs(tri_est.value - rh_est.value),
        combined_bar=tri_est.error_bar + rh_est.error_bar,
    )
