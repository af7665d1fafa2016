"""Shared solve pipelines: refinement sequences, per-index extrapolated
estimates, and classified rhombus mode tables."""

from __future__ import annotations

from dataclasses import dataclass

from .assembly import assemble
from .eigensolver import Estimate, Spectrum, degeneracy_clusters, extrapolate, smallest_eigenpairs
from .geometry import BoundarySpec, Polygon, Triangle
from .meshing import Mesh, refine_uniform, symmetric_rhombus_mesh, triangulate
from .modes import ModeSymmetry, classify_spectrum

DEFAULT_FIRST_LEVEL = 2
ZERO_MODE_TOL = 1e-7


def mesh_sequence(polygon: Polygon, first_level: int, count: int) -> list[Mesh]:
    mesh = triangulate(polygon)
    for _ in range(first_level):
        mesh = refine_uniform(mesh)
    seq = [mesh]
    for _ in range(count - 1):
        seq.append(refine_uniform(seq[-1]))
    return seq


def estimate_indices(spectra: list[Spectrum], tol: float = 1e-7) -> list[Estimate]:
    """Extrapolate each eigenvalue index across levels.

    Indices whose values stay below the zero-mode threshold on every level
    (the Neumann constant mode) get the solver tolerance as their bar instead
    of a meaningless fit to roundoff noise.
    """
    k = min(len(s) for s in spectra)
    out = []
    for i in range(k):
        vals = [s.values[i] for s in spectra]
        if all(abs(v) <= ZERO_MODE_TOL for v in vals):
            out.append(Estimate(vals[-1], max(tol, 1e-9), tuple(vals), None))
        else:
            out.append(extrapolate(vals, last_residual=spectra[-1].pairs[i].residual))
    return out


@dataclass
class SpectrumSweep:
    """Eigenvalue estimates for one (polygon, bc) pair plus the finest spectrum."""

    estimates: list[Estimate]
    spectra: list[Spectrum]

    @property
    def top(self) -> Spectrum:
        return self.spectra[-1]


def sweep_polygon(meshes: list[Mesh], bc: BoundarySpec, k: int, tol: float = 1e-7) -> SpectrumSweep:
    spectra = [smallest_eigenpairs(assemble(m, bc), k, tol) for m in meshes]
    return SpectrumSweep(estimates=estimate_indices(spectra, tol), spectra=spectra)


def estimate_clusters(estimates: list[Estimate], rel_gap: float = 1e-6) -> list[list[int]]:
    """Group estimates indistinguishable in the continuum limit.

    Two consecutive estimates cluster when their gap is inside three times the
    combined error bars (discretization split of a true multiple eigenvalue)
    or below rel_gap relatively (exact discrete degeneracy).
    """
    clusters: list[list[int]] = []
    for i, est in enumerate(estimates):
        if clusters:
            prev = estimates[clusters[-1][-1]]
            gap = abs(est.value - prev.value)
            scale = max(abs(est.value), abs(prev.value))
            if gap <= 3.0 * (est.error_bar + prev.error_bar) or (scale > 0 and gap < rel_gap * scale):
                clusters[-1].append(i)
                continue
        clusters.append([i])
    return clusters


@dataclass
class RhombusModes:
    """Classified rhombus spectrum across levels for one boundary kind.

    `clusters` are discrete top-level degeneracies (they decide whether
    per-vector classification applies); `value_clusters` group extrapolated
    values that agree within error bars, i.e. continuum degeneracies.
    """

    sweep: SpectrumSweep
    clusters: list[list[int]]
    classes: list[ModeSymmetry]
    value_clusters: list[list[int]]

    def value_cluster_of(self, index: int) -> list[int]:
        for cluster in self.value_clusters:
            if index in cluster:
                return cluster
        raise IndexError(index)

    def class_counts(self, indices) -> dict[str, int]:
        """Multiplicity of each symmetry type among the given mode indices."""
        counts: dict[str, int] = {}
        seen: set[int] = set()
        for i in indices:
            if i in seen:
                continue
            mode = self.classes[i]
            if mode.subspace_dims is None:
                counts[mode.klass] = counts.get(mode.klass, 0) + 1
                seen.add(i)
            else:
                discrete = next(c for c in self.clusters if i in c)
                for klass, dim in mode.subspace_dims.items():
                    if dim:
                        counts[klass] = counts.get(klass, 0) + dim
                seen.update(discrete)
        return counts

    def lowest_in_class(self, klass: str, skip_zero: bool = False) -> tuple[int, Estimate] | None:
        """Index and estimate of the lowest mode of a symmetry class.

        Degenerate clusters count as carrying a class when their projected
        subspace contains it.  skip_zero ignores the Neumann constant mode.
        """
        for i, mode in enumerate(self.classes):
            if skip_zero and abs(self.sweep.top.values[i]) <= ZERO_MODE_TOL:
                continue
            if mode.klass == klass:
                return i, self.sweep.estimates[i]
            if mode.subspace_dims is not None and mode.subspace_dims.get(klass, 0) > 0:
                return i, self.sweep.estimates[i]
        return None


def sweep_rhombus(t: Triangle, bc_kind: str, levels: int, k: int,
                  first_level: int = DEFAULT_FIRST_LEVEL, tol: float = 1e-7,
                  rel_gap: float = 1e-6) -> RhombusModes:
    """Solve the rhombus built from `t` on symmetric meshes and classify modes."""
    if bc_kind not in ("neumann", "dirichlet"):
        raise ValueError("bc_kind must be 'neumann' or 'dirichlet'")
    spectra = []
    maps = None
    mass_full = None
    for lvl in range(first_level, first_level + levels):
        mesh, maps = symmetric_rhombus_mesh(t, lvl)
        bc = (BoundarySpec.all_neumann(4) if bc_kind == "neumann"
              else BoundarySpec.all_dirichlet(4))
        sys = assemble(mesh, bc)
        mass_full = sys.mass_full
        spectra.append(smallest_eigenpairs(sys, k, tol))
    sweep = SpectrumSweep(estimates=estimate_indices(spectra, tol), spectra=spectra)
    clusters = degeneracy_clusters(sweep.top, rel_gap)
    classes = classify_spectrum(sweep.top, maps, mass_full, clusters)
    return RhombusModes(sweep=sweep, clusters=clusters, classes=classes,
                        value_clusters=estimate_clusters(sweep.estimates, rel_gap))
