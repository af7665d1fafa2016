"""Piecewise-linear stiffness/mass assembly with Dirichlet elimination.

Element matrices are exact closed forms (no quadrature is needed for
degree-1 elements), so discretization error comes from the mesh alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sparse

from .geometry import BoundarySpec
from .meshing import Mesh


class AssemblyError(ValueError):
    pass


@dataclass
class FEFunction:
    """Nodal values at every mesh vertex (zero on Dirichlet-constrained dofs)."""

    mesh: Mesh | None
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.mesh is not None and self.values.shape != (self.mesh.n_vertices,):
            raise ValueError("value count must match mesh vertex count")


@dataclass
class AssembledSystem:
    """Stiffness/mass pair of the free (unconstrained) dofs.

    `stiffness`/`mass` are restricted to free dofs; the unrestricted matrices
    are kept for Rayleigh quotients and symmetry inner products on full nodal
    vectors.
    """

    stiffness: sparse.csr_matrix
    mass: sparse.csr_matrix
    free_dofs: np.ndarray
    constrained_dofs: np.ndarray
    stiffness_full: sparse.csr_matrix
    mass_full: sparse.csr_matrix
    mesh: Mesh | None = None
    bc: BoundarySpec | None = None

    @property
    def dimension(self) -> int:
        return len(self.free_dofs)

    @classmethod
    def from_matrices(cls, stiffness, mass) -> "AssembledSystem":
        """Wrap an explicit (K, M) pencil with every dof free (used for 1D checks)."""
        stiffness = sparse.csr_matrix(stiffness)
        mass = sparse.csr_matrix(mass)
        n = stiffness.shape[0]
        free = np.arange(n)
        return cls(stiffness, mass, free, np.empty(0, dtype=np.int64),
                   stiffness, mass, mesh=None, bc=None)


def element_matrices(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-cell 3x3 stiffness and consistent mass matrices for P1 elements.

    coords has shape (n_cells, 3, 2).  Stiffness rows sum to zero (partition
    of unity); mass entries sum to the cell area.
    """
    x = coords[:, :, 0]
    y = coords[:, :, 1]
    # b_i = y_j - y_k, c_i = x_k - x_j for (i, j, k) cyclic
    b = np.stack([y[:, 1] - y[:, 2], y[:, 2] - y[:, 0], y[:, 0] - y[:, 1]], axis=1)
    c = np.stack([x[:, 2] - x[:, 1], x[:, 0] - x[:, 2], x[:, 1] - x[:, 0]], axis=1)
    # cross-product form keeps mirrored cells bitwise identical after reordering
    area2 = (x[:, 1] - x[:, 0]) * (y[:, 2] - y[:, 0]) - (x[:, 2] - x[:, 0]) * (y[:, 1] - y[:, 0])
    ke = (b[:, :, None] * b[:, None, :] + c[:, :, None] * c[:, None, :]) / (2.0 * area2)[:, None, None]
    mass_ref = (np.ones((3, 3)) + np.eye(3)) / 24.0
    me = area2[:, None, None] * mass_ref
    return ke, me


def _sum_duplicates_stable(rows, cols, data, n) -> sparse.csr_matrix:
    # stable sort + sequential per-entry reduction keeps mirrored cells'
    # contributions summed in mirrored order, so symmetric meshes assemble
    # to matrices that commute with their reflection permutations exactly
    order = np.lexsort((cols, rows))
    r, c, d = rows[order], cols[order], data[order]
    starts = np.empty(len(r), dtype=bool)
    starts[0] = True
    starts[1:] = (r[1:] != r[:-1]) | (c[1:] != c[:-1])
    idx = np.nonzero(starts)[0]
    return sparse.csr_matrix((np.add.reduceat(d, idx), (r[idx], c[idx])), shape=(n, n))


def assemble_matrices(mesh: Mesh) -> tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """Unconstrained stiffness and mass matrices over all mesh vertices."""
    ke, me = element_matrices(mesh.vertices[mesh.cells])
    rows = np.repeat(mesh.cells, 3, axis=1).ravel()
    cols = np.tile(mesh.cells, (1, 3)).ravel()
    n = mesh.n_vertices
    k = _sum_duplicates_stable(rows, cols, ke.ravel(), n)
    m = _sum_duplicates_stable(rows, cols, me.ravel(), n)
    return k, m


def constrained_vertices(mesh: Mesh, bc: BoundarySpec) -> np.ndarray:
    """Vertices on at least one Dirichlet-tagged side (junction vertices included)."""
    tags = np.asarray([bc.conditions[s] == "dirichlet" for s in mesh.boundary_edges[:, 2]])
    edges = mesh.boundary_edges[tags]
    return np.unique(edges[:, :2]) if len(edges) else np.empty(0, dtype=np.int64)


def assemble(mesh: Mesh, bc: BoundarySpec) -> AssembledSystem:
    """Assemble the P1 system for `mesh` with the given per-side conditions."""
    if bc.n_sides != mesh.n_polygon_sides:
        raise AssemblyError(
            f"boundary spec has {bc.n_sides} sides, mesh polygon has {mesh.n_polygon_sides}")
    k_full, m_full = assemble_matrices(mesh)
    constrained = constrained_vertices(mesh, bc)
    mask = np.ones(mesh.n_vertices, dtype=bool)
    mask[constrained] = False
    free = np.nonzero(mask)[0]
    if len(free) == 0:
        raise AssemblyError("all dofs constrained; refine the mesh")
    k = k_full[free][:, free].tocsr()
    m = m_full[free][:, free].tocsr()
    return AssembledSystem(k, m, free, constrained, k_full, m_full, mesh=mesh, bc=bc)


def rayleigh_quotient(sys: AssembledSystem, u: FEFunction) -> float:
    """R[u] = (u' K u) / (u' M u) over the free dofs."""
    uf = u.values[sys.free_dofs]
    den = float(uf @ (sys.mass @ uf))
    if den <= 0.0 or not np.isfinite(den):
        raise ValueError("function is zero (or invalid) on the free dofs")
    num = float(uf @ (sys.stiffness @ uf))
    return num / den


def energy_split(mesh: Mesh, u: FEFunction) -> tuple[float, float]:
    """(integral of u_x^2, integral of u_y^2) from the piecewise-constant gradient."""
    coords = mesh.vertices[mesh.cells]
    x = coords[:, :, 0]
    y = coords[:, :, 1]
    b = np.stack([y[:, 1] - y[:, 2], y[:, 2] - y[:, 0], y[:, 0] - y[:, 1]], axis=1)
    c = np.stack([x[:, 2] - x[:, 1], x[:, 0] - x[:, 2], x[:, 1] - x[:, 0]], axis=1)
    area2 = (x[:, 1] - x[:, 0]) * (y[:, 2] - y[:, 0]) - (x[:, 2] - x[:, 0]) * (y[:, 1] - y[:, 0])
    uv = u.values[mesh.cells]
    gx = (uv * b).sum(axis=1) / area2
    gy = (uv * c).sum(axis=1) / area2
    areas = 0.5 * area2
    return float((areas * gx * gx).sum()), float((areas * gy * gy).sum())


def mean_zero_project(sys: AssembledSystem, u: FEFunction) -> FEFunction:
    """Subtract the M-weighted mean; requires an all-Neumann system."""
    if len(sys.constrained_dofs) != 0:
        raise ValueError("mean-zero projection is defined for all-Neumann systems")
    ones = np.ones(sys.dimension)
    m_ones = sys.mass @ ones
    mean = float(m_ones @ u.values[sys.free_dofs]) / float(m_ones @ ones)
    return FEFunction(u.mesh, u.values - mean)
