"""Smallest eigenpairs of the pencil K u = lambda M u, with Richardson-style
extrapolation of eigenvalues across nested refinement levels.

Systems up to DENSE_LIMIT free dofs use a dense symmetric solve; larger ones
use ARPACK shift-invert with a fixed positive shift (the pure-Neumann pencil
is singular at zero, K + M is definite).  The ARPACK start vector is fixed so
repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as dense_linalg
import scipy.sparse.linalg as sparse_linalg

from .assembly import AssembledSystem, FEFunction
from .geometry import BoundarySpec, Polygon
from .meshing import refine_uniform, triangulate

DENSE_LIMIT = 3000
NEUMANN_SHIFT = 1.0


class SolverError(RuntimeError):
    pass


@dataclass
class EigenPair:
    value: float
    vector: FEFunction
    residual: float


@dataclass
class Spectrum:
    """k smallest eigenpairs, ascending, with M-orthonormal vectors."""

    pairs: list[EigenPair]
    bc: BoundarySpec | None
    level: int

    @property
    def values(self) -> list[float]:
        return [p.value for p in self.pairs]

    def __len__(self):
        return len(self.pairs)


@dataclass
class Estimate:
    """Extrapolated eigenvalue with a conservative error bar.

    `flagged` marks sequences that were not monotone and contracting, where
    the bar falls back to the last level difference.
    """

    value: float
    error_bar: float
    per_level: tuple[float, ...]
    observed_order: float | None
    flagged: bool = False

    @classmethod
    def exact(cls, value: float, error_bar: float = 0.0) -> "Estimate":
        return cls(value=value, error_bar=error_bar, per_level=(), observed_order=None)


def _sign_fix(m_free, vec: np.ndarray) -> np.ndarray:
    weighted_mean = float(np.sum(m_free @ vec))
    if abs(weighted_mean) > 1e-8:
        return vec if weighted_mean > 0 else -vec
    lead = np.nonzero(np.abs(vec) > 1e-12 * np.abs(vec).max())[0]
    if len(lead) and vec[lead[0]] < 0:
        return -vec
    return vec


def smallest_eigenpairs(sys: AssembledSystem, k: int, tol: float = 1e-7) -> Spectrum:
    """k smallest eigenpairs of (K, M); includes the zero mode of Neumann systems."""
    n = sys.dimension
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > n:
        raise ValueError(f"requested {k} eigenpairs from a dimension-{n} system")
    if tol <= 0:
        raise ValueError("tol must be positive")

    if n <= DENSE_LIMIT:
        w, v = dense_linalg.eigh(sys.stiffness.toarray(), sys.mass.toarray(),
                                 subset_by_index=[0, k - 1])
    else:
        v0 = np.full(n, 1.0 / math.sqrt(n))
        try:
            w, v = sparse_linalg.eigsh(sys.stiffness.tocsc(), k=k, M=sys.mass.tocsc(),
                                       sigma=-NEUMANN_SHIFT, v0=v0, tol=0)
        except sparse_linalg.ArpackNoConvergence as exc:
            raise SolverError(
                f"ARPACK converged {len(exc.eigenvalues)}/{k} eigenpairs "
                f"(best values {exc.eigenvalues})") from exc
        order = np.argsort(w)
        w, v = w[order], v[:, order]

    pairs = []
    m_free = sys.mass
    k_free = sys.stiffness
    for i in range(k):
        vec = v[:, i]
        vec = vec / math.sqrt(float(vec @ (m_free @ vec)))
        vec = _sign_fix(m_free, vec)
        ku = k_free @ vec
        mu = m_free @ vec
        # the ||Mu|| floor keeps the quotient meaningful for the zero Neumann mode,
        # where ||Ku|| and |lambda| both vanish
        scale = max(np.linalg.norm(ku) + abs(w[i]) * np.linalg.norm(mu), np.linalg.norm(mu))
        residual = float(np.linalg.norm(ku - w[i] * mu) / scale)
        if residual > tol:
            raise SolverError(f"eigenpair {i} residual {residual:.3e} exceeds tol {tol:.3e}")
        full = np.zeros(sys.stiffness_full.shape[0])
        full[sys.free_dofs] = vec
        pairs.append(EigenPair(float(w[i]), FEFunction(sys.mesh, full), residual))
    return Spectrum(pairs=pairs, bc=sys.bc, level=sys.mesh.level if sys.mesh else -1)


def solve_sequence(polygon: Polygon, bc: BoundarySpec, levels: int, k: int,
                   first_level: int = 2, tol: float = 1e-7,
                   meshes=None) -> list[Spectrum]:
    """Solve on nested refinements first_level .. first_level+levels-1.

    Precomputed `meshes` may be passed to share triangulations between
    boundary specs.
    """
    from .assembly import assemble

    if levels < 2:
        raise ValueError("need at least 2 refinement levels")
    if meshes is None:
        mesh = triangulate(polygon)
        for _ in range(first_level):
            mesh = refine_uniform(mesh)
        meshes = [mesh]
        for _ in range(levels - 1):
            meshes.append(refine_uniform(meshes[-1]))
    return [smallest_eigenpairs(assemble(m, bc), k, tol) for m in meshes[:levels]]


def extrapolate(values, last_residual: float = 0.0) -> Estimate:
    """Fit lambda_l = lambda + C*4^(-p*l) to the last three levels.

    error_bar = |last correction| + residual contribution; non-monotone or
    non-contracting sequences fall back to the last value with the last
    difference as a (flagged) bar.
    """
    vals = tuple(float(v) for v in values)
    if len(vals) < 3:
        raise ValueError("extrapolation needs at least 3 levels")
    res_term = abs(last_residual) * abs(vals[-1])
    d1 = vals[-3] - vals[-2]
    d2 = vals[-2] - vals[-1]
    if d1 == 0.0 and d2 == 0.0:
        return Estimate(vals[-1], res_term, vals, None)
    if d1 <= 0.0 or d2 <= 0.0 or d2 >= d1:
        return Estimate(vals[-1], abs(d2) + res_term, vals, None, flagged=True)
    ratio = d1 / d2
    order = math.log(ratio) / math.log(4.0)
    correction = d2 / (ratio - 1.0)
    return Estimate(vals[-1] - correction, abs(correction) + res_term, vals, order)


def degeneracy_clusters(spectrum, rel_gap: float = 1e-6) -> list[list[int]]:
    """Group consecutive eigenvalues whose relative gap is below rel_gap."""
    values = spectrum.values if isinstance(spectrum, Spectrum) else [float(v) for v in spectrum]
    clusters: list[list[int]] = []
    for i, v in enumerate(values):
        if clusters:
            prev = values[clusters[-1][-1]]
            scale = max(abs(prev), abs(v))
            if scale > 0 and abs(v - prev) < rel_gap * scale:
                clusters[-1].append(i)
                continue
        clusters.append([i])
    return clusters
