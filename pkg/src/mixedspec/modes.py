"""Eigenfunction diagnostics: nodal-domain counting, rhombus symmetry
classification, and the derivative-energy ratio test for acute isosceles
second Neumann modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assembly import FEFunction, energy_split
from .meshing import Mesh, SymmetryMap

SCORE_SYMMETRIC = 0.99
CLASS_NAMES = ("SS", "SA", "AS", "AA")  # letters ordered (long diagonal, short diagonal)


class ClassificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ModeSymmetry:
    """Parity of a rhombus eigenfunction w.r.t. (long, short) diagonal.

    For degenerate clusters, `subspace_dims` holds the dimension of each
    symmetry type inside the cluster instead of a per-vector class.
    """

    klass: str
    scores: tuple[float, float]
    subspace_dims: dict[str, int] | None = None


def nodal_domain_count(mesh: Mesh, u: FEFunction, eps_rel: float = 1e-3) -> int:
    """Number of connected sign components of u, thresholded at eps_rel*max|u|."""
    vals = u.values
    peak = float(np.abs(vals).max())
    if peak == 0.0:
        raise ValueError("function is identically zero")
    eps = eps_rel * peak
    sign = np.zeros(mesh.n_vertices, dtype=np.int8)
    sign[vals > eps] = 1
    sign[vals < -eps] = -1
    if not sign.any():
        raise ValueError("function is numerically zero at the given threshold")

    parent = np.arange(mesh.n_vertices)

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b, c in mesh.cells:
        for p, q in ((a, b), (b, c), (c, a)):
            if sign[p] != 0 and sign[p] == sign[q]:
                rp, rq = find(p), find(q)
                if rp != rq:
                    parent[rp] = rq

    roots = {find(i) for i in range(mesh.n_vertices) if sign[i] != 0}
    return len(roots)


def _reflect_values(u: np.ndarray, m: SymmetryMap) -> np.ndarray:
    return u[m.permutation]


def symmetry_scores(u: FEFunction, maps, mass) -> tuple[float, float]:
    """M-inner products of u with its two diagonal reflections, in [-1, 1]."""
    vals = u.values
    norm = float(vals @ (mass @ vals))
    return tuple(float(vals @ (mass @ _reflect_values(vals, m))) / norm for m in maps)


def symmetry_class(u: FEFunction, maps, mass) -> ModeSymmetry:
    """Classify a simple eigenfunction as SS/SA/AS/AA by its reflection scores.

    Scores away from +-1 signal a degenerate cluster (use cluster_symmetry)
    or a broken mesh symmetry, and raise ClassificationError.
    """
    scores = symmetry_scores(u, maps, mass)
    letters = []
    for s in scores:
        if s > SCORE_SYMMETRIC:
            letters.append("S")
        elif s < -SCORE_SYMMETRIC:
            letters.append("A")
        else:
            raise ClassificationError(
                f"reflection scores {scores} are not within {SCORE_SYMMETRIC} of +-1; "
                "degenerate cluster or asymmetric mesh/solve")
    return ModeSymmetry(klass="".join(letters), scores=scores)


def cluster_symmetry(vectors, maps, mass) -> dict[str, int]:
    """Dimensions of the four symmetry types inside a degenerate eigenspace."""
    long_map, short_map = maps
    dims = {}
    for name in CLASS_NAMES:
        s_long = 1.0 if name[0] == "S" else -1.0
        s_short = 1.0 if name[1] == "S" else -1.0
        projected = []
        for u in vectors:
            v = u.values
            v_l = _reflect_values(v, long_map)
            v_s = _reflect_values(v, short_map)
            v_ls = _reflect_values(v_l, short_map)
            projected.append(0.25 * (v + s_long * v_l + s_short * v_s + s_long * s_short * v_ls))
        basis = np.array(projected)
        gram = basis @ (mass @ basis.T)
        eigvals = np.linalg.eigvalsh(gram)
        dims[name] = int(np.sum(eigvals > 1e-6 * max(1.0, eigvals.max())))
    return dims


def classify_spectrum(spectrum, maps, mass, clusters,
                      lenient_tail: bool = True) -> list[ModeSymmetry]:
    """Per-mode symmetry for a rhombus spectrum, cluster-aware.

    The cluster touching the last computed index may straddle the end of the
    window (its partner not computed); with lenient_tail its classification
    failure degrades to "unclassified" instead of raising.
    """
    out: list[ModeSymmetry] = []
    last = len(spectrum.pairs) - 1
    for cluster in clusters:
        if len(cluster) == 1:
            vec = spectrum.pairs[cluster[0]].vector
            try:
                out.append(symmetry_class(vec, maps, mass))
            except ClassificationError:
                if lenient_tail and cluster[0] == last:
                    out.append(ModeSymmetry("unclassified", symmetry_scores(vec, maps, mass)))
                else:
                    raise
        else:
            vecs = [spectrum.pairs[i].vector for i in cluster]
            dims = cluster_symmetry(vecs, maps, mass)
            scores = symmetry_scores(vecs[0], maps, mass)
            for _ in cluster:
                out.append(ModeSymmetry("degenerate-cluster", scores, subspace_dims=dims))
    return out


def cond_ratio(mesh: Mesh, u: FEFunction, beta: float) -> tuple[float, bool]:
    """Energy ratio (integral u_y^2) / (integral u_x^2) and whether it exceeds tan^2(beta)."""
    ex, ey = energy_split(mesh, u)
    if ex <= 1e-14 * ey:
        return math.inf, True
    ratio = ey / ex
    return ratio, ratio > math.tan(beta) ** 2
