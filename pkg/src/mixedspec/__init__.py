"""Laplace eigenvalues of polygons with per-side Dirichlet/Neumann conditions,
and a verification harness for triangle and rhombus eigenvalue orderings."""

from .assembly import (AssembledSystem, FEFunction, assemble, energy_split,
                       mean_zero_project, rayleigh_quotient)
from .bounds import (bound_hooker_protter, bound_isosceles_upper, bound_obtuse_upper,
                     gap_identity_residual, gap_quadratic_factor)
from .closed_forms import ClosedFormSpectrum, closed_form
from .eigensolver import (EigenPair, Estimate, SolverError, Spectrum, degeneracy_clusters,
                          extrapolate, smallest_eigenpairs, solve_sequence)
from .geometry import (DIRICHLET, NEUMANN, Axis, BoundarySpec, Point2, Polygon,
                       SideClassification, Triangle, acute_isosceles, classify_sides,
                       obtuse_isosceles, reflect_double, regular_polygon,
                       rhombus_from_right_triangle, right_triangle, scalene_from_apex,
                       trapezium_fixture)
from .matching import MatchRecord, triangle_to_rhombus_matching
from .meshing import Mesh, MeshError, SymmetryMap, refine_uniform, symmetric_rhombus_mesh, triangulate
from .modes import (ClassificationError, ModeSymmetry, cluster_symmetry, cond_ratio,
                    nodal_domain_count, symmetry_class)
from .reporting import (InequalityCheck, VerificationReport, evaluate_status, make_check,
                        to_csv, to_json)
from .verifier import (cmd_bounds, cmd_conjecture, cmd_order, cmd_polygon_lb, cmd_rhombus,
                       cmd_trapezium, export_report)

__version__ = "0.1.0"
