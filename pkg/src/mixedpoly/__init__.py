"""Computations with mixed polynomials f(z, conj(z)).

The package detects radial and polar weighted homogeneity, certifies
winding numbers of circle images, isolates the zeros of one-variable
mixed polynomials with local intersection indices, verifies that the
topological degree of a mixed projective hypersurface equals its polar
degree on random line sections, and evaluates closed-form invariants
(Euler characteristics, Milnor numbers, genus, zeta functions) for the
named polynomial families.  See the ``mixedpoly`` CLI and the scripts
under ``demos/`` for worked examples.
"""

from . import errors
from .grammar import format_poly, parse
from .homogeneity import WeightAnalysis, analyze, is_mixed_singular
from .invariants import (FAMILY_KINDS, CurveInvariants, FamilySpec,
                         attainable_genera, build_f_qj, build_family,
                         build_k_ell, chi_relations, curve_invariants,
                         euler_join, euler_simplicial, family_chi,
                         genus_from_chi, genus_table, homology_pattern,
                         join_family_inner, milnor_join, zeta_factors,
                         zeta_string)
from .poly import MixedPolynomial
from .projective import (DegreeVerdict, LineSection, ScanResult, lkn,
                         scan_point_counts, verify_degree)
from .roots import (Box, CertifiedRoot, ProjectiveCount, RootInventory,
                    SolverOptions, count_projective_points,
                    count_projective_points_detailed, solve)
from .winding import (Contour, WindingReport, contour_winding,
                      degree_at_infinity, dominance_radius, local_index,
                      top_monomial)

__version__ = "0.1.0"

__all__ = [
    "MixedPolynomial", "parse", "format_poly",
    "WeightAnalysis", "analyze", "is_mixed_singular",
    "Contour", "WindingReport", "contour_winding", "degree_at_infinity",
    "dominance_radius", "local_index", "top_monomial",
    "Box", "CertifiedRoot", "RootInventory", "SolverOptions", "solve",
    "ProjectiveCount", "count_projective_points",
    "count_projective_points_detailed",
    "DegreeVerdict", "LineSection", "ScanResult", "lkn",
    "scan_point_counts", "verify_degree",
    "FAMILY_KINDS", "FamilySpec", "CurveInvariants", "build_family",
    "build_f_qj", "build_k_ell", "join_family_inner", "euler_join",
    "milnor_join", "euler_simplicial", "genus_from_chi", "chi_relations",
    "zeta_factors", "zeta_string", "homology_pattern", "genus_table",
    "attainable_genera", "family_chi", "curve_invariants",
    "errors",
]
