"""Exact link invariants and root-of-unity Euler characteristics.

The package computes the two-variable skein invariant of oriented links and
its Alexander and sl(n) specializations in exact arithmetic, provides
(1/n)Z-graded chain complex algebra whose Euler characteristics live in
cyclotomic integer rings, and verifies the evaluation identities tying the
two worlds together at roots of unity.
"""

from .alexoracle import AlexClass, alex_matrix_poly, normalize_symmetric
from .cyclo import CycloNum, cyclo_arith, eval_at_root, root
from .frcomplex import (FracComplex, GradedModule, build, build_module, cone,
                        euler_char, homology, koszul_tensor, shift,
                        spectral_sequence, unknot_hfkn)
from .gradings import (DimTable, chi_bigraded, chi_trigraded, collapse_to_frac,
                       hfk_shift_spec, homfly_grading_dict, make_table)
from .laurent import (LaurentPoly, RationalPair, exact_div, mono, parse_poly,
                      serialize, substitute, var)
from .linkdiag import (LinkDiagram, SkeinSite, diagram_stats, parse_braid,
                       parse_link, parse_pd, skein_resolve)
from .skein import (alexander, homfly_middle, homfly_reduced, homfly_unreduced,
                    sln_poly)

__all__ = [
    "AlexClass", "CycloNum", "DimTable", "FracComplex", "GradedModule",
    "LaurentPoly", "LinkDiagram", "RationalPair", "SkeinSite",
    "alex_matrix_poly", "alexander", "build", "build_module", "chi_bigraded",
    "chi_trigraded", "collapse_to_frac", "cone", "cyclo_arith", "diagram_stats", "euler_char",
    "eval_at_root", "exact_div", "hfk_shift_spec", "homfly_grading_dict",
    "homfly_middle", "homfly_reduced", "homfly_unreduced", "homology",
    "koszul_tensor", "make_table", "mono", "normalize_symmetric", "parse_braid",
    "parse_link", "parse_pd", "parse_poly", "root", "serialize", "shift",
    "skein_resolve", "sln_poly", "spectral_sequence", "substitute",
    "unknot_hfkn", "var",
]
