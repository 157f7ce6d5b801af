"""Exact symbolic toolkit for ordinary differential operators.

Differential Sylvester matrices, resultants, subresultants, Bezout
cofactors and subresultant-based GCRDs over exact coefficient domains
(rational functions, differential polynomials with jet variables, and the
Weierstrass extension), plus a spectral-curve pipeline for commuting
operator pairs.
"""

from .domains import (DomainDescriptor, DomainElement, GeneratorTable,
                      MultiPoly, diff_polynomial_domain, exact_div, poly_gcd,
                      poly_lcm, rational_function_domain, reduce_weierstrass,
                      weierstrass_domain)
from .operators import (NEG_INF, ODO, DivisionResult, commutator, euclid_gcrd)
from .matrices import DiffMatrix, determinant
from .subresultants import (BezoutPair, SubresultantRecord, bezout_cofactors,
                            gcrd_subres, pdet, resultant, subres_matrix,
                            subresultant, subresultant_sequence, sylvester)
from .spectral import (CommutingPair, SpectralAnalysis, SpectralCurve,
                       analyze_commuting_pair, bc_resultant, euler_operator,
                       euler_pair, gcrd_on_curve, lame_pair, make_curve,
                       reduce_mod_curve, shift_by_parameter, squarefree_part,
                       substitute_parametrization, verify_bc_identity)
from .parsing import parse_domain_spec, parse_operator
from .rendering import render
from . import errors

__all__ = [
    "DomainDescriptor", "DomainElement", "GeneratorTable", "MultiPoly",
    "diff_polynomial_domain", "exact_div", "poly_gcd", "poly_lcm",
    "rational_function_domain", "reduce_weierstrass", "weierstrass_domain",
    "NEG_INF", "ODO", "DivisionResult", "commutator", "euclid_gcrd",
    "DiffMatrix", "determinant",
    "BezoutPair", "SubresultantRecord", "bezout_cofactors", "gcrd_subres",
    "pdet", "resultant", "subres_matrix", "subresultant",
    "subresultant_sequence", "sylvester",
    "CommutingPair", "SpectralAnalysis", "SpectralCurve",
    "analyze_commuting_pair", "bc_resultant", "euler_operator", "euler_pair",
    "gcrd_on_curve", "lame_pair", "make_curve", "reduce_mod_curve",
    "shift_by_parameter", "squarefree_part", "substitute_parametrization",
    "verify_bc_identity",
    "parse_domain_spec", "parse_operator", "render", "errors",
]

__version__ = "0.1.0"
