"""lenscalc: exact mod-p cohomology of lens-space products and the
classical manifold-realizability obstructions.

The package computes, over any odd prime p:

  * the graded-commutative ring Z_p[u_i, v_i]/(v_i^2, u_i^(p+1)) of a
    product of lens spaces (or its untruncated B Z_p version),
  * Bockstein and Steenrod power operations with the Cartan formula,
  * Poincare duality into the a_j homology basis,
  * integral homology generating sets of B(Z_p x Z_p),
  * the obstruction family b(P^i(x)) with realizability verdicts, and
  * the bordism spectral-sequence route: page stability and the d5
    evaluation through the Conner-Floyd rewrite relations.
"""

from .abelian import AbelianGroup, parse_group
from .ahss import (
    AHSSPage,
    BordismExpression,
    CoefficientTable,
    D5Verdict,
    StabilityReport,
    build_e2_page,
    cone_simplify,
    conner_floyd_rewrite,
    cp_gen,
    d5_input_boundary,
    evaluate_d5,
    evaluate_d5_xi,
    m_gen,
    page_stability_check,
)
from .algebra import (
    CLASSIFYING,
    LENS,
    CohomologyClass,
    Factor,
    InhomogeneousError,
    Monomial,
    SpaceModel,
    enumerate_monomials,
    monomial_class,
    poincare_series,
    thom_class,
    u,
    v,
)
from .duality import (
    AlphaMonomial,
    HomologyClass,
    IntegralBasisElement,
    alpha,
    homology_bockstein,
    integral_basis,
    integral_homology_of_classifying_product,
    mod_p_homology_dimensions,
    poincare_dual,
    thom_dual_class,
)
from .expressions import ParseError, format_cohomology, format_homology, parse_cohomology
from .modp import FpScalar, Prime, binom_mod_p
from .obstruction import (
    HomologyTable,
    IntegralityResult,
    NovikovReport,
    ObstructionReport,
    is_integral,
    novikov_check,
    thom_verdict,
)
from .steenrod import bockstein, steenrod_power, thom_obstruction_class

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AHSSPage",
    "AlphaMonomial",
    "BordismExpression",
    "CLASSIFYING",
    "CoefficientTable",
    "CohomologyClass",
    "D5Verdict",
    "Factor",
    "FpScalar",
    "HomologyClass",
    "HomologyTable",
    "InhomogeneousError",
    "IntegralBasisElement",
    "IntegralityResult",
    "LENS",
    "Monomial",
    "NovikovReport",
    "ObstructionReport",
    "ParseError",
    "Prime",
    "SpaceModel",
    "StabilityReport",
    "alpha",
    "binom_mod_p",
    "bockstein",
    "build_e2_page",
    "cone_simplify",
    "conner_floyd_rewrite",
    "cp_gen",
    "d5_input_boundary",
    "enumerate_monomials",
    "evaluate_d5",
    "evaluate_d5_xi",
    "format_cohomology",
    "format_homology",
    "homology_bockstein",
    "integral_basis",
    "integral_homology_of_classifying_product",
    "is_integral",
    "m_gen",
    "mod_p_homology_dimensions",
    "monomial_class",
    "novikov_check",
    "page_stability_check",
    "parse_cohomology",
    "parse_group",
    "poincare_dual",
    "poincare_series",
    "steenrod_power",
    "thom_class",
    "thom_dual_class",
    "thom_obstruction_class",
    "thom_verdict",
    "u",
    "v",
]
