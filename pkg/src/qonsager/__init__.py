"""Exact-arithmetic construction and analysis of q-Onsager pairs on
loop-algebra evaluation modules."""

from .scalars import DeformationParameter, DomainError, format_rational, parse_rational
from .qstrings import (
    QString,
    adjacent,
    decompose,
    decompose_inverse_closed,
    equivalent,
    in_general_position,
    strongly_in_general_position,
)
from .loop_module import (
    EvaluationSpec,
    GeneratorSet,
    ModuleSpec,
    RelationReport,
    build_module,
    evaluation_rep,
    tensor_rep,
    verify_loop_relations,
)
from .onsager import OnsagerPair, OnsagerParams, phi_images, td_constants, verify_td_relations
from .analysis import (
    CriteriaVerdict,
    SplitProfile,
    affine_standardization_check,
    analysis_report,
    build_pair,
    burnside_irreducible,
    eigen_profile,
    generating_function,
    intertwiner_dimension,
    is_leonard,
    oracle_irreducible,
    theorem_criteria,
    theorem_iso_criteria,
)

__all__ = [
    "DeformationParameter", "DomainError", "format_rational", "parse_rational",
    "QString", "adjacent", "decompose", "decompose_inverse_closed", "equivalent",
    "in_general_position", "strongly_in_general_position",
    "EvaluationSpec", "GeneratorSet", "ModuleSpec", "RelationReport",
    "build_module", "evaluation_rep", "tensor_rep", "verify_loop_relations",
    "OnsagerPair", "OnsagerParams", "phi_images", "td_constants",
    "verify_td_relations",
    "CriteriaVerdict", "SplitProfile", "affine_standardization_check",
    "analysis_report", "build_pair", "burnside_irreducible", "eigen_profile",
    "generating_function", "intertwiner_dimension", "is_leonard",
    "oracle_irreducible", "theorem_criteria", "theorem_iso_criteria",
]

__version__ = "0.1.0"
