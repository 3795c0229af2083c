"""Exact Pade/block-Hankel computations over a prime field.

Submodules: monomials (exponent enumeration), linalg (exact rank/kernel/
det/inverse with a numba or numpy backend), series (truncated polynomial
arithmetic), pade (Pade matrices), dimension (variety dimensions and the
defective-triple scan), approx (Pade approximation), froberg (predicted
codimensions and the exceptional census), hessian (vanishing-Hessian
probes), cli (the command-line tool).
"""

from .approx import ApproxResult, on_variety_heuristic, pade_approximant
from .backend import BACKEND
from .dimension import (
    DimensionReport,
    dimension_via_jacobian,
    expected_dimension,
    scan_defective,
    taylor_dimension,
)
from .froberg import (
    ExceptionalCensus,
    FrobergReport,
    compute_d0,
    exceptional_pairs,
    expected_codim,
    froberg_coefficients,
    froberg_report,
    hilbert_function_generic_forms,
    predicted_codim,
    truncate_positive,
)
from .hessian import (
    HessianReport,
    SingularPointError,
    det_gradient,
    hessian_matrix,
    hessian_rank,
    polar_relations,
    polar_relations_check,
)
from .linalg import DEFAULT_PRIME
from .pade import PadeMatrix, build_pade_matrix, build_reduced, cramer_kernel_vector
from .series import (
    TruncatedPoly,
    format_poly,
    multiply_truncated,
    parse_poly,
    random_form,
    random_unit_poly,
    reciprocal_truncated,
    taylor_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "BACKEND",
    "DEFAULT_PRIME",
    "DimensionReport",
    "ExceptionalCensus",
    "FrobergReport",
    "HessianReport",
    "PadeMatrix",
    "SingularPointError",
    "TruncatedPoly",
    "build_pade_matrix",
    "build_reduced",
    "compute_d0",
    "cramer_kernel_vector",
    "det_gradient",
    "dimension_via_jacobian",
    "exceptional_pairs",
    "expected_codim",
    "expected_dimension",
    "format_poly",
    "froberg_coefficients",
    "froberg_report",
    "hessian_matrix",
    "hessian_rank",
    "hilbert_function_generic_forms",
    "multiply_truncated",
    "on_variety_heuristic",
    "pade_approximant",
    "parse_poly",
    "polar_relations",
    "polar_relations_check",
    "predicted_codim",
    "random_form",
    "random_unit_poly",
    "reciprocal_truncated",
    "scan_defective",
    "taylor_dimension",
    "taylor_quotient",
    "truncate_positive",
]
