"""Exact factorial ratios, their q-analogues as cyclotomic products, and the G2 constant term."""

from .families import Family, get_family, known_families
from .g2 import (
    BudgetExceeded,
    LaurentMonomial,
    LaurentPoly2,
    constant_term,
    g2_product,
    lp_mul_factor,
    pochhammer_factors,
    verify_g2,
)
from .poly import (
    IntPoly,
    NotDivisible,
    cyclotomic,
    factorial_big,
    poly_eval_int,
    poly_exact_div,
    poly_mul,
)
from .qratio import (
    CyclotomicExponents,
    NotPolynomial,
    PositivityReport,
    UnbalancedSpec,
    positivity_scan,
    q_factorial_direct,
    q_ratio_exponents,
    q_ratio_poly,
    reduce_Cq_check,
)
from .ratio import (
    DomainError,
    DuplicateParamError,
    LinearForm,
    NonInteger,
    ParseError,
    RatioSpec,
    Status,
    UnsupportedSpec,
    Verdict,
    check_integrality_1d,
    check_integrality_scan,
    delta,
    eval_big,
    height,
    is_balanced,
    parse_spec,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "get_family",
    "known_families",
    "BudgetExceeded",
    "LaurentMonomial",
    "LaurentPoly2",
    "constant_term",
    "g2_product",
    "lp_mul_factor",
    "pochhammer_factors",
    "verify_g2",
    "IntPoly",
    "NotDivisible",
    "cyclotomic",
    "factorial_big",
    "poly_eval_int",
    "poly_exact_div",
    "poly_mul",
    "CyclotomicExponents",
    "NotPolynomial",
    "PositivityReport",
    "UnbalancedSpec",
    "positivity_scan",
    "q_factorial_direct",
    "q_ratio_exponents",
    "q_ratio_poly",
    "reduce_Cq_check",
    "DomainError",
    "DuplicateParamError",
    "LinearForm",
    "NonInteger",
    "ParseError",
    "RatioSpec",
    "Status",
    "UnsupportedSpec",
    "Verdict",
    "check_integrality_1d",
    "check_integrality_scan",
    "delta",
    "eval_big",
    "height",
    "is_balanced",
    "parse_spec",
]
