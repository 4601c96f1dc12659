"""Exact classification of the additive monoids N0[alpha] for algebraic alpha > 0."""
__version__ = "0.1.0"

from .cubicatlas import (
    RULES,
    SHAPES,
    CubicForm,
    CubicVerdict,
    classify_cubic,
    cross_check,
    cubic_form,
)
from .exactpoly import (
    IntPolynomial,
    MinimalPair,
    ParseError,
    PolynomialError,
    divrem,
    irreducibility_status,
    is_negative_tail,
    normalize_primitive,
    rational_root_screen,
    sign_variations,
    split_minimal_pair,
)
from .genengine import (
    Atomicity,
    Certificate,
    CertificateKind,
    ClassificationReport,
    FactorizationClass,
    Generation,
    TailWitness,
    UnsupportedInputError,
    classify,
    compute_sigma,
    decide_atomicity,
    tail_representation,
    verify_certificate,
)
from .oracle import OracleRefusal, brute_force_tail, numeric_sanity, verify_witness
from .realroots import (
    AlgebraicReal,
    RationalInterval,
    count_positive_roots,
    is_weak_perron,
    isolate_real_roots,
    positive_roots,
    refine,
    sturm_chain,
    unique_positive_root,
)
