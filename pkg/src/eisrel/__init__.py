"""Exact relations among Eisenstein series and bases of modular forms on SL2(Z)."""

from .errors import DomainError, InsufficientPrecisionError, NotInSpanError, VerificationError
from .exact_arith import Rational, bernoulli, binomial, sigma
from .qseries import QSeries, eisenstein, product_P, theta_derivative
from .relations import (
    RelationVector,
    Triple,
    corollary_triple,
    evaluate_relation,
    popa_constant,
    relation_matrix,
    relation_vector,
    t1_relation,
)
from .basis_solver import basis_descriptor, decompose, dim_mk, reduce_product

__version__ = "0.1.0"
