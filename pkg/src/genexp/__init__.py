"""Exact generalized exponents of first-layer representations in type A.

The package computes the graded multiplicity E(V_lambda) of an irreducible
first-layer representation inside the harmonic polynomials by several
independent routes (weight sums of Fourier coefficients, signed height
counts, quasi-weight expansions, tableau height and charge statistics, and an
alternating permutation-sum oracle) and cross-verifies them, all in exact
integer Laurent-polynomial arithmetic.
"""

from .exponents import (
    ALL_METHODS,
    ExponentReport,
    exponents_by_charge,
    exponents_by_quasiweights,
    exponents_by_signed_count,
    exponents_by_tableaux,
    exponents_by_weights,
    exponents_hp_oracle,
    full_report,
)
from .fourier import PropagationError, WeightFunction, c_closed_form, inner_with_one, solve_system
from .laurent import LaurentPolynomial, one_minus_t_set, t_set_minus_one
from .quasisym import (
    CrossCheckError,
    canonical_expression,
    fundamental_quasisym,
    height_set,
    height_set_inverse,
    height_vector,
    is_quasi_dominant,
    local_act,
    local_orbit,
    monomial_quasisym,
    pair_fundamental,
    pair_monomial,
    quasi_dominant_representative,
    quasi_weight_expansion,
)
from .tableaux import (
    StandardTableau,
    co,
    co_inverse,
    conjugate,
    kostka_number,
    partitions,
    phi_set,
    phi_weight,
    schur_fundamental_expansion,
    ssyt_enumerate,
    syt_enumerate,
)
from .weights import (
    Weight,
    dominant_first_layer_weights,
    first_layer_weights,
    simple_root,
    theta,
    weight_from_partition,
    weights_of_irrep,
)

__version__ = "0.1.0"
