"""Certified Groebner bases for the second hypersimplex under circular orders.

Exact sparse polynomial arithmetic, the circular block term orders, the
quadratic toric basis and its noncrossing initial ideal, induced odd-cycle
combinatorics, master polynomials with their verification lemmas, and a
Buchberger certification engine for the rank-2 secant and symbolic-square
bases.
"""

from .poly import (
    Monomial,
    Polynomial,
    Variable,
    add,
    edge_var,
    format_monomial,
    format_polynomial,
    mul,
    param_t,
    param_u,
    parse_monomial,
    parse_polynomial,
    partial_derivative,
    substitute_rank,
)
from .order import CircularTermOrder, both_inner_orders, compare, edge_class, leading_term
from .hypersimplex import (
    BinomialGenerator,
    MonomialIdeal,
    crosses,
    in_secant_ideal,
    in_toric_ideal,
    initial_edge_ideal,
    toric_gb,
    toric_gb_polynomials,
)
from .noncrossing import (
    AdmissibleSequence,
    NoncrossingGraph,
    admissible_sequences,
    all_admissible_sequences,
    build_graph,
    cycle_monomial,
    induced_odd_cycles,
    secant_of_edge_ideal,
    symbolic_square_of_edge_ideal,
)
from .master import (
    ConjugationSubset,
    LetterSet,
    PairingInvolution,
    base_involution,
    conjugate,
    crossing_number,
    involution_monomial,
    master_polynomial,
    verify_leading_term,
    verify_membership,
    verify_prolongation,
)
from .groebner import (
    CheckResult,
    GroebnerCertificate,
    SPairStats,
    antidiagonal_monomial,
    buchberger_verify,
    circular_minor_splits,
    delightful_check,
    nested_triple_monomials,
    off_diagonal_minor,
    off_diagonal_minor_3x3,
    reduce,
    s_polynomial,
    secant_gb,
    symbolic_square_gb,
    symbolic_square_identity_holds,
)
from .fixtures import (
    GENERIC_QUINTIC_SEQUENCE,
    GENERIC_QUINTIC_TERM_COUNT,
    REFERENCE_CUBIC_TERMS,
    REFERENCE_PENTAD_TERMS,
    reproduce_reference_examples,
)

__version__ = "0.1.0"
