"""Generalized Fibonacci sequences G_n = a*G_{n-1} + b*G_{n-2} with seeds (u, v).

Fast evaluation, closed forms over the associated quadratic ring, the
addition and determinant identities, the divisibility-sequence
characterization, solution families for 5x^2 + 4y^2 = z^2, sum-of-two-square
classification, and lower bounds on the divisor count of F_n.
"""

from .core import (
    PairState,
    SequenceParams,
    f_fast,
    g_fast,
    g_iter,
    g_prefix,
    is_cquence,
)
from .diophantine import (
    BisquareWitness,
    CompletenessReport,
    DiophSolution,
    Family,
    alternating_witnesses,
    brute_force_solutions,
    check_alternating_bisquable,
    completeness_check,
    completeness_report,
    euler_divisor_check,
    family_solution,
    is_bisquare,
    is_solution,
    square_invariant_pairs,
    two_square_decomposition,
)
from .divisibility import (
    COUNTEREXAMPLE,
    DIVISIBLE,
    DivisibilityReport,
    check_b_coprime,
    check_ccop,
    check_consecutive_coprime,
    check_divisible_sequence,
    check_f_divisible,
    check_gm_divides_fm,
    divides,
    gcd_identity_check,
    scan_divisible,
)
from .divisors import (
    Factorization,
    PrimitiveDivisorReport,
    TauBounds,
    big_omega,
    check_tau_bounds,
    check_tau_prime_power,
    factorize,
    is_prime,
    primitive_divisors,
    rank_of_apparition,
    tau,
)
from .errors import (
    DegenerateDiscriminantError,
    DomainError,
    HypothesisViolationError,
    NondegenerateDiscriminantError,
    ParameterMismatchError,
    ResourceLimitError,
)
from .identities import (
    addition_sides,
    check_addition,
    check_determinant,
    determinant_sides,
    invariant_quantity,
)
from .quadfield import (
    QuadInt,
    binet_eval,
    binet_repeated_root,
    discriminant,
    quad_mul,
    quad_pow,
)

__version__ = "0.1.0"

__all__ = [
    "BisquareWitness",
    "COUNTEREXAMPLE",
    "CompletenessReport",
    "DIVISIBLE",
    "DegenerateDiscriminantError",
    "DiophSolution",
    "DivisibilityReport",
    "DomainError",
    "Factorization",
    "Family",
    "HypothesisViolationError",
    "NondegenerateDiscriminantError",
    "PairState",
    "ParameterMismatchError",
    "PrimitiveDivisorReport",
    "QuadInt",
    "ResourceLimitError",
    "SequenceParams",
    "TauBounds",
    "addition_sides",
    "alternating_witnesses",
    "big_omega",
    "binet_eval",
    "binet_repeated_root",
    "brute_force_solutions",
    "check_addition",
    "check_alternating_bisquable",
    "check_b_coprime",
    "check_ccop",
    "check_consecutive_coprime",
    "check_determinant",
    "check_divisible_sequence",
    "check_f_divisible",
    "check_gm_divides_fm",
    "check_tau_bounds",
    "check_tau_prime_power",
    "completeness_check",
    "completeness_report",
    "determinant_sides",
    "discriminant",
    "divides",
    "euler_divisor_check",
    "f_fast",
    "factorize",
    "family_solution",
    "g_fast",
    "g_iter",
    "g_prefix",
    "gcd_identity_check",
    "invariant_quantity",
    "is_bisquare",
    "is_cquence",
    "is_prime",
    "is_solution",
    "primitive_divisors",
    "quad_mul",
    "quad_pow",
    "rank_of_apparition",
    "scan_divisible",
    "square_invariant_pairs",
    "tau",
    "two_square_decomposition",
]
