"""Reduction of A * y^k = U_{n_1} ... U_{n_r} (pairwise coprime indices of a
Lucas sequence) to finitely many checkable conditions: admissible index sets,
clique enumeration with certificates, rank/primitivity obstructions, and
numerical abc-quality evidence for the governing triples.
"""

from .abc_evidence import (
    BinetTriple,
    QuadraticFieldData,
    QualityReport,
    binet_height,
    binet_identity_residual,
    binet_radical,
    field_data,
    make_binet_triple,
    quality_report,
    splitting_type,
    triple_from_parts,
)
from .errors import (
    BadQ,
    ClassMismatch,
    IncompleteFactorization,
    LucasProdError,
    NegativeQuotientEvenK,
    NonpositiveDiscriminant,
    NotDivisible,
    NotFoundWithinBound,
    NotKthPower,
    NotPairwiseCoprime,
    NotPrime,
    SquareDiscriminant,
    VerificationError,
    ZeroInput,
)
from .factoring import (
    DEFAULT_RHO_BUDGET,
    FactorCache,
    Factorization,
    PowerFreeDecomposition,
    cache_from_env,
    factorize,
    power_free_part,
    radical,
    valuation,
)
from .lucas import (
    LucasParams,
    LucasTerm,
    growth_estimate,
    lucas_range,
    lucas_term,
    lucas_u,
    validate_params,
)
from .primitive import (
    ObstructionVerdict,
    PrimitiveEntry,
    PrimitiveReport,
    RankOfApparition,
    obstruction_filter,
    primitive_divisors,
    rank_of_apparition,
    rank_set,
)
from .solver import (
    AdmissibleSet,
    ProductEquation,
    SolutionCertificate,
    admissible_indices,
    enumerate_solutions,
    verify_solution,
)
from .square_class import (
    IDENTITY_CLASS,
    ClassGroup,
    SquareClass,
    abs_prime_support,
    class_mul,
    class_of,
    compatibility,
    in_group,
    supported_power_part,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # parameters and terms
    "LucasParams",
    "LucasTerm",
    "validate_params",
    "lucas_u",
    "lucas_term",
    "lucas_range",
    "growth_estimate",
    # factoring
    "Factorization",
    "PowerFreeDecomposition",
    "FactorCache",
    "DEFAULT_RHO_BUDGET",
    "cache_from_env",
    "factorize",
    "valuation",
    "radical",
    "power_free_part",
    # square classes
    "SquareClass",
    "ClassGroup",
    "IDENTITY_CLASS",
    "abs_prime_support",
    "class_of",
    "class_mul",
    "in_group",
    "compatibility",
    "supported_power_part",
    # solver
    "ProductEquation",
    "AdmissibleSet",
    "SolutionCertificate",
    "admissible_indices",
    "enumerate_solutions",
    "verify_solution",
    # ranks and primitive divisors
    "RankOfApparition",
    "PrimitiveEntry",
    "PrimitiveReport",
    "ObstructionVerdict",
    "rank_of_apparition",
    "rank_set",
    "primitive_divisors",
    "obstruction_filter",
    # abc evidence
    "QuadraticFieldData",
    "BinetTriple",
    "QualityReport",
    "field_data",
    "splitting_type",
    "make_binet_triple",
    "triple_from_parts",
    "binet_identity_residual",
    "binet_height",
    "binet_radical",
    "quality_report",
    # errors
    "LucasProdError",
    "BadQ",
    "NonpositiveDiscriminant",
    "SquareDiscriminant",
    "ZeroInput",
    "NotPrime",
    "IncompleteFactorization",
    "NotFoundWithinBound",
    "VerificationError",
    "NotPairwiseCoprime",
    "ClassMismatch",
    "NotDivisible",
    "NotKthPower",
    "NegativeQuotientEvenK",
]
