"""Exact Tribonacci / Tribonacci-Lucas toolkit.

Scalar terms for all integer indices, their 3x3 matrix sequences,
high-precision Binet evaluation with exact integer recovery,
generating-function expansion, closed-form partial sums, and a registry
that mechanically verifies every supported identity on index grids.
"""

from .bench import BenchResult, run_bench
from .binet import (BinetConstants, ConstantAlgebraReport, DEFAULT_PRECISION,
                    RootTriple, binet_constants, binet_lucas, binet_matrix,
                    binet_trib, check_constant_algebra, compute_roots,
                    radical_roots)
from .core import (Conversion, SEEDS, SequenceKind, TermCache,
                   lucas_from_trib, lucas_trib, trib, trib_alt,
                   trib_from_lucas)
from .counters import OpCounter
from .errors import (DegenerateDenominator, DivisibilityViolation,
                     NegativeExponent, PrecisionExhausted, StrategyMismatch,
                     UnknownIdentity)
from .identities import (Arity, GridBounds, IdentityRecord, PROFILE_BOUNDS,
                         Profile, VerifyReport, format_report_table, registry,
                         report_to_dict, verify, verify_all, verify_record)
from .matrices import (IDENTITY, K_MAT_SEEDS, Mat3, MatrixKind,
                       MatrixStrategy, T_MAT_SEEDS, ZERO, k_matrix,
                       lucas_fast, mat_mul, mat_pow, matrix_term, t_matrix,
                       trib_fast)
from .series import (DENOMINATOR, PolyRational, SumSpec, gf_coeffs,
                     gf_matrix_coeffs, gf_numerators, gf_rational,
                     partial_sum, partial_sum_bruteforce)

__version__ = "0.1.0"

__all__ = [
    "Arity",
    "BenchResult",
    "BinetConstants",
    "ConstantAlgebraReport",
    "Conversion",
    "DEFAULT_PRECISION",
    "DENOMINATOR",
    "DegenerateDenominator",
    "DivisibilityViolation",
    "GridBounds",
    "IDENTITY",
    "IdentityRecord",
    "K_MAT_SEEDS",
    "Mat3",
    "MatrixKind",
    "MatrixStrategy",
    "NegativeExponent",
    "OpCounter",
    "PROFILE_BOUNDS",
    "PolyRational",
    "PrecisionExhausted",
    "Profile",
    "RootTriple",
    "SEEDS",
    "SequenceKind",
    "StrategyMismatch",
    "SumSpec",
    "T_MAT_SEEDS",
    "TermCache",
    "UnknownIdentity",
    "VerifyReport",
    "ZERO",
    "binet_constants",
    "binet_lucas",
    "binet_matrix",
    "binet_trib",
    "check_constant_algebra",
    "compute_roots",
    "format_report_table",
    "gf_coeffs",
    "gf_matrix_coeffs",
    "gf_numerators",
    "gf_rational",
    "k_matrix",
    "lucas_fast",
    "lucas_from_trib",
    "lucas_trib",
    "mat_mul",
    "mat_pow",
    "matrix_term",
    "partial_sum",
    "partial_sum_bruteforce",
    "radical_roots",
    "registry",
    "report_to_dict",
    "run_bench",
    "t_matrix",
    "trib",
    "trib_alt",
    "trib_fast",
    "trib_from_lucas",
    "verify",
    "verify_all",
    "verify_record",
]
