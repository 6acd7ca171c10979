"""Hyper-Kloosterman sums, bilinear sums, explicit bounds, and diagnostics.

The public surface re-exported here mirrors the module layout:

  field        prime-field tables, inverses, additive character
  kloosterman  three independent K_{r,p} evaluators + Deligne check
  bilinear     type-II sums, polynomial twists, bound evaluators, weights
  energy       exact J(H, M) counting with bound shapes
  diagnostics  Cauchy decomposition, nu moments, block sums, parameters
"""

from .bilinear import (
    BoundBreakdown,
    CorollaryReport,
    IntervalSpec,
    SampleSet,
    WeightVector,
    corollary_check,
    make_weights,
    polynomial_twist_sum,
    theorem_delta,
    trivial_bound,
    type2_sum,
)
from .diagnostics import (
    BlockSumResult,
    NuMoments,
    ParameterChoice,
    ProofInstance,
    SigmaDecomposition,
    block_sum_S,
    middle_term_absorbed,
    nu_r1_r2,
    parameter_choices,
    sigma_decomposition,
)
from .energy import (
    EnergyReport,
    LemmaBound,
    count_J,
    energy_lower_bounds,
    energy_report,
    lemma_bound_value,
)
from .errors import (
    ConfigError,
    ConstantPolynomial,
    DomainError,
    IndexMismatch,
    Infeasible,
    KloosumError,
    NotPrime,
    Overflow,
    PreconditionFailed,
    ValidationError,
    ZeroInverse,
)
from .field import PrimeField, additive_char, build_field, inv, is_prime
from .kernels import BACKEND as KERNEL_BACKEND
from .kloosterman import (
    KloostermanTable,
    convolution_table,
    deligne_excess,
    naive_single,
    naive_table,
    spectral_table,
)
from .seeding import mix_seed

__version__ = "0.1.0"

__all__ = [
    "BoundBreakdown",
    "BlockSumResult",
    "ConfigError",
    "ConstantPolynomial",
    "CorollaryReport",
    "DomainError",
    "EnergyReport",
    "IndexMismatch",
    "Infeasible",
    "IntervalSpec",
    "KERNEL_BACKEND",
    "KloostermanTable",
    "KloosumError",
    "LemmaBound",
    "NotPrime",
    "NuMoments",
    "Overflow",
    "ParameterChoice",
    "PreconditionFailed",
    "PrimeField",
    "ProofInstance",
    "SampleSet",
    "SigmaDecomposition",
    "ValidationError",
    "WeightVector",
    "ZeroInverse",
    "additive_char",
    "block_sum_S",
    "build_field",
    "convolution_table",
    "corollary_check",
    "count_J",
    "deligne_excess",
    "energy_lower_bounds",
    "energy_report",
    "inv",
    "is_prime",
    "lemma_bound_value",
    "make_weights",
    "middle_term_absorbed",
    "mix_seed",
    "naive_single",
    "naive_table",
    "nu_r1_r2",
    "parameter_choices",
    "polynomial_twist_sum",
    "sigma_decomposition",
    "spectral_table",
    "theorem_delta",
    "trivial_bound",
    "type2_sum",
]
