"""Neuman means derived from the Schwab-Borchardt mean, their sharp bounds by
geometric, arithmetic and quadratic means, and a seeded verification harness."""

__version__ = "0.1.0"

from .bounds import (
    BoundFamily,
    Envelope,
    SharpParams,
    bound_envelope,
    exponent_ratio,
    harmonic_weight,
    linear_envelope,
    linear_reference_bounds,
    sharp_parameters,
)
from .errors import ConsistencyError, DomainError
from .lemmas import (
    LemmaId,
    RationalCoeff,
    coeff_ratio_increment,
    lemma_eval,
    lemma_limits,
    series_coeff,
)
from .means import (
    MeanKind,
    MeanPair,
    NeumanKind,
    classical_mean,
    kernel,
    neuman,
    neuman_mean,
    normalized_v,
    schwab_borchardt,
)
from .verify import (
    GridSpec,
    VerificationReport,
    verify_chain,
    verify_consistency,
    verify_lemma_monotone,
    verify_series_identities,
    verify_sharp_bounds,
)

__all__ = [
    "BoundFamily",
    "ConsistencyError",
    "DomainError",
    "Envelope",
    "GridSpec",
    "LemmaId",
    "MeanKind",
    "MeanPair",
    "NeumanKind",
    "RationalCoeff",
    "SharpParams",
    "VerificationReport",
    "bound_envelope",
    "classical_mean",
    "coeff_ratio_increment",
    "exponent_ratio",
    "harmonic_weight",
    "kernel",
    "lemma_eval",
    "lemma_limits",
    "linear_envelope",
    "linear_reference_bounds",
    "neuman",
    "neuman_mean",
    "normalized_v",
    "schwab_borchardt",
    "series_coeff",
    "sharp_parameters",
    "verify_chain",
    "verify_consistency",
    "verify_lemma_monotone",
    "verify_series_identities",
    "verify_sharp_bounds",
]
