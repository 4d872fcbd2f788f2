"""Spohnian disbelief rankings, probabilities, and congruent transformations between them."""

from .core import (
    INFINITY,
    BadEpsilon,
    Distribution,
    EmptyEvidence,
    Event,
    NotSorted,
    ProbDist,
    RankingFunction,
    RankOutOfRange,
    SpaceTooLarge,
    SpohnError,
    StrataVector,
    ValidationError,
    WorldSpace,
    rational,
    strata_of,
    subset,
)
from .transform import (
    acceptance_threshold,
    epsilon_rule,
    leap_indices,
    probability_bounds,
    to_kappa,
    to_prob,
    to_prob_exponential,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "BadEpsilon",
    "Distribution",
    "EmptyEvidence",
    "Event",
    "NotSorted",
    "ProbDist",
    "RankOutOfRange",
    "RankingFunction",
    "SpaceTooLarge",
    "SpohnError",
    "StrataVector",
    "ValidationError",
    "WorldSpace",
    "acceptance_threshold",
    "epsilon_rule",
    "leap_indices",
    "probability_bounds",
    "rational",
    "strata_of",
    "subset",
    "to_kappa",
    "to_prob",
    "to_prob_exponential",
]
