"""Order-congruent transformations between probabilities and disbelief rankings.

``to_kappa`` maps a probability function to the finest ranking that never
ranks a more probable event above a less probable one. ``to_prob`` goes the
other way, giving each rank level the largest share of mass that keeps every
world more probable than all worlds ranked above it. ``to_prob_exponential``
and ``epsilon_rule`` are the exponential-law alternatives.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .core import (
    BadEpsilon,
    NotSorted,
    ProbDist,
    RankingFunction,
    RankOutOfRange,
    StrataVector,
    ValidationError,
    rational,
    strata_of,
)

__all__ = [
    "Threshold",
    "TraceRow",
    "acceptance_threshold",
    "epsilon_exponents",
    "epsilon_rule",
    "exponential_weights",
    "kappa_trace",
    "leap_indices",
    "normalization_constant",
    "probability_bounds",
    "rank_weights",
    "to_kappa",
    "to_prob",
    "to_prob_exponential",
]


def leap_indices(q: Sequence) -> tuple[int, ...]:
    """1-based positions ``i`` where ``q[i]`` strictly exceeds the sum of all later entries.

    ``q`` must be non-increasing and positive. The last position never counts.

    >>> leap_indices(["0.6", "0.3", "0.1"])
    (1, 2)
    """
    values = [rational(x) for x in q]
    if any(x <= 0 for x in values):
        raise ValidationError("leap indices need strictly positive entries")
    for i in range(1, len(values)):
        if values[i] > values[i - 1]:
            raise NotSorted(f"sequence increases at position {i + 1}")
    leaps = []
    tail = Fraction(0)
    for i in range(len(values) - 1, -1, -1):
        if i < len(values) - 1 and values[i] > tail:
            leaps.append(i + 1)
        tail += values[i]
    return tuple(reversed(leaps))


@dataclass(frozen=True)
class TraceRow:
    """One step of the descending-mass sweep behind :func:`to_kappa`."""

    position: int  # 1-based position in the sorted order
    world: str
    mass: Fraction
    remaining: Fraction  # mass left after this world
    rank: int


def _descending_order(p: ProbDist) -> list[int]:
    # ties keep their original index order
    return sorted(range(p.n), key=lambda i: (-p.masses[i], i))


def kappa_trace(p: ProbDist) -> list[TraceRow]:
    """Run the sweep and record remaining mass and assigned rank at each step."""
    rows = []
    rank = 0
    remaining = Fraction(1)
    for position, i in enumerate(_descending_order(p), start=1):
        mass = p.masses[i]
        remaining -= mass
        rows.append(TraceRow(position, p.space.labels[i], mass, remaining, rank))
        if mass > remaining:
            rank += 1
    return rows


def to_kappa(p: ProbDist) -> RankingFunction:
    """Least-coarse congruent ranking of ``p``.

    Worlds are visited by decreasing mass; the rank counter goes up right
    after a world whose mass exceeds everything still unvisited.
    """
    if not isinstance(p, ProbDist):
        raise ValidationError("to_kappa needs strictly positive masses (a ProbDist)")
    ranks = [0] * p.n
    for row in kappa_trace(p):
        ranks[p.space.index(row.world)] = row.rank
    return RankingFunction(p.space, tuple(ranks))


def epsilon_exponents(p: ProbDist, eps) -> tuple[int, ...]:
    """Per-world ``k`` with ``eps**(k+1) < p(w) <= eps**k``, before any re-baselining."""
    eps = rational(eps)
    if not 0 < eps < 1:
        raise BadEpsilon(f"epsilon must lie strictly between 0 and 1, got {eps}")
    exponents = []
    for mass in p.masses:
        if mass <= 0:
            raise ValidationError("the epsilon rule needs strictly positive masses")
        k, upper = 0, eps
        while mass <= upper:
            k += 1
            upper *= eps
        exponents.append(k)
    return tuple(exponents)


def epsilon_rule(p: ProbDist, eps) -> RankingFunction:
    """Epsilon-rule ranking, shifted so the smallest rank is 0."""
    raw = epsilon_exponents(p, eps)
    base = min(raw)
    return RankingFunction(p.space, tuple(k - base for k in raw))


def rank_weights(strata: StrataVector) -> tuple[Fraction, ...]:
    """Unnormalised per-rank mass ``prod_{j<=i} 1/(k_j + 1)`` for ranks 0..s."""
    weights = []
    w = Fraction(1)
    for k in strata.counts:
        w /= k + 1
        weights.append(w)
    return tuple(weights)


def exponential_weights(strata: StrataVector) -> tuple[Fraction, ...]:
    """Unnormalised per-rank mass ``(1/(k_max + 1))**i`` for ranks 0..s."""
    base = Fraction(1, max(strata.counts) + 1)
    return tuple(base**i for i in range(len(strata)))


def _normalize(weights: Sequence[Fraction], strata: StrataVector) -> Fraction:
    return 1 / sum((k * w for k, w in zip(strata.counts, weights)), Fraction(0))


def normalization_constant(strata: StrataVector, exponential: bool = False) -> Fraction:
    """``Z`` such that ``Z * sum_i k_i * weight_i == 1``."""
    weights = exponential_weights(strata) if exponential else rank_weights(strata)
    return _normalize(weights, strata)


def _from_weights(delta: RankingFunction, exponential: bool) -> ProbDist:
    strata = strata_of(delta)
    weights = exponential_weights(strata) if exponential else rank_weights(strata)
    z = _normalize(weights, strata)
    return ProbDist(delta.space, tuple(weights[r] * z for r in delta.ranks))


def to_prob(delta: RankingFunction) -> ProbDist:
    """Congruent probability of ``delta``; worlds of equal rank get equal mass.

    Empty strata contribute a factor of 1, so inserting them changes nothing.
    """
    return _from_weights(delta, exponential=False)


def to_prob_exponential(delta: RankingFunction) -> ProbDist:
    """Exponential-law variant with a single base ``1/(k_max + 1)``."""
    return _from_weights(delta, exponential=True)


def probability_bounds(strata: StrataVector, rank: int) -> tuple[Fraction, Fraction]:
    """Half-open interval ``[lo, hi)`` holding ``to_prob(delta)(A)`` for every event of rank ``rank``.

    For rank 0 the upper end uses the empty product, so ``hi == Z``.
    """
    if not 0 <= rank <= strata.s:
        raise RankOutOfRange(f"rank {rank} outside 0..{strata.s}")
    z = normalization_constant(strata)
    below = prod((k + 1 for k in strata.counts[:rank]), start=1)
    return z / (below * (strata[rank] + 1)), z / below


@dataclass(frozen=True)
class Threshold:
    unnormalized: Fraction
    normalized: Fraction


def acceptance_threshold(strata: StrataVector) -> Threshold:
    """Acceptance level ``k_0/(k_0 + 1)``, raw and scaled by ``Z``.

    The normalised value equals the probability of the rank-0 stratum under
    ``to_prob``: an event is plainly believed exactly when its probability is
    at or above it.
    """
    k0 = strata[0]
    raw = Fraction(k0, k0 + 1)
    return Threshold(raw, raw * normalization_constant(strata))
