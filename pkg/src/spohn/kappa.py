"""Spohn's disbelief calculus over a finite world space."""

from __future__ import annotations

from .core import (
    INFINITY,
    EmptyEvidence,
    Event,
    RankingFunction,
    SpaceTooLarge,
    ValidationError,
    strata_of,
)

__all__ = [
    "PLAIN_BELIEF_MAX_N",
    "belief",
    "condition",
    "densify",
    "is_dense",
    "plain_beliefs",
    "rank_of_event",
    "zero_stratum",
]

PLAIN_BELIEF_MAX_N = 20


def _same_space(delta: RankingFunction, event: Event) -> None:
    if event.space != delta.space:
        raise ValidationError("event and ranking function live on different world spaces")


def rank_of_event(delta: RankingFunction, event: Event) -> int | float:
    """Minimum rank over the event's worlds; ``INFINITY`` for the empty event."""
    _same_space(delta, event)
    return min((delta.ranks[i] for i in event.members), default=INFINITY)


def condition(delta: RankingFunction, evidence: Event) -> RankingFunction:
    """Condition on ``evidence``: shift ranks down by its rank and drop outside worlds.

    The result lives on the contracted space whose labels are the evidence
    worlds, so it can be aligned with the original by label.
    """
    _same_space(delta, evidence)
    if not evidence:
        raise EmptyEvidence("cannot condition on the empty event")
    base = rank_of_event(delta, evidence)
    return RankingFunction(evidence.contracted(), tuple(delta.ranks[i] - base for i in evidence.members))


def belief(delta: RankingFunction, event: Event) -> int | float:
    """Spohnian belief: ``-rank(A)`` if A is disbelieved, else ``rank(not A)``.

    ``belief(delta, full) == INFINITY`` and ``belief(delta, empty) == -INFINITY``.
    """
    rank = rank_of_event(delta, event)
    if rank > 0:
        return -rank
    return rank_of_event(delta, event.complement())


def zero_stratum(delta: RankingFunction) -> Event:
    """The most plausible worlds, those of rank 0."""
    return Event(delta.space, sum(1 << i for i, r in enumerate(delta.ranks) if r == 0))


def plain_beliefs(delta: RankingFunction) -> set[Event]:
    """Every event with positive belief, found by enumerating all 2^n events."""
    if delta.n > PLAIN_BELIEF_MAX_N:
        raise SpaceTooLarge(f"plain_beliefs enumerates 2^n events; n={delta.n} exceeds {PLAIN_BELIEF_MAX_N}")
    return {event for event in delta.space.events() if belief(delta, event) > 0}


def densify(delta: RankingFunction) -> RankingFunction:
    """Remove empty strata, keeping the order of worlds, so achieved ranks are 0..m."""
    levels = {r: i for i, r in enumerate(sorted(set(delta.ranks)))}
    ranks = tuple(levels[r] for r in delta.ranks)
    if ranks == delta.ranks:
        return delta
    return RankingFunction(delta.space, ranks)


def is_dense(delta: RankingFunction) -> bool:
    return all(strata_of(delta).counts)

