"""Probability calculus: event probabilities, Bayesian conditioning, imaging."""

from __future__ import annotations

from fractions import Fraction

from .core import (
    Distribution,
    EmptyEvidence,
    Event,
    ProbDist,
    RankingFunction,
    ValidationError,
)

__all__ = ["condition", "image", "prob_of_event"]


def prob_of_event(p: Distribution, event: Event) -> Fraction:
    if event.space != p.space:
        raise ValidationError("event and distribution live on different world spaces")
    return sum((p.masses[i] for i in event.members), Fraction(0))


def condition(p: ProbDist, evidence: Event) -> ProbDist:
    """Bayesian conditioning, returned on the contracted space ``evidence``."""
    if evidence.space != p.space:
        raise ValidationError("event and distribution live on different world spaces")
    if not evidence:
        raise EmptyEvidence("cannot condition on the empty event")
    return p.restrict(evidence)


def image(p: Distribution, delta: RankingFunction, evidence: Event) -> Distribution:
    """Imaging on ``evidence`` with closeness ``|delta(w) - delta(v)|``.

    Each world outside the evidence hands its mass to the evidence worlds
    nearest to it in rank, split evenly between them. When the world's own
    class still has members in the evidence those are exactly the nearest
    (distance 0); otherwise every evidence world at the minimal distance
    shares. Outside worlds end with mass 0.
    """
    if p.space != delta.space or evidence.space != p.space:
        raise ValidationError("distribution, ranking and event must share one world space")
    if not evidence:
        raise EmptyEvidence("cannot image on the empty event")
    kept = evidence.members
    masses = [m if i in evidence else Fraction(0) for i, m in enumerate(p.masses)]
    for i in range(p.n):
        if i in evidence or p.masses[i] == 0:
            continue
        distance = {j: abs(delta.ranks[j] - delta.ranks[i]) for j in kept}
        nearest = min(distance.values())
        targets = [j for j in kept if distance[j] == nearest]
        share = p.masses[i] / len(targets)
        for j in targets:
            masses[j] += share
    return Distribution(p.space, tuple(masses))
