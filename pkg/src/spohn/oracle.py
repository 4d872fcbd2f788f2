"""Brute-force verifiers for the transformations.

Everything here enumerates: all events, all ordered event pairs, all world
pairs, all strata vectors. Event probabilities are computed by plain subset
sums over integer-scaled masses, never through the transformation formulas
being checked.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_right
from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import kappa, prob
from .core import (
    Distribution,
    Event,
    ProbDist,
    RankingFunction,
    SpaceTooLarge,
    StrataVector,
    ValidationError,
    WorldSpace,
    strata_of,
)
from .transform import (
    acceptance_threshold,
    leap_indices,
    probability_bounds,
    to_kappa,
    to_prob,
    to_prob_exponential,
)

__all__ = [
    "DEFAULT_MAX_N",
    "Check",
    "CongruenceReport",
    "Theorem3Result",
    "Violation",
    "check_congruence_I",
    "check_congruence_II",
    "check_corollary1",
    "check_deductive_closure",
    "check_lemma2",
    "check_lemma3",
    "check_least_coarseness",
    "check_round_trip",
    "check_theorem3",
    "check_threshold",
    "check_zero_strata_invariance",
    "coarseness_levels",
    "enumerate_dense_rankings",
    "enumerate_rankings",
    "enumerate_strata_vectors",
    "insert_empty_strata",
    "random_dense_ranking",
    "random_distribution",
]

DEFAULT_MAX_N = 12
STRATA_MAX_N = 12
LABELLED_MAX_N = 8


@dataclass(frozen=True)
class Violation:
    a: Event
    b: Event
    p_a: Fraction
    p_b: Fraction
    rank_a: int
    rank_b: int

    def __str__(self) -> str:
        return f"A={self.a} B={self.b} p(A)={self.p_a} p(B)={self.p_b} rank(A)={self.rank_a} rank(B)={self.rank_b}"


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of an exhaustive scan over all ordered pairs of non-empty events.

    ``violations`` lists at most ``max_violations`` pairs; ``violation_count``
    is always the full number.
    """

    holds: bool
    violations: tuple[Violation, ...]
    pairs_checked: int
    violation_count: int

    @property
    def truncated(self) -> bool:
        return len(self.violations) < self.violation_count


@dataclass(frozen=True)
class Check:
    """Result of a named property check that counts cases and keeps failure notes."""

    name: str
    holds: bool
    cases: int
    failures: tuple[str, ...] = field(default=())


class _EventTable:
    """Probability and rank of every event, indexed by bitmask.

    Probabilities are integers over the common denominator ``denom``.
    """

    def __init__(self, masses: Sequence[Fraction], ranks: Sequence[int]):
        n = len(masses)
        self.n = n
        self.denom = lcm(*(m.denominator for m in masses))
        weights = [m.numerator * (self.denom // m.denominator) for m in masses]
        size = 1 << n
        top = max(ranks) + 1  # stands in for the rank of the empty event
        psum = [0] * size
        rmin = [top] * size
        for mask in range(1, size):
            low = mask & -mask
            i = low.bit_length() - 1
            rest = mask ^ low
            psum[mask] = psum[rest] + weights[i]
            r = ranks[i]
            rmin[mask] = r if r < rmin[rest] else rmin[rest]
        self.psum = psum
        self.rmin = rmin

    def prob(self, mask: int) -> Fraction:
        return Fraction(self.psum[mask], self.denom)


def _guard(n: int, max_n: int) -> None:
    if n > max_n:
        raise SpaceTooLarge(f"{n} worlds exceed the enumeration guard of {max_n}")


def _inverted_pairs(table: _EventTable, cap: int) -> tuple[int, list[tuple[int, int]]]:
    """Count ordered pairs (X, Y) of non-empty events with rank(X) > rank(Y) and p(X) >= p(Y).

    Events are bucketed by rank; for each X a bisection over the sorted
    probabilities of all lower-ranked events finds its partners, which is
    equivalent to testing every pair. At most ``cap`` pairs are returned.
    """
    buckets: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for mask in range(1, 1 << table.n):
        buckets[table.rmin[mask]].append((table.psum[mask], mask))
    count = 0
    found: list[tuple[int, int]] = []
    lower: list[tuple[int, int]] = []
    for level in sorted(buckets):
        if lower:
            keys = [pb for pb, _ in lower]
            for pa, a in buckets[level]:
                c = bisect_right(keys, pa)
                count += c
                if c and len(found) < cap:
                    partners = sorted(b for _, b in lower[:c])
                    found.extend((a, b) for b in partners[: cap - len(found)])
        lower = sorted(lower + buckets[level])
    return count, found


def _inverted_pairs_naive(table: _EventTable, cap: int) -> tuple[int, list[tuple[int, int]]]:
    count = 0
    found = []
    size = 1 << table.n
    for x in range(1, size):
        for y in range(1, size):
            if table.rmin[x] > table.rmin[y] and table.psum[x] >= table.psum[y]:
                count += 1
                if len(found) < cap:
                    found.append((x, y))
    return count, found


def _scan(p: Distribution, delta: RankingFunction, max_n: int, max_violations: int, method: str):
    if p.space != delta.space:
        raise ValidationError("distribution and ranking function live on different world spaces")
    _guard(p.n, max_n)
    if max_violations < 1:
        raise ValueError("max_violations must be at least 1")
    table = _EventTable(p.masses, delta.ranks)
    if method == "sweep":
        count, pairs = _inverted_pairs(table, max_violations)
    elif method == "pairs":
        count, pairs = _inverted_pairs_naive(table, max_violations)
    else:
        raise ValueError(f"unknown method {method!r}")
    return table, count, pairs, ((1 << p.n) - 1) ** 2


def _violation(space: WorldSpace, table: _EventTable, a: int, b: int) -> Violation:
    return Violation(Event(space, a), Event(space, b), table.prob(a), table.prob(b), table.rmin[a], table.rmin[b])


def check_congruence_I(
    p: Distribution,
    delta: RankingFunction,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_violations: int = 100,
    method: str = "sweep",
) -> CongruenceReport:
    """More probable must never mean more disbelieved.

    A violation is an ordered pair (A, B) with ``p(A) >= p(B)`` but
    ``delta(A) > delta(B)``.
    """
    table, count, pairs, checked = _scan(p, delta, max_n, max_violations, method)
    violations = tuple(sorted((_violation(p.space, table, x, y) for x, y in pairs), key=lambda v: (v.a.mask, v.b.mask)))
    return CongruenceReport(count == 0, violations, checked, count)


def check_congruence_II(
    delta: RankingFunction,
    p: Distribution,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_violations: int = 100,
    method: str = "sweep",
) -> CongruenceReport:
    """Strictly less disbelieved must mean strictly more probable.

    A violation is an ordered pair (A, B) with ``delta(A) < delta(B)`` but
    ``p(A) <= p(B)``. It is the same pair relation as congruence I read
    from the other side, so both share one scan.
    """
    table, count, pairs, checked = _scan(p, delta, max_n, max_violations, method)
    violations = tuple(sorted((_violation(p.space, table, y, x) for x, y in pairs), key=lambda v: (v.a.mask, v.b.mask)))
    return CongruenceReport(count == 0, violations, checked, count)


def coarseness_levels(delta: RankingFunction) -> int:
    """Number of distinct world ranks."""
    return len(set(delta.ranks))


def check_least_coarseness(p: ProbDist) -> Check:
    """``to_kappa(p)`` has exactly one more level than ``p`` has leap indices."""
    levels = coarseness_levels(to_kappa(p))
    leaps = leap_indices(sorted(p.masses, reverse=True))
    ok = levels == len(leaps) + 1
    failures = () if ok else (f"{levels} levels but {len(leaps)} leap indices {leaps}",)
    return Check("least coarseness", ok, 1, failures)


@dataclass(frozen=True)
class Theorem3Result:
    """Both paths of the revision square, aligned on the evidence worlds."""

    holds: bool
    mode: str
    evidence: Event
    left: RankingFunction  # densified conditional ranking
    right: RankingFunction  # to_kappa of the revised to_prob distribution
    note: str = ""


def check_theorem3(delta: RankingFunction, evidence: Event, mode: str = "conditioning") -> Theorem3Result:
    """Revise then transform versus transform then revise.

    ``left`` conditions ``delta`` and densifies; ``right`` maps ``delta``
    through ``to_prob``, revises the distribution (Bayesian conditioning or
    rank-distance imaging), and maps back with ``to_kappa``.
    """
    left = kappa.densify(kappa.condition(delta, evidence))
    p = to_prob(delta)
    note = ""
    if mode == "conditioning":
        revised = prob.condition(p, evidence)
    elif mode == "imaging":
        revised = prob.image(p, delta, evidence).restrict(evidence)
        note = "imaged distribution restricted to the evidence worlds before to_kappa"
    else:
        raise ValueError(f"mode must be 'conditioning' or 'imaging', not {mode!r}")
    right = to_kappa(revised)
    return Theorem3Result(left.ranks == right.ranks, mode, evidence, left, right, note)


def check_lemma2(delta: RankingFunction) -> Check:
    """Under ``to_prob``, each world outweighs all strictly more disbelieved worlds together."""
    p = to_prob(delta)
    failures = []
    for i, r in enumerate(delta.ranks):
        tail = sum((m for m, rr in zip(p.masses, delta.ranks) if rr > r), Fraction(0))
        if not p.masses[i] > tail:
            failures.append(f"{delta.space.labels[i]}: p={p.masses[i]} <= tail {tail}")
    return Check("lemma 2", not failures, delta.n, tuple(failures))


def check_lemma3(delta: RankingFunction) -> Check:
    """``to_prob`` is never more skewed than ``to_prob_exponential``.

    For worlds with ``delta(w1) > delta(w2)`` the mass ratio ``w1/w2`` under
    ``to_prob`` is at least the one under the exponential variant, strictly
    so exactly when some stratum in ``(delta(w2), delta(w1)]`` holds fewer
    than ``k_max`` worlds.
    """
    counts = strata_of(delta).counts
    k_max = max(counts)
    s, e = to_prob(delta), to_prob_exponential(delta)
    failures = []
    cases = 0
    for i, j in itertools.permutations(range(delta.n), 2):
        hi, lo = delta.ranks[i], delta.ranks[j]
        if hi <= lo:
            continue
        cases += 1
        s_ratio = s.masses[i] / s.masses[j]
        e_ratio = e.masses[i] / e.masses[j]
        strict = any(counts[t] < k_max for t in range(lo + 1, hi + 1))
        if s_ratio < e_ratio or (s_ratio > e_ratio) != strict:
            failures.append(f"({delta.space.labels[i]},{delta.space.labels[j]}): S ratio {s_ratio}, exponential ratio {e_ratio}")
    return Check("lemma 3", not failures, cases, tuple(failures))


def check_corollary1(delta: RankingFunction, *, max_n: int = DEFAULT_MAX_N) -> Check:
    """Every non-empty event's probability lies in the bounds of its rank and of no other rank."""
    _guard(delta.n, max_n)
    strata = strata_of(delta)
    p = to_prob(delta)
    bounds = [probability_bounds(strata, r) for r in range(strata.s + 1)]
    table = _EventTable(p.masses, delta.ranks)
    failures = []
    for mask in range(1, 1 << delta.n):
        value = table.prob(mask)
        rank = table.rmin[mask]
        hits = [r for r, (lo, hi) in enumerate(bounds) if lo <= value < hi]
        if hits != [rank]:
            failures.append(f"{Event(delta.space, mask)}: p={value}, rank {rank}, inside intervals of ranks {hits}")
    return Check("corollary 1", not failures, (1 << delta.n) - 1, tuple(failures))


def check_round_trip(delta: RankingFunction) -> Check:
    """``to_kappa(to_prob(delta))`` gives back the densified ranking."""
    back = to_kappa(to_prob(delta))
    want = kappa.densify(delta)
    ok = back.ranks == want.ranks
    return Check("round trip", ok, 1, () if ok else (f"got {back.ranks}, expected {want.ranks}",))


def insert_empty_strata(delta: RankingFunction, at: int, count: int = 1) -> RankingFunction:
    """Push every rank ``>= at`` up by ``count``, leaving ``count`` empty strata below ``at``."""
    if at < 1:
        raise ValueError("empty strata can only be inserted above rank 0")
    return RankingFunction(delta.space, tuple(r + count if r >= at else r for r in delta.ranks))


def check_zero_strata_invariance(delta: RankingFunction, max_gap: int = 2) -> Check:
    base = to_prob(delta).masses
    failures = []
    cases = 0
    for at in range(1, delta.max_rank + 2):
        for gap in range(1, max_gap + 1):
            cases += 1
            stretched = insert_empty_strata(delta, at, gap)
            if to_prob(stretched).masses != base:
                failures.append(f"gap of {gap} at rank {at} changed the distribution")
    return Check("zero strata invariance", not failures, cases, tuple(failures))


def check_deductive_closure(delta: RankingFunction) -> Check:
    """Plain beliefs are exactly the supersets of the rank-0 worlds, closed under meet and superset."""
    believed = {e.mask for e in kappa.plain_beliefs(delta)}
    core_mask = sum(1 << i for i, r in enumerate(delta.ranks) if r == 0)
    full = (1 << delta.n) - 1
    expected = {m for m in range(full + 1) if m & core_mask == core_mask}
    failures = []
    if believed != expected:
        failures.append(f"{len(believed ^ expected)} events differ from the superset filter")
    for x in believed:
        for y in believed:
            if x & y not in believed:
                failures.append(f"meet of {x:#x} and {y:#x} not believed")
                break
        for i in range(delta.n):
            if x | 1 << i not in believed:
                failures.append(f"superset {x | 1 << i:#x} of {x:#x} not believed")
    return Check("deductive closure", not failures, len(believed), tuple(failures[:20]))


def check_threshold(delta: RankingFunction, *, max_n: int = DEFAULT_MAX_N) -> Check:
    """Under ``to_prob``, plainly believed events are exactly those at or above the normalised threshold."""
    _guard(delta.n, max_n)
    level = acceptance_threshold(strata_of(delta)).normalized
    p = to_prob(delta)
    core_mask = kappa.zero_stratum(delta).mask
    table = _EventTable(p.masses, delta.ranks)
    failures = []
    for mask in range(1, 1 << delta.n):
        believed = mask & core_mask == core_mask
        if believed != (table.prob(mask) >= level):
            failures.append(f"{Event(delta.space, mask)}: p={table.prob(mask)}, threshold {level}, believed={believed}")
    return Check("acceptance threshold", not failures, (1 << delta.n) - 1, tuple(failures))


def enumerate_strata_vectors(n: int, *, dense: bool = True, max_rank: int | None = None) -> Iterator[StrataVector]:
    """Strata vectors of ``n`` worlds.

    With ``dense=True`` these are the 2^(n-1) compositions of ``n``. With
    ``dense=False`` interior entries may be 0 and ``max_rank`` (required)
    bounds the top rank.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > STRATA_MAX_N:
        raise SpaceTooLarge(f"n={n} exceeds the strata enumeration guard of {STRATA_MAX_N}")
    if not dense and max_rank is None:
        raise ValueError("non-dense enumeration needs max_rank")

    def compositions(remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            if prefix[-1] > 0:
                yield prefix
            return
        if max_rank is not None and len(prefix) > max_rank:
            return
        smallest = 1 if dense or not prefix else 0
        for k in range(remaining, smallest - 1, -1):
            yield from compositions(remaining - k, prefix + (k,))

    for first in range(n, 0, -1):
        for counts in compositions(n - first, (first,)):
            yield StrataVector(counts)


def enumerate_rankings(n: int, max_rank: int, space: WorldSpace | None = None) -> Iterator[RankingFunction]:
    """Every labelled ranking with ranks in ``0..max_rank``."""
    _guard(n, LABELLED_MAX_N)
    space = space or WorldSpace.of_size(n)
    for ranks in itertools.product(range(max_rank + 1), repeat=n):
        if min(ranks) == 0:
            yield RankingFunction(space, ranks)


def enumerate_dense_rankings(n: int, space: WorldSpace | None = None) -> Iterator[RankingFunction]:
    """Every labelled dense ranking (ordered set partitions of ``n`` worlds)."""
    _guard(n, LABELLED_MAX_N)
    for delta in enumerate_rankings(n, n - 1, space):
        if max(delta.ranks) + 1 == len(set(delta.ranks)):
            yield delta


def random_distribution(n: int, rng: random.Random, max_weight: int | None = None) -> ProbDist:
    """Integer weights drawn uniformly, then normalised.

    Without ``max_weight`` the weight range itself is drawn, so small ranges
    produce plenty of ties and large ones nearly distinct masses.
    """
    if max_weight is None:
        max_weight = rng.choice((2, 3, 5, 10, 100, 10**6))
    return ProbDist.normalized([rng.randint(1, max_weight) for _ in range(n)])


def random_dense_ranking(n: int, rng: random.Random) -> RankingFunction:
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
    bounds = [0, *cuts, n]
    ranks = [r for r, (a, b) in enumerate(zip(bounds, bounds[1:])) for _ in range(b - a)]
    rng.shuffle(ranks)
    return RankingFunction.of(ranks)
