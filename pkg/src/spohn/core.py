"""Exact-arithmetic domain types: world spaces, events, distributions, rankings."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "INFINITY",
    "BadEpsilon",
    "EmptyEvidence",
    "Event",
    "Distribution",
    "NotSorted",
    "ProbDist",
    "RankOutOfRange",
    "RankingFunction",
    "SpaceTooLarge",
    "SpohnError",
    "StrataVector",
    "ValidationError",
    "WorldSpace",
    "rational",
    "strata_of",
    "subset",
]

#: Rank of the empty event; compares above every finite rank.
INFINITY = math.inf

Number = Union[Fraction, int, str, float]


class SpohnError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SpohnError, ValueError):
    pass


class EmptyEvidence(SpohnError, ValueError):
    pass


class SpaceTooLarge(SpohnError):
    pass


class NotSorted(SpohnError, ValueError):
    pass


class BadEpsilon(SpohnError, ValueError):
    pass


class RankOutOfRange(SpohnError, ValueError):
    pass


def rational(value: Number) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Strings are parsed exactly (``"0.5185"`` becomes ``1037/2000``, ``"1/3"``
    is accepted too). Floats go through their shortest ``repr`` so that
    ``0.1`` means one tenth rather than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValidationError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse {value!r} as an exact rational") from exc
    raise ValidationError(f"not a number: {value!r}")


@dataclass(frozen=True)
class WorldSpace:
    """A finite, ordered set of labelled possible worlds."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValidationError("a world space needs at least one world")
        if len(set(labels)) != len(labels):
            raise ValidationError(f"duplicate world labels in {labels!r}")

    @classmethod
    def of_size(cls, n: int) -> WorldSpace:
        """Worlds labelled ``w1`` .. ``wn``."""
        return cls(tuple(f"w{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        """0-based position of ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown world {label!r}") from None

    @property
    def full(self) -> Event:
        return Event(self, (1 << self.n) - 1)

    @property
    def empty(self) -> Event:
        return Event(self, 0)

    def event(self, labels: Iterable[str]) -> Event:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Event(self, mask)

    def events(self) -> Iterable[Event]:
        """Every event, empty set first, in bitmask order."""
        for mask in range(1 << self.n):
            yield Event(self, mask)


@dataclass(frozen=True)
class Event:
    """A subset of a world space, stored as a bitmask (bit ``i`` is world ``i``, 0-based)."""

    space: WorldSpace
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.space.n:
            raise ValidationError(f"event mask {self.mask:#x} outside a space of {self.space.n} worlds")

    @property
    def members(self) -> tuple[int, ...]:
        """0-based world positions in ascending order."""
        return tuple(i for i in range(self.space.n) if self.mask >> i & 1)

    @property
    def indices(self) -> tuple[int, ...]:
        """1-based world indices."""
        return tuple(i + 1 for i in self.members)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, position: object) -> bool:
        return isinstance(position, int) and 0 <= position < self.space.n and bool(self.mask >> position & 1)

    def _check(self, other: Event) -> None:
        if other.space != self.space:
            raise ValidationError("events belong to different world spaces")

    def complement(self) -> Event:
        return Event(self.space, self.space.full.mask ^ self.mask)

    def __invert__(self) -> Event:
        return self.complement()

    def __and__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.mask & other.mask)

    def __or__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.mask | other.mask)

    def issubset(self, other: Event) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def contracted(self) -> WorldSpace:
        """The event viewed as a world space of its own, labels in original order."""
        if not self:
            raise EmptyEvidence("cannot contract onto the empty event")
        return WorldSpace(self.labels)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


def subset(space: WorldSpace, members: Iterable[int]) -> Event:
    """Event from 1-based world indices."""
    mask = 0
    for index in members:
        if not 1 <= index <= space.n:
            raise ValidationError(f"world index {index} outside 1..{space.n}")
        mask |= 1 << (index - 1)
    return Event(space, mask)


def _coerce_space(space: WorldSpace | Sequence[str] | None, n: int) -> WorldSpace:
    if space is None:
        return WorldSpace.of_size(n)
    if isinstance(space, WorldSpace):
        return space
    return WorldSpace(tuple(space))


@dataclass(frozen=True)
class Distribution:
    """Non-negative exact masses summing to one.

    Zero masses are allowed here; imaging produces them. Use :class:`ProbDist`
    wherever strictly positive masses are required.
    """

    space: WorldSpace
    masses: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        masses = tuple(rational(m) for m in self.masses)
        object.__setattr__(self, "masses", masses)
        if len(masses) != self.space.n:
            raise ValidationError(f"{len(masses)} masses for {self.space.n} worlds")
        if any(m < 0 for m in masses):
            raise ValidationError("masses must be non-negative")
        total = sum(masses, Fraction(0))
        if total != 1:
            raise ValidationError(f"masses sum to {total}, not exactly 1")

    @classmethod
    def of(cls, values: Sequence[Number], space: WorldSpace | Sequence[str] | None = None):
        return cls(_coerce_space(space, len(values)), tuple(rational(v) for v in values))

    @classmethod
    def normalized(cls, weights: Sequence[Number], space: WorldSpace | Sequence[str] | None = None):
        """Divide ``weights`` by their sum. The only constructor that rescales."""
        exact = [rational(w) for w in weights]
        total = sum(exact, Fraction(0))
        if total <= 0:
            raise ValidationError("weights must have a positive sum")
        return cls(_coerce_space(space, len(exact)), tuple(w / total for w in exact))

    @property
    def n(self) -> int:
        return self.space.n

    def __getitem__(self, label: str) -> Fraction:
        return self.masses[self.space.index(label)]

    @property
    def support(self) -> Event:
        return Event(self.space, sum(1 << i for i, m in enumerate(self.masses) if m > 0))

    def restrict(self, event: Event) -> ProbDist:
        """Renormalise onto the contracted space ``event``; every member needs positive mass."""
        if event.space != self.space:
            raise ValidationError("event belongs to a different world space")
        masses = [self.masses[i] for i in event.members]
        if not masses:
            raise EmptyEvidence("cannot restrict onto the empty event")
        total = sum(masses, Fraction(0))
        if total == 0:
            raise ValidationError("event carries no probability mass")
        return ProbDist(event.contracted(), tuple(m / total for m in masses))


class ProbDist(Distribution):
    """Probability function with every world strictly positive."""

    def __post_init__(self) -> None:
        super().__post_init__()
        zero = [self.space.labels[i] for i, m in enumerate(self.masses) if m == 0]
        if zero:
            raise ValidationError(f"zero-probability worlds are not allowed: {', '.join(zero)}")


@dataclass(frozen=True)
class RankingFunction:
    """Integer disbelief ranks per world; the minimum rank is 0."""

    space: WorldSpace
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        ranks = tuple(self.ranks)
        object.__setattr__(self, "ranks", ranks)
        if len(ranks) != self.space.n:
            raise ValidationError(f"{len(ranks)} ranks for {self.space.n} worlds")
        for r in ranks:
            if isinstance(r, bool) or not isinstance(r, int) or r < 0:
                raise ValidationError(f"ranks must be non-negative integers, got {r!r}")
        if min(ranks) != 0:
            raise ValidationError(f"minimum rank is {min(ranks)}, must be 0")

    @classmethod
    def of(cls, ranks: Sequence[int], space: WorldSpace | Sequence[str] | None = None) -> RankingFunction:
        return cls(_coerce_space(space, len(ranks)), tuple(ranks))

    @classmethod
    def vacuous(cls, space: WorldSpace) -> RankingFunction:
        return cls(space, (0,) * space.n)

    @property
    def n(self) -> int:
        return self.space.n

    def __getitem__(self, label: str) -> int:
        return self.ranks[self.space.index(label)]

    @property
    def max_rank(self) -> int:
        return max(self.ranks)


@dataclass(frozen=True)
class StrataVector:
    """Occupancy counts ``(k_0, ..., k_s)`` of rank levels 0..s."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise ValidationError("a strata vector needs at least one entry")
        if any(isinstance(k, bool) or not isinstance(k, int) or k < 0 for k in counts):
            raise ValidationError(f"strata counts must be non-negative integers: {counts!r}")
        if counts[0] < 1:
            raise ValidationError("stratum 0 must be non-empty")
        if counts[-1] < 1:
            raise ValidationError("the top stratum must be non-empty")

    @property
    def s(self) -> int:
        return len(self.counts) - 1

    @property
    def n(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def is_dense(self) -> bool:
        return all(self.counts)

    def canonical_ranking(self, space: WorldSpace | None = None) -> RankingFunction:
        """Ranking with worlds sorted by rank: k_0 worlds at 0, then k_1 at 1, ..."""
        ranks = tuple(r for r, k in enumerate(self.counts) for _ in range(k))
        return RankingFunction(space or WorldSpace.of_size(len(ranks)), ranks)


def strata_of(delta: RankingFunction) -> StrataVector:
    counts = [0] * (delta.max_rank + 1)
    for r in delta.ranks:
        counts[r] += 1
    return StrataVector(tuple(counts))
