import itertools
import random
from fractions import Fraction

import pytest

from spohn import (
    BadEpsilon,
    NotSorted,
    ProbDist,
    RankOutOfRange,
    RankingFunction,
    StrataVector,
    ValidationError,
    acceptance_threshold,
    epsilon_rule,
    leap_indices,
    probability_bounds,
    strata_of,
    to_kappa,
    to_prob,
    to_prob_exponential,
)
from spohn import oracle, prob
from spohn.transform import epsilon_exponents, kappa_trace, normalization_constant, rank_weights


def brute_leaps(q):
    q = [Fraction(x) for x in q]
    return tuple(i + 1 for i in range(len(q) - 1) if q[i] > sum(q[i + 1:], Fraction(0)))


def brute_to_prob(ranks):
    unnorm = []
    for r in ranks:
        w = Fraction(1)
        for j in range(r + 1):
            w *= Fraction(1, ranks.count(j) + 1)
        unnorm.append(w)
    total = sum(unnorm)
    return tuple(w / total for w in unnorm)


def most_levels_of_any_congruent_ranking(p):
    """Search every ranking with ranks < n for the finest congruent one."""
    best = 0
    for ranks in itertools.product(range(p.n), repeat=p.n):
        if min(ranks) != 0:
            continue
        delta = RankingFunction(p.space, ranks)
        if oracle.check_congruence_I(p, delta, max_violations=1).holds:
            best = max(best, len(set(ranks)))
    return best


@pytest.mark.parametrize(
    "q, expected",
    [
        (["0.5185", "0.2308", "0.1538", "0.0969"], (1, 3)),
        (["1/4"] * 4, ()),
        (["0.6", "0.3", "0.1"], (1, 2)),
    ],
)
def test_leap_indices(q, expected):
    assert brute_leaps(q) == expected
    assert leap_indices(q) == expected


def test_leap_indices_rejects_increase():
    with pytest.raises(NotSorted):
        leap_indices(["0.2", "0.5", "0.3"])
    with pytest.raises(ValidationError):
        leap_indices(["1", "0"])


def test_leap_count_ignores_tie_order():
    rng = random.Random(7)
    for _ in range(200):
        q = sorted((Fraction(rng.randint(1, 4)) for _ in range(6)), reverse=True)
        assert len(leap_indices(q)) == len(brute_leaps(q))


def test_to_kappa_intro_table(p_intro):
    trace = kappa_trace(p_intro)
    assert [row.remaining for row in trace] == [Fraction(x) for x in ("0.4815", "0.2507", "0.0969", "0")]
    assert to_kappa(p_intro).ranks == (0, 1, 1, 2)


def test_to_kappa_uniform_is_vacuous():
    for n in range(1, 7):
        assert to_kappa(ProbDist.normalized([1] * n)).ranks == (0,) * n


def test_to_kappa_three_worlds():
    trace = kappa_trace(ProbDist.of(["0.6", "0.3", "0.1"]))
    assert [row.remaining for row in trace] == [Fraction("0.4"), Fraction("0.1"), 0]
    assert [row.rank for row in trace] == [0, 1, 2]


def test_to_kappa_maps_ranks_back_to_worlds():
    p = ProbDist.of(["0.1", "0.6", "0.3"])
    assert to_kappa(p).ranks == (2, 0, 1)


def test_to_kappa_ties_share_rank():
    assert to_kappa(ProbDist.of(["0.2", "0.6", "0.2"])).ranks == (1, 0, 1)
    # 0.5 does not strictly exceed the remaining 0.5
    assert to_kappa(ProbDist.of(["0.25", "0.5", "0.25"])).ranks == (0, 0, 0)


def test_to_kappa_is_finest_congruent_ranking():
    rng = random.Random(11)
    for n in (2, 3, 4):
        for _ in range(15):
            p = oracle.random_distribution(n, rng)
            assert oracle.coarseness_levels(to_kappa(p)) == most_levels_of_any_congruent_ranking(p)


def test_epsilon_rule_intro_table(p_intro):
    assert epsilon_exponents(p_intro, "0.2") == (0, 0, 1, 1)
    assert epsilon_rule(p_intro, "0.2").ranks == (0, 0, 1, 1)


def test_epsilon_rule_boundaries():
    certain = ProbDist.of(["1"])
    for eps in ("0.01", "0.5", "0.99"):
        assert epsilon_exponents(certain, eps) == (0,)
    p = ProbDist.of(["0.04", "0.96"])
    assert epsilon_exponents(p, "0.2") == (2, 0)


def test_epsilon_rule_rebaselines():
    p = ProbDist.of(["0.5", "0.5"])
    assert epsilon_exponents(p, "0.1") == (0, 0)
    assert epsilon_exponents(p, "0.6") == (1, 1)
    assert epsilon_rule(p, "0.6").ranks == (0, 0)


@pytest.mark.parametrize("eps", ["0", "1", "-0.5", "2"])
def test_epsilon_rule_rejects_bad_epsilon(p_intro, eps):
    with pytest.raises(BadEpsilon):
        epsilon_rule(p_intro, eps)


def test_to_prob_example(delta_example):
    assert rank_weights(strata_of(delta_example)) == (Fraction(1, 2), Fraction(1, 6), Fraction(1, 12))
    assert normalization_constant(strata_of(delta_example)) == Fraction(12, 11)
    want = (Fraction(6, 11), Fraction(2, 11), Fraction(2, 11), Fraction(1, 11))
    assert brute_to_prob(delta_example.ranks) == want
    assert to_prob(delta_example).masses == want


def test_to_prob_vacuous_is_uniform():
    for n in range(1, 6):
        assert to_prob(RankingFunction.of((0,) * n)).masses == (Fraction(1, n),) * n


def test_to_prob_two_strata():
    assert to_prob(RankingFunction.of((0, 1))).masses == (Fraction(2, 3), Fraction(1, 3))


def test_to_prob_matches_direct_products():
    for sv in oracle.enumerate_strata_vectors(6, dense=False, max_rank=4):
        delta = sv.canonical_ranking()
        assert to_prob(delta).masses == brute_to_prob(delta.ranks)


def test_to_prob_exponential():
    delta = RankingFunction.of((0, 1, 1, 2))
    assert to_prob_exponential(delta).masses == (Fraction(9, 16), Fraction(3, 16), Fraction(3, 16), Fraction(1, 16))
    assert to_prob_exponential(RankingFunction.of((0, 0, 0))).masses == (Fraction(1, 3),) * 3
    two = RankingFunction.of((0, 1))
    assert to_prob_exponential(two).masses == to_prob(two).masses == (Fraction(2, 3), Fraction(1, 3))


def test_probability_bounds_example():
    sv = StrataVector((1, 2, 1))
    assert probability_bounds(sv, 1) == (Fraction(2, 11), Fraction(6, 11))
    assert probability_bounds(sv, 0) == (Fraction(6, 11), Fraction(12, 11))
    with pytest.raises(RankOutOfRange):
        probability_bounds(sv, 3)


def test_probability_bounds_cover_every_event_of_example(delta_example, space4):
    sv = strata_of(delta_example)
    p = to_prob(delta_example)
    from spohn import kappa

    checked = 0
    for event in space4.events():
        if not event:
            continue
        lo, hi = probability_bounds(sv, kappa.rank_of_event(delta_example, event))
        assert lo <= prob.prob_of_event(p, event) < hi
        checked += 1
    assert checked == 15


@pytest.mark.parametrize("k0, value", [(1, "0.5"), (2, "2/3"), (3, "0.75"), (4, "0.8")])
def test_unnormalized_threshold(k0, value):
    sv = StrataVector((k0, 1))
    assert acceptance_threshold(sv).unnormalized == Fraction(value)


def test_vacuous_threshold():
    t = acceptance_threshold(StrataVector((5,)))
    assert t.unnormalized == Fraction(5, 6)
    assert t.normalized == 1


def test_normalized_threshold_equals_rank_zero_mass(delta_example, space4):
    from spohn import kappa

    t = acceptance_threshold(strata_of(delta_example))
    assert t.normalized == Fraction(6, 11)
    assert t.normalized == prob.prob_of_event(to_prob(delta_example), kappa.zero_stratum(delta_example))
    assert oracle.check_threshold(delta_example).holds
