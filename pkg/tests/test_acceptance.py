"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed in the summary.

Run alone with ``pytest tests/test_acceptance.py``. Suites over "all dense
rankings" enumerate canonical rankings (worlds sorted by rank), one per
strata vector: relabelling worlds permutes events and commutes with every
operation involved, so these stand for every dense ranking up to
isomorphism. Each such suite also runs over every labelled dense ranking at
a smaller size as a direct confirmation.
"""

import random
import time
from fractions import Fraction

from conftest import SECTION1_MASSES, record_criterion

from spohn import (
    Event,
    ProbDist,
    StrataVector,
    WorldSpace,
    acceptance_threshold,
    epsilon_rule,
    leap_indices,
    strata_of,
    subset,
    to_kappa,
    to_prob,
    to_prob_exponential,
)
from spohn import kappa, oracle
from spohn.transform import kappa_trace, normalization_constant, rank_weights


def verdict(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
    record_criterion(line)
    print(line)
    assert ok, line


def round4(x: Fraction) -> str:
    # round() on a Fraction rounds half to even
    scaled = round(x * 10_000)
    return f"{scaled // 10_000}.{scaled % 10_000:04d}"


def dense_canonical(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for sv in oracle.enumerate_strata_vectors(n):
            yield sv.canonical_ranking()


def dense_labelled(max_n: int):
    for n in range(1, max_n + 1):
        yield from oracle.enumerate_dense_rankings(n)


def intro_distribution() -> ProbDist:
    return ProbDist.of(SECTION1_MASSES, WorldSpace.of_size(4))


def test_criterion_01_eps_rule_table():
    start = time.perf_counter()
    ranks = epsilon_rule(intro_distribution(), "0.2").ranks
    elapsed = time.perf_counter() - start
    ok = ranks == (0, 0, 1, 1) and elapsed < 0.1
    verdict(1, ok, f"eps=0.2 ranks {ranks} (want (0, 0, 1, 1)) in {elapsed * 1000:.2f} ms")


def test_criterion_02_eps_rule_counterexample():
    p = intro_distribution()
    a, b = subset(p.space, {2}), subset(p.space, {3, 4})
    eps_report = oracle.check_congruence_I(p, epsilon_rule(p, "0.2"))
    witness = [v for v in eps_report.violations if {v.a, v.b} == {a, b}]
    w = witness[0] if witness else None
    witness_ok = (
        w is not None
        and w.a == b
        and w.p_b == Fraction("0.2308")
        and w.p_a == Fraction("0.2507")
        and (w.rank_b, w.rank_a) == (0, 1)
    )
    t_report = oracle.check_congruence_I(p, to_kappa(p))
    ok = (not eps_report.holds) and witness_ok and t_report.holds and t_report.pairs_checked == 225
    verdict(
        2,
        ok,
        f"eps-rule violation A={a} B={b} found={witness_ok}; "
        f"to_kappa {t_report.violation_count} violations over {t_report.pairs_checked} pairs",
    )


def test_criterion_03_to_kappa_table():
    p = intro_distribution()
    trace = kappa_trace(p)
    ranks = to_kappa(p).ranks
    remaining = tuple(row.remaining for row in trace)
    leaps = leap_indices(sorted(p.masses, reverse=True))
    levels = oracle.coarseness_levels(to_kappa(p))
    ok = (
        ranks == (0, 1, 1, 2)
        and remaining == tuple(Fraction(x) for x in ("0.4815", "0.2507", "0.0969", "0"))
        and leaps == (1, 3)
        and levels == 3 == len(leaps) + 1
    )
    verdict(3, ok, f"ranks {ranks}, M {tuple(map(round4, remaining))}, L_p {leaps}, levels {levels}")


def test_criterion_04_to_prob_table():
    sv = StrataVector((1, 2, 1))
    z = normalization_constant(sv)
    per_rank = tuple(w * z for w in rank_weights(sv))
    masses = to_prob(sv.canonical_ranking()).masses
    exact_ok = per_rank == (Fraction(6, 11), Fraction(2, 11), Fraction(1, 11)) and masses == (
        Fraction(6, 11),
        Fraction(2, 11),
        Fraction(2, 11),
        Fraction(1, 11),
    )
    shown = tuple(round4(x) for x in per_rank)
    z_inv = round4(1 / z)
    rounding_ok = shown == ("0.5454", "0.1818", "0.0909") and z_inv == "0.9167"
    verdict(
        4,
        exact_ok and rounding_ok,
        f"exact per-rank {tuple(map(str, per_rank))} ok={exact_ok}; "
        f"rounded {shown} (want ('0.5454', '0.1818', '0.0909')), Z^-1 {z_inv} (want 0.9167)",
    )


def test_criterion_05_threshold_table():
    shown = tuple(round4(acceptance_threshold(StrataVector((k0, 1))).unnormalized) for k0 in (1, 2, 3, 4))
    ok = shown == ("0.5000", "0.6667", "0.7500", "0.8000")
    verdict(5, ok, f"unnormalized thresholds {shown}")


def test_criterion_06_theorem1_suite():
    rng = random.Random(20240601)
    start = time.perf_counter()
    runs = failures = 0
    for n in range(2, 9):
        for _ in range(1000):
            p = oracle.random_distribution(n, rng)
            runs += 1
            if not (oracle.check_congruence_I(p, to_kappa(p)).holds and oracle.check_least_coarseness(p).holds):
                failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and runs == 7000 and elapsed < 120
    verdict(6, ok, f"{runs} random distributions, n=2..8: {failures} failures in {elapsed:.1f} s")


def test_criterion_07_theorem2_suite():
    start = time.perf_counter()
    cases = failures = 0
    for delta in dense_canonical(10):
        cases += 1
        if not (
            oracle.check_congruence_II(delta, to_prob(delta)).holds
            and oracle.check_congruence_II(delta, to_prob_exponential(delta)).holds
            and oracle.check_lemma2(delta).holds
        ):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and cases == 2**10 - 1 and elapsed < 120
    verdict(7, ok, f"{cases} dense strata vectors, n<=10: {failures} failures in {elapsed:.1f} s")


def test_criterion_08_round_trip():
    cases = failures = 0
    for delta in dense_canonical(10):
        cases += 1
        if to_kappa(to_prob(delta)) != delta or not oracle.check_zero_strata_invariance(delta).holds:
            failures += 1
    labelled = 0
    for delta in dense_labelled(6):
        labelled += 1
        if to_kappa(to_prob(delta)) != delta:
            failures += 1
    ok = failures == 0
    verdict(8, ok, f"{cases} canonical (n<=10) + {labelled} labelled (n<=6) dense rankings: {failures} failures")


def _theorem3_sweep(rankings):
    cases = {"conditioning": 0, "imaging": 0}
    failed = {"conditioning": [], "imaging": []}
    for delta in rankings:
        for mask in range(1, 1 << delta.n):
            event = Event(delta.space, mask)
            for mode in cases:
                cases[mode] += 1
                result = oracle.check_theorem3(delta, event, mode)
                if not result.holds:
                    failed[mode].append(result)
    return cases, failed


def test_criterion_09_theorem3():
    start = time.perf_counter()
    cases, failed = _theorem3_sweep(dense_canonical(8))
    labelled_cases, labelled_failed = _theorem3_sweep(dense_labelled(5))
    elapsed = time.perf_counter() - start
    bad = {m: len(failed[m]) + len(labelled_failed[m]) for m in failed}
    ok = not any(bad.values()) and elapsed < 300
    verdict(
        9,
        ok,
        f"conditioning {cases['conditioning']}+{labelled_cases['conditioning']} cases, {bad['conditioning']} failures; "
        f"imaging {cases['imaging']}+{labelled_cases['imaging']} cases, {bad['imaging']} failures; {elapsed:.1f} s",
    )


def test_criterion_10_corollary1():
    cases = failures = 0
    for source in (dense_canonical(8), dense_labelled(6)):
        for delta in source:
            check = oracle.check_corollary1(delta)
            cases += check.cases
            failures += not check.holds
    verdict(10, failures == 0, f"{cases} (ranking, event) cases: {failures} failing rankings")


def test_criterion_11_lemma3():
    cases = failures = strict = 0
    for source in (dense_canonical(8), dense_labelled(6)):
        for delta in source:
            check = oracle.check_lemma3(delta)
            cases += check.cases
            failures += not check.holds
            counts = strata_of(delta).counts
            strict += any(k < max(counts) for k in counts)
    verdict(11, failures == 0, f"{cases} world pairs: {failures} failing rankings ({strict} rankings with a short stratum)")


def test_criterion_12_deductive_closure():
    start = time.perf_counter()
    cases = failures = 0
    for n in range(1, 9):
        for delta in oracle.enumerate_rankings(n, 2):
            cases += 1
            check = oracle.check_deductive_closure(delta)
            believed = kappa.plain_beliefs(delta)
            core = kappa.zero_stratum(delta)
            if not check.holds or not all(core.issubset(e) for e in believed):
                failures += 1
    elapsed = time.perf_counter() - start
    verdict(12, failures == 0, f"{cases} labelled rankings (ranks 0..2, n<=8): {failures} failures in {elapsed:.1f} s")
