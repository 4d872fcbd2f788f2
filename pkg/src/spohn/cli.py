"""Command-line front end.

Reads a JSON document describing a probability function or a ranking,
runs one transformation, revision or oracle check, and prints a table or
JSON. Exit codes: 0 ok, 1 input or validation error, 2 property violation,
3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TextIO

from . import kappa, oracle, prob
from .core import (
    Event,
    ProbDist,
    RankingFunction,
    SpaceTooLarge,
    SpohnError,
    StrataVector,
    ValidationError,
    WorldSpace,
    rational,
    strata_of,
)
from .transform import (
    acceptance_threshold,
    epsilon_exponents,
    epsilon_rule,
    exponential_weights,
    kappa_trace,
    leap_indices,
    normalization_constant,
    probability_bounds,
    rank_weights,
    to_kappa,
    to_prob,
    to_prob_exponential,
)

__all__ = ["Document", "build_model", "build_parser", "main", "parse_document", "run"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2
EXIT_GUARD = 3

COMMANDS = (
    "to-kappa",
    "to-prob",
    "to-prob-exp",
    "eps-rule",
    "condition",
    "image",
    "densify",
    "bounds",
    "threshold",
    "check",
    "roundtrip",
)
CHECKS = ("1", "2", "3", "lemma2", "lemma3", "corollary1", "closure", "threshold")


class ParseError(ValidationError):
    pass


class UsageError(SpohnError):
    pass


@dataclass
class Document:
    kind: str
    worlds: tuple[str, ...]
    values: tuple[Any, ...]
    eps: str | None = None
    evidence: tuple[str, ...] | None = None


def parse_document(text: str, source: str = "<stdin>") -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ParseError(f"{source}: top level must be a JSON object")
    kind = raw.get("kind")
    if kind not in ("probability", "ranking"):
        raise ParseError(f"{source}: 'kind' must be 'probability' or 'ranking', got {kind!r}")
    values = raw.get("values")
    if not isinstance(values, list) or not values:
        raise ParseError(f"{source}: 'values' must be a non-empty list")
    worlds = raw.get("worlds")
    if worlds is None:
        worlds = [f"w{i}" for i in range(1, len(values) + 1)]
    if not isinstance(worlds, list) or not all(isinstance(w, str) for w in worlds):
        raise ParseError(f"{source}: 'worlds' must be a list of strings")
    if len(worlds) != len(values):
        raise ParseError(f"{source}: {len(worlds)} worlds but {len(values)} values")
    for i, v in enumerate(values):
        if kind == "probability" and not (isinstance(v, str) or (isinstance(v, int) and not isinstance(v, bool))):
            raise ParseError(f"{source}: values[{i}]: probabilities must be strings (exact decimals or fractions)")
        if kind == "ranking" and (isinstance(v, bool) or not isinstance(v, int)):
            raise ParseError(f"{source}: values[{i}]: ranks must be integers")
    eps = raw.get("eps")
    if eps is not None:
        eps = str(eps)
    evidence = raw.get("evidence")
    if evidence is not None:
        if not isinstance(evidence, list) or not all(isinstance(w, str) for w in evidence):
            raise ParseError(f"{source}: 'evidence' must be a list of world labels")
        evidence = tuple(evidence)
    return Document(kind, tuple(worlds), tuple(values), eps, evidence)


def read_document(path: str | None, stdin: TextIO) -> Document:
    if path is None or path == "-":
        return parse_document(stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read(), path)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def build_model(doc: Document, *, normalize: bool = False, densify: bool = False) -> ProbDist | RankingFunction:
    space = WorldSpace(doc.worlds)
    if doc.kind == "probability":
        if normalize:
            return ProbDist.normalized(doc.values, space)
        return ProbDist.of(doc.values, space)
    ranks = tuple(doc.values)
    if densify:
        if any(r < 0 for r in ranks):
            raise ValidationError("ranks must be non-negative")
        levels = {r: i for i, r in enumerate(sorted(set(ranks)))}
        ranks = tuple(levels[r] for r in ranks)
    return RankingFunction(space, ranks)


@dataclass
class Output:
    data: dict[str, Any]
    lines: list[str] = field(default_factory=list)
    code: int = EXIT_OK


class Renderer:
    def __init__(self, precision: int):
        if precision < 0:
            raise UsageError("--precision must be non-negative")
        self.precision = precision

    def dec(self, x: Fraction | int | float) -> str:
        if isinstance(x, float):
            return "inf" if x > 0 else "-inf"
        scaled = round(Fraction(x) * 10**self.precision)  # Fraction rounds half to even
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled)).rjust(self.precision + 1, "0")
        if not self.precision:
            return sign + digits
        return f"{sign}{digits[:-self.precision]}.{digits[-self.precision:]}"

    def num(self, x: Fraction | int) -> dict[str, str]:
        return {"exact": str(Fraction(x)), "decimal": self.dec(x)}

    def both(self, x: Fraction) -> str:
        return f"{self.dec(x)} ({Fraction(x)})"


def table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


def _need_prob(model) -> ProbDist:
    if not isinstance(model, ProbDist):
        raise ValidationError("this command needs a probability document")
    return model


def _need_ranking(model) -> RankingFunction:
    if not isinstance(model, RankingFunction):
        raise ValidationError("this command needs a ranking document")
    return model


def _evidence(args, doc: Document | None, space: WorldSpace, required: bool = True) -> Event | None:
    labels = None
    if args.evidence is not None:
        labels = [w.strip() for w in args.evidence.split(",") if w.strip()]
    elif doc is not None and doc.evidence is not None:
        labels = list(doc.evidence)
    if labels is None:
        if required:
            raise UsageError("this command needs --evidence (or an 'evidence' entry in the document)")
        return None
    return space.event(labels)


def _strata(args, model) -> StrataVector:
    if args.strata is not None:
        if model is not None:
            raise UsageError("give either an input document or --strata, not both")
        try:
            counts = tuple(int(k) for k in args.strata.split(","))
        except ValueError:
            raise UsageError(f"--strata must be comma-separated integers, got {args.strata!r}") from None
        return StrataVector(counts)
    return strata_of(_need_ranking(model))


def cmd_to_kappa(args, model, doc, r: Renderer) -> Output:
    p = _need_prob(model)
    trace = kappa_trace(p)
    delta = to_kappa(p)
    leaps = leap_indices([row.mass for row in trace])
    lines = table(
        ("i", "world", "p_i", "M_i", "rank"),
        [(row.position, row.world, r.dec(row.mass), r.dec(row.remaining), row.rank) for row in trace],
    )
    lines += [
        "",
        "ranks: " + " ".join(f"{w}={d}" for w, d in zip(delta.space.labels, delta.ranks)),
        "leap indices: {" + ", ".join(map(str, leaps)) + "}",
        f"levels: {oracle.coarseness_levels(delta)}",
    ]
    data = {
        "command": "to-kappa",
        "trace": [
            {"i": row.position, "world": row.world, "p": r.num(row.mass), "M": r.num(row.remaining), "rank": row.rank}
            for row in trace
        ],
        "ranks": dict(zip(delta.space.labels, delta.ranks)),
        "leap_indices": list(leaps),
        "levels": oracle.coarseness_levels(delta),
    }
    return Output(data, lines)


def _eps(args, doc: Document | None) -> Fraction:
    value = args.eps if args.eps is not None else (doc.eps if doc is not None else None)
    if value is None:
        raise UsageError("this command needs --eps (or an 'eps' entry in the document)")
    return rational(value)


def cmd_eps_rule(args, model, doc, r: Renderer) -> Output:
    p = _need_prob(model)
    eps = _eps(args, doc)
    raw = epsilon_exponents(p, eps)
    delta = epsilon_rule(p, eps)
    lines = table(
        ("world", "p", "k", "rank"),
        [(w, r.dec(m), k, d) for w, m, k, d in zip(p.space.labels, p.masses, raw, delta.ranks)],
    )
    lines += ["", f"eps: {r.both(eps)}", f"baseline shift: {min(raw)}"]
    data = {
        "command": "eps-rule",
        "eps": r.num(eps),
        "worlds": [
            {"world": w, "p": r.num(m), "k": k, "rank": d}
            for w, m, k, d in zip(p.space.labels, p.masses, raw, delta.ranks)
        ],
        "baseline_shift": min(raw),
    }
    return Output(data, lines)


def _to_prob_output(name: str, delta: RankingFunction, exponential: bool, r: Renderer) -> Output:
    strata = strata_of(delta)
    weights = exponential_weights(strata) if exponential else rank_weights(strata)
    z = normalization_constant(strata, exponential)
    p = to_prob_exponential(delta) if exponential else to_prob(delta)
    lines = table(
        ("rank", "k_i", "weight", "p_i"),
        [(i, k, r.dec(w), r.dec(w * z)) for i, (k, w) in enumerate(zip(strata.counts, weights))],
    )
    lines += [""]
    lines += table(("world", "rank", "p"), [(w, d, r.dec(m)) for w, d, m in zip(delta.space.labels, delta.ranks, p.masses)])
    lines += ["", f"Z^-1: {r.both(1 / z)}", f"Z: {r.both(z)}"]
    data = {
        "command": name,
        "strata": list(strata.counts),
        "per_rank": [
            {"rank": i, "k": k, "weight": r.num(w), "p": r.num(w * z)}
            for i, (k, w) in enumerate(zip(strata.counts, weights))
        ],
        "masses": {w: r.num(m) for w, m in zip(delta.space.labels, p.masses)},
        "Z": r.num(z),
        "Z_inverse": r.num(1 / z),
    }
    if exponential:
        lines.append(f"k_max: {max(strata.counts)}")
        data["k_max"] = max(strata.counts)
    return Output(data, lines)


def cmd_to_prob(args, model, doc, r: Renderer) -> Output:
    return _to_prob_output("to-prob", _need_ranking(model), False, r)


def cmd_to_prob_exp(args, model, doc, r: Renderer) -> Output:
    return _to_prob_output("to-prob-exp", _need_ranking(model), True, r)


def cmd_condition(args, model, doc, r: Renderer) -> Output:
    evidence = _evidence(args, doc, model.space)
    if isinstance(model, RankingFunction):
        result = kappa.condition(model, evidence)
        base = kappa.rank_of_event(model, evidence)
        lines = table(("world", "rank", "rank|A"), [(w, model[w], d) for w, d in zip(result.space.labels, result.ranks)])
        lines += ["", f"rank(A): {base}"]
        data = {"command": "condition", "kind": "ranking", "evidence": list(evidence.labels), "rank_of_evidence": base,
                "ranks": dict(zip(result.space.labels, result.ranks))}
        return Output(data, lines)
    result = prob.condition(model, evidence)
    mass = prob.prob_of_event(model, evidence)
    lines = table(("world", "p", "p|A"), [(w, r.dec(model[w]), r.dec(m)) for w, m in zip(result.space.labels, result.masses)])
    lines += ["", f"p(A): {r.both(mass)}"]
    data = {"command": "condition", "kind": "probability", "evidence": list(evidence.labels), "p_evidence": r.num(mass),
            "masses": {w: r.num(m) for w, m in zip(result.space.labels, result.masses)}}
    return Output(data, lines)


def cmd_image(args, model, doc, r: Renderer) -> Output:
    evidence = _evidence(args, doc, model.space)
    if isinstance(model, RankingFunction):
        delta, p = model, to_prob(model)
        origin = "p = to_prob(ranking)"
    else:
        p, delta = model, to_kappa(model)
        origin = "ranking = to_kappa(p)"
    imaged = prob.image(p, delta, evidence)
    lines = table(
        ("world", "rank", "p", "imaged"),
        [(w, d, r.dec(a), r.dec(b)) for w, d, a, b in zip(p.space.labels, delta.ranks, p.masses, imaged.masses)],
    )
    lines += ["", origin]
    data = {
        "command": "image",
        "evidence": list(evidence.labels),
        "ranks": dict(zip(delta.space.labels, delta.ranks)),
        "masses": {w: r.num(m) for w, m in zip(p.space.labels, p.masses)},
        "imaged": {w: r.num(m) for w, m in zip(p.space.labels, imaged.masses)},
    }
    return Output(data, lines)


def cmd_densify(args, model, doc, r: Renderer) -> Output:
    delta = _need_ranking(model)
    dense = kappa.densify(delta)
    lines = table(("world", "rank", "dense"), [(w, a, b) for w, a, b in zip(delta.space.labels, delta.ranks, dense.ranks)])
    before, after = strata_of(delta).counts, strata_of(dense).counts
    lines += ["", f"strata: {before} -> {after}", f"was dense: {'yes' if kappa.is_dense(delta) else 'no'}"]
    data = {"command": "densify", "ranks": dict(zip(dense.space.labels, dense.ranks)), "strata_before": list(before),
            "strata_after": list(after), "was_dense": kappa.is_dense(delta)}
    return Output(data, lines)


def cmd_bounds(args, model, doc, r: Renderer) -> Output:
    strata = _strata(args, model)
    rows = []
    entries = []
    for i, k in enumerate(strata.counts):
        lo, hi = probability_bounds(strata, i)
        rows.append((i, k, r.dec(lo), r.dec(hi)))
        entries.append({"rank": i, "k": k, "lo": r.num(lo), "hi": r.num(hi)})
    z = normalization_constant(strata)
    lines = table(("rank", "k_i", "lo", "hi"), rows) + ["", f"Z: {r.both(z)}", "intervals are [lo, hi)"]
    return Output({"command": "bounds", "strata": list(strata.counts), "bounds": entries, "Z": r.num(z)}, lines)


def cmd_threshold(args, model, doc, r: Renderer) -> Output:
    strata = _strata(args, model)
    t = acceptance_threshold(strata)
    lines = table(("k_0", "unnormalized", "normalized"), [(strata[0], r.dec(t.unnormalized), r.dec(t.normalized))])
    data = {"command": "threshold", "strata": list(strata.counts), "k0": strata[0],
            "unnormalized": r.num(t.unnormalized), "normalized": r.num(t.normalized)}
    return Output(data, lines)


def cmd_roundtrip(args, model, doc, r: Renderer) -> Output:
    delta = _need_ranking(model)
    dense = kappa.densify(delta)
    p = to_prob(delta)
    back = to_kappa(p)
    ok = back.ranks == dense.ranks
    lines = table(
        ("world", "rank", "dense", "p", "back"),
        [(w, a, b, r.dec(m), c) for w, a, b, m, c in zip(delta.space.labels, delta.ranks, dense.ranks, p.masses, back.ranks)],
    )
    lines += ["", f"round trip: {'holds' if ok else 'FAILS'}"]
    data = {"command": "roundtrip", "holds": ok, "dense": dict(zip(delta.space.labels, dense.ranks)),
            "back": dict(zip(delta.space.labels, back.ranks))}
    return Output(data, lines, EXIT_OK if ok else EXIT_VIOLATION)


def _report_lines(title: str, report: oracle.CongruenceReport, r: Renderer) -> list[str]:
    verdict = "holds" if report.holds else f"FAILS ({report.violation_count} violating pairs)"
    lines = [f"{title}: {verdict}, {report.pairs_checked} pairs checked"]
    for v in report.violations:
        lines.append(
            f"  A={v.a} B={v.b} p(A)={r.dec(v.p_a)} p(B)={r.dec(v.p_b)} rank(A)={v.rank_a} rank(B)={v.rank_b}"
        )
    if report.truncated:
        lines.append(f"  ... {report.violation_count - len(report.violations)} more")
    return lines


def _report_data(report: oracle.CongruenceReport, r: Renderer) -> dict[str, Any]:
    return {
        "holds": report.holds,
        "pairs_checked": report.pairs_checked,
        "violation_count": report.violation_count,
        "violations": [
            {"A": list(v.a.labels), "B": list(v.b.labels), "p_A": r.num(v.p_a), "p_B": r.num(v.p_b),
             "rank_A": v.rank_a, "rank_B": v.rank_b}
            for v in report.violations
        ],
    }


def _check_lines(c: oracle.Check) -> list[str]:
    lines = [f"{c.name}: {'holds' if c.holds else 'FAILS'}, {c.cases} cases"]
    lines += [f"  {f}" for f in c.failures]
    return lines


def _check_data(c: oracle.Check) -> dict[str, Any]:
    return {"holds": c.holds, "cases": c.cases, "failures": list(c.failures)}


def _check_model(args, model, want: str):
    rng = random.Random(args.seed)
    if model is None:
        if args.n < 1:
            raise UsageError("--n must be positive")
        if args.n > args.max_n:
            raise SpaceTooLarge(f"{args.n} worlds exceed --max-n {args.max_n}")
        if want == "probability":
            return oracle.random_distribution(args.n, rng), f"random distribution, seed {args.seed}, n={args.n}"
        return oracle.random_dense_ranking(args.n, rng), f"random dense ranking, seed {args.seed}, n={args.n}"
    if want == "probability":
        return _need_prob(model), "input document"
    return _need_ranking(model), "input document"


def cmd_check(args, model, doc, r: Renderer) -> Output:
    theorem = args.theorem
    want = "probability" if theorem == "1" else "ranking"
    subject, origin = _check_model(args, model, want)
    if subject.n > args.max_n:
        raise SpaceTooLarge(f"{subject.n} worlds exceed --max-n {args.max_n}")
    data: dict[str, Any] = {"command": "check", "theorem": theorem, "subject": origin}
    lines = [f"subject: {origin}"]
    if want == "probability":
        data["masses"] = {w: r.num(m) for w, m in zip(subject.space.labels, subject.masses)}
    else:
        data["ranks"] = dict(zip(subject.space.labels, subject.ranks))
        lines.append("ranks: " + " ".join(f"{w}={d}" for w, d in zip(subject.space.labels, subject.ranks)))
    ok = True

    if theorem == "1":
        if args.eps is not None or (doc is not None and doc.eps is not None):
            eps = _eps(args, doc)
            delta = epsilon_rule(subject, eps)
            title = f"congruence I (eps-rule, eps={r.dec(eps)})"
        else:
            delta = to_kappa(subject)
            title = "congruence I (to_kappa)"
        lines.append("ranks: " + " ".join(f"{w}={d}" for w, d in zip(delta.space.labels, delta.ranks)))
        report = oracle.check_congruence_I(subject, delta, max_n=args.max_n)
        lines += _report_lines(title, report, r)
        data["ranking"] = dict(zip(delta.space.labels, delta.ranks))
        data["congruence_I"] = _report_data(report, r)
        ok = report.holds
        if title.endswith("(to_kappa)"):
            c = oracle.check_least_coarseness(subject)
            lines += _check_lines(c)
            data["least_coarseness"] = _check_data(c)
            ok = ok and c.holds
    elif theorem == "2":
        for key, title, p in (
            ("to_prob", "congruence II (to_prob)", to_prob(subject)),
            ("to_prob_exp", "congruence II (to_prob_exp)", to_prob_exponential(subject)),
        ):
            report = oracle.check_congruence_II(subject, p, max_n=args.max_n)
            lines += _report_lines(title, report, r)
            data[key] = _report_data(report, r)
            ok = ok and report.holds
        c = oracle.check_lemma2(subject)
        lines += _check_lines(c)
        data["lemma2"] = _check_data(c)
        ok = ok and c.holds
    elif theorem == "3":
        evidence = _evidence(args, doc, subject.space, required=False)
        events = [evidence] if evidence is not None else [e for e in subject.space.events() if e]
        failed = []
        for event in events:
            res = oracle.check_theorem3(subject, event, args.mode)
            if not res.holds:
                failed.append(res)
            if evidence is not None:
                lines.append(f"evidence {event}: left {res.left.ranks} right {res.right.ranks}")
                if res.note:
                    lines.append(f"note: {res.note}")
        ok = not failed
        lines.append(f"theorem 3 ({args.mode}): {'holds' if ok else 'FAILS'}, {len(events)} evidence events")
        for res in failed[:20]:
            lines.append(f"  evidence {res.evidence}: left {res.left.ranks} right {res.right.ranks}")
        data["theorem3"] = {
            "mode": args.mode,
            "holds": ok,
            "evidence_events": len(events),
            "failures": [{"evidence": list(f.evidence.labels), "left": list(f.left.ranks), "right": list(f.right.ranks)}
                         for f in failed],
        }
    else:
        fn = {
            "lemma2": oracle.check_lemma2,
            "lemma3": oracle.check_lemma3,
            "corollary1": oracle.check_corollary1,
            "closure": oracle.check_deductive_closure,
            "threshold": oracle.check_threshold,
        }[theorem]
        c = fn(subject)
        lines += _check_lines(c)
        data[theorem] = _check_data(c)
        ok = c.holds
    data["holds"] = ok
    return Output(data, lines, EXIT_OK if ok else EXIT_VIOLATION)


HANDLERS = {
    "to-kappa": cmd_to_kappa,
    "to-prob": cmd_to_prob,
    "to-prob-exp": cmd_to_prob_exp,
    "eps-rule": cmd_eps_rule,
    "condition": cmd_condition,
    "image": cmd_image,
    "densify": cmd_densify,
    "bounds": cmd_bounds,
    "threshold": cmd_threshold,
    "check": cmd_check,
    "roundtrip": cmd_roundtrip,
}
# commands that can take --strata instead of a document
OPTIONAL_INPUT = {"bounds", "threshold"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="JSON document path, or '-' for stdin")
    common.add_argument("--normalize", action="store_true", help="divide probability values by their sum")
    common.add_argument("--densify", action="store_true", help="densify ranking values before validation")
    common.add_argument("--eps", help="epsilon for the eps-rule, as an exact decimal")
    common.add_argument("--evidence", help="comma-separated world labels")
    common.add_argument("--mode", choices=("conditioning", "imaging"), default="conditioning")
    common.add_argument("--precision", type=int, default=4, help="decimal places (default 4, round half to even)")
    common.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N, help="enumeration guard for oracle checks")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--strata", help="strata vector such as 1,2,1 (bounds, threshold)")

    parser = _Parser(prog="spohn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        cmd = sub.add_parser(name, parents=[common])
        if name == "check":
            cmd.add_argument("--theorem", choices=CHECKS, required=True)
            cmd.add_argument("--seed", type=int, default=0)
            cmd.add_argument("--n", type=int, default=4, help="worlds in the random subject when no input is given")
    return parser


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        renderer = Renderer(args.precision)
        doc = None
        model = None
        optional = args.command == "check" or (args.command in OPTIONAL_INPUT and args.strata is not None)
        if args.input is not None or not optional:
            doc = read_document(args.input, stdin)
            model = build_model(doc, normalize=args.normalize, densify=args.densify)
        out = HANDLERS[args.command](args, model, doc, renderer)
    except SpaceTooLarge as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_GUARD
    except SpohnError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if args.format == "json":
        stdout.write(json.dumps(out.data, indent=2) + "\n")
    else:
        stdout.write("\n".join(out.lines) + "\n")
    return out.code


def main() -> None:
    sys.exit(run())

