"""Command-line entry point.

Exit status: 0 clean, 1 usage or parse error, 2 guard refusal,
3 counterexample or lemma violation found.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .conditions import Hypothesis, classify_pairs, hypothesis_holds
from .decider import SUPEREULERIAN, Guard, SizeGuardError, decide
from .digraph import DigraphError, format_edge_list, is_strong, read_edge_list, to_dot
from .enumeration import (
    EXHAUSTIVE,
    RANDOM,
    CheckpointError,
    PopulationSpec,
    dumps_report,
    lemma_trials,
    verify_implication,
    write_counterexamples,
)
from .family import FamilyParams, audit_family, build_family
from .trails import format_vertex_sequence

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_FOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _guard(args) -> Guard:
    return Guard(max_n=args.max_n, max_m=args.max_m)


def cmd_check(args) -> int:
    D = read_edge_list(args.input)
    d = decide(D, _guard(args))
    pairs = classify_pairs(D)
    results = [hypothesis_holds(D, h, pairs) for h in Hypothesis]
    if args.format == "json":
        payload = {
            "config": _config(args),
            "n": D.n,
            "m": D.m,
            "strong": is_strong(D),
            "decision": d.to_json(),
            "circuit": d.circuit(D),
            "pairs": [pc.to_json() for pc in pairs],
            "hypotheses": [r.to_json() for r in results],
        }
        sys.stdout.write(dumps_report(payload))
        return EXIT_OK
    head = ["strong" if is_strong(D) else "not strong"]
    if d.verdict == SUPEREULERIAN:
        head += ["supereulerian", "certificate: " + format_vertex_sequence(d.circuit(D))]
    else:
        head.append("NOT supereulerian")
    print("; ".join(head))
    for pc in pairs:
        parts = []
        if pc.dominated_by:
            parts.append("dominated by " + ",".join(map(str, sorted(pc.dominated_by))))
        if pc.dominates:
            parts.append("dominates " + ",".join(map(str, sorted(pc.dominates))))
        desc = ", ".join(parts) or "neither dominated nor dominating"
        print(f"{{{pc.pair[0]},{pc.pair[1]}}}: {desc}; d(u)+d(v)={pc.degree_sum}; mixed_min={pc.mixed_min}")
    for r in results:
        extra = f" (violator {{{r.violator.pair[0]},{r.violator.pair[1]}}})" if r.violator else ""
        extra += f" ({r.reason})" if r.reason else ""
        print(f"{r.hypothesis.value}: {r.status}{extra}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.exhaustive == (args.random is not None):
        raise UsageError("choose exactly one of --exhaustive or --random COUNT")
    spec = PopulationSpec(
        n=args.n,
        mode=EXHAUSTIVE if args.exhaustive else RANDOM,
        count=args.random or 0,
        seed=None if args.exhaustive else args.seed,
        strong_only=args.strong_only,
        smd_only=args.smd_only,
        density=args.density,
        dedup=args.dedup,
        max_exhaustive_n=args.max_exhaustive_n,
    )
    try:
        spec.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify_implication(
        spec, args.hypothesis, guard=_guard(args), checkpoint=args.checkpoint, resume=args.resume
    )
    payload = report.to_json(timing=args.timing)
    payload["config"] = _config(args)
    _emit(dumps_report(payload), args.out)
    if args.counterexample_dir and report.tally.counterexamples:
        write_counterexamples(report, args.counterexample_dir)
    found = len(report.tally.counterexamples)
    print(
        f"{report.hypothesis.value}: n={spec.n} satisfying={report.tally.satisfying} counterexamples={found}",
        file=sys.stderr,
    )
    return EXIT_FOUND if found else EXIT_OK


def cmd_family(args) -> int:
    try:
        params = FamilyParams(args.n1, args.n2)
    except DigraphError as exc:
        raise UsageError(str(exc)) from exc
    fam = build_family(params)
    if args.format == "dot":
        text = fam.to_dot()
    else:
        labels = fam.labels()
        roles = " ".join(f"{v}={labels[v]}" for v in range(fam.digraph.n))
        text = format_edge_list(fam.digraph, [f"family n1={args.n1} n2={args.n2}", f"roles {roles}"])
    _emit(text, args.out)
    if args.audit:
        audit = audit_family(params, guard=_guard(args))
        payload = audit.to_json()
        payload["config"] = _config(args)
        if args.audit_out:
            _emit(dumps_report(payload), args.audit_out)
        else:
            sys.stderr.write(dumps_report(payload))
        if not audit.passed:
            return EXIT_FOUND
    return EXIT_OK


def cmd_lemma_test(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    report = lemma_trials(args.trials, args.seed, args.max_n, smd_max_n=min(args.max_n, args.smd_max_n))
    report["config"] = _config(args)
    _emit(dumps_report(report), args.out)
    return EXIT_FOUND if report["violations"] else EXIT_OK


def cmd_export(args) -> int:
    D = read_edge_list(args.input)
    if args.format == "dot":
        text = to_dot(D)
    elif args.format == "json":
        text = dumps_report({"n": D.n, "arcs": [list(a) for a in D.arcs]})
    else:
        text = format_edge_list(D)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supereulerian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def guard_flags(p):
        p.add_argument("--max-n", type=int, default=16, help="decider guard on vertex count")
        p.add_argument("--max-m", type=int, default=64, help="decider guard on arc count")

    p = sub.add_parser("check", help="decide one digraph and evaluate every hypothesis")
    p.add_argument("input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    guard_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="sweep hypothesis => supereulerian over a population")
    p.add_argument("--hypothesis", required=True, choices=[h.value for h in Hypothesis])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--strong-only", action="store_true")
    p.add_argument("--smd-only", action="store_true")
    p.add_argument("--dedup", action="store_true", help="one digraph per isomorphism class")
    p.add_argument("--max-exhaustive-n", type=int, default=5)
    p.add_argument("--checkpoint")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--counterexample-dir")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reruns)")
    p.add_argument("--out")
    guard_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit and audit the sharpness family D(n1, n2)")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--audit-out")
    p.add_argument("--out")
    guard_flags(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("lemma-test", help="randomised trail-lemma checks")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--smd-max-n", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemma_test)

    p = sub.add_parser("export", help="convert an edge-list file")
    p.add_argument("input")
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DigraphError, UsageError, CheckpointError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
