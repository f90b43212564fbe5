"""Command-line front end.

Exit codes: 0 on success, 1 on I/O or parse errors (bad files), 2 on domain
errors (total conflict, or a false answer under --assert).  Output is
deterministic byte-for-byte for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .combine import combine_all, conflict_mass, parse_rule
from .core import BeliefStructure, FocalSet
from .entailment import flow_entails, interval_contained, partition_entails
from .errors import EvicalcError
from .kb import KnowledgeBase, infer, parse_kb, typical_summary
from .monotonicity import pairwise_survey, sweep, sweep_csv


class _LoadFailure(Exception):
    """An input file could not be read or parsed; exits with status 1."""

    def __init__(self, path: str, cause: Exception):
        self.path = path
        self.cause = cause
        super().__init__(f"{path}: {type(cause).__name__}: {cause}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _LoadFailure(path, exc) from exc


def _load_structure(path: str) -> BeliefStructure:
    text = _read(path)
    try:
        return io.loads_structure(text)
    except Exception as exc:
        raise _LoadFailure(path, exc) from exc


def _load_kb(path: str) -> KnowledgeBase:
    text = _read(path)
    try:
        return parse_kb(text)
    except Exception as exc:
        raise _LoadFailure(path, exc) from exc


def _load_any(path: str) -> BeliefStructure | KnowledgeBase:
    text = _read(path)
    try:
        if io.sniff_kind(text) == "structure":
            return io.loads_structure(text)
        return parse_kb(text)
    except Exception as exc:
        raise _LoadFailure(path, exc) from exc


def _parse_set(value: str, frame) -> FocalSet:
    names = [part.strip() for part in value.split(",") if part.strip()]
    return frame.subset(names)


def _print_interval(m: BeliefStructure, target: FocalSet) -> None:
    interval = m.interval(target)
    print(f"set: {target.label()}")
    print(f"bel = {io.format_mass(interval.lower)}")
    print(f"pl = {io.format_mass(interval.upper)}")
    if m.is_subnormal:
        print("range = undefined (subnormal)")
    else:
        print(f"range = {io.format_mass(interval.width)}")


def _cmd_validate(args) -> int:
    m = _load_structure(args.path)
    sys.stdout.write(io.format_structure(m))
    return 0


def _cmd_query(args) -> int:
    rule = parse_rule(args.rule)
    loaded = _load_any(args.path)
    if isinstance(loaded, KnowledgeBase):
        m = infer(loaded, rule)
        print(f"variable: {loaded.variable}")
        print(f"rule: {rule}")
    else:
        m = loaded
    _print_interval(m, _parse_set(args.set, m.frame))
    return 0


def _cmd_combine(args) -> int:
    rule = parse_rule(args.rule)
    structures = [_load_structure(path) for path in args.paths]
    result = combine_all(structures, rule)
    print(f"rule: {rule}")
    if len(structures) == 2:
        conflict = conflict_mass(structures[0], structures[1])
        print(f"conflict: {io.format_mass(conflict)}")
    sys.stdout.write(io.format_structure(result))
    if args.out:
        _save(result, args.out)
    return 0


def _save(m: BeliefStructure, path: str) -> None:
    try:
        io.save_structure(m, path)
    except OSError as exc:
        raise _LoadFailure(path, exc) from exc


def _cmd_entails(args) -> int:
    m1 = _load_structure(args.path1)
    m2 = _load_structure(args.path2)
    print(f"mode: {args.mode}")
    if args.mode == "interval":
        contained, violator = interval_contained(m1, m2)
        print(f"contained: {'true' if contained else 'false'}")
        if violator is not None:
            print(f"violating set: {violator.label()}")
        verdict = contained
    else:
        check = flow_entails if args.mode == "flow" else partition_entails
        witness = check(m1, m2)
        print(f"entails: {'true' if witness is not None else 'false'}")
        if witness is not None:
            sys.stdout.write(io.format_witness(witness))
        verdict = witness is not None
    if args.assert_ and not verdict:
        return 2
    return 0


def _cmd_monotone(args) -> int:
    rules = [parse_rule(name) for name in args.rules.split(",")]
    m1 = _load_structure(args.path1)
    m2 = _load_structure(args.path2)
    reports = pairwise_survey(m1, m2, rules)
    print(json.dumps([io.report_to_obj(r) for r in reports], indent=2))
    return 0


def _cmd_kb_infer(args) -> int:
    rule = parse_rule(args.rule)
    kb = _load_kb(args.path)
    print(f"variable: {kb.variable}")
    print(f"rule: {rule}")
    if args.weaken_to is not None:
        target = _parse_set(args.weaken_to, kb.frame)
        print(f"weaken to: {target.label()}")
        result = typical_summary(kb, rule, target)
    else:
        result = infer(kb, rule)
    sys.stdout.write(io.format_structure(result))
    if args.out:
        _save(result, args.out)
    return 0


def _cmd_kb_query(args) -> int:
    rule = parse_rule(args.rule)
    kb = _load_kb(args.path)
    print(f"variable: {kb.variable}")
    print(f"rule: {rule}")
    m = infer(kb, rule)
    _print_interval(m, _parse_set(args.set, kb.frame))
    return 0


def _cmd_sweep(args) -> int:
    rule = parse_rule(args.rule)
    alphas = [part.strip() for part in args.alphas.split(",")]
    betas = [part.strip() for part in args.betas.split(",")]
    rows = sweep(alphas, betas, disjoint=not args.overlap, rule=rule)
    text = sweep_csv(rows)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise _LoadFailure(args.out, exc) from exc
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evicalc",
        description="Exact-arithmetic belief structures: combination, "
                    "entailment, monotonicity analysis, and default "
                    "knowledge bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check and display a stored "
                                        "belief structure")
    p.add_argument("path")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("query", help="belief/plausibility interval of a set")
    p.add_argument("path", help="belief-structure JSON or knowledge-base "
                                "text file")
    p.add_argument("--set", required=True,
                   help="comma-separated atom names")
    p.add_argument("--rule", default="dempster",
                   help="combination rule (knowledge-base input only)")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("combine", help="combine stored belief structures")
    p.add_argument("paths", nargs="+")
    p.add_argument("--rule", required=True)
    p.add_argument("-o", "--out", help="write the result as JSON")
    p.set_defaults(func=_cmd_combine)

    p = sub.add_parser("entails", help="does the first structure entail "
                                       "the second?")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--mode", choices=["flow", "partition", "interval"],
                   default="flow")
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 2 when the answer is no")
    p.set_defaults(func=_cmd_entails)

    p = sub.add_parser("monotone", help="monotonicity reports for a pair "
                                        "under several rules")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--rules", required=True,
                   help="comma-separated rule names")
    p.set_defaults(func=_cmd_monotone)

    p = sub.add_parser("kb-infer", help="combine a knowledge base's "
                                        "statements")
    p.add_argument("path")
    p.add_argument("--rule", default="dempster")
    p.add_argument("--weaken-to", metavar="SET",
                   help="summarize the result as 'typically SET'")
    p.add_argument("-o", "--out", help="write the result as JSON")
    p.set_defaults(func=_cmd_kb_infer)

    p = sub.add_parser("kb-query", help="probability interval a knowledge "
                                        "base assigns to a set")
    p.add_argument("path")
    p.add_argument("--set", required=True)
    p.add_argument("--rule", default="dempster")
    p.set_defaults(func=_cmd_kb_query)

    p = sub.add_parser("sweep", help="grid study of the two-focal family")
    p.add_argument("--alphas", required=True,
                   help="comma-separated strengths for the first structure")
    p.add_argument("--betas", required=True,
                   help="comma-separated strengths for the second structure")
    p.add_argument("--overlap", action="store_true",
                   help="use the overlapping family instead of the "
                        "disjoint one")
    p.add_argument("--rule", required=True)
    p.add_argument("-o", "--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _LoadFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EvicalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # bad rule names and similar usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
