"""Command-line surface.

Exit codes, shared by every subcommand:

  0  success; all checked properties hold
  1  a violation, counterexample, or negative result was found
  2  usage error or invalid input

Subcommands: check, closure, classify, count, infer-lines, verify,
enumerate, fixtures.  All output is deterministic for fixed inputs and
seeds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures as fixture_corpus
from .classify import summarize
from .closure import ClosureMode, closure
from .counting import count_k_fuzzy_line_labelings, count_k_fuzzy_point_configs, infer_line_count
from .documents import load_space, serialize_space
from .enumerate import (
    DEFAULT_LABELING_CAP,
    _clause_failures,
    census,
)
from .errors import FlsError, NoExactSolutionError
from .lattice import ChainLattice
from .space import ALL_AXIOMS, DEFAULT_AXIOMS, parse_axiom_set
from .theorems import check_classical_dbe, check_generalized_dbe, render_verdict


def _add_axioms_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--axioms",
        default="a1a2a3",
        metavar="a1a2a3|a1a2a3a4",
        help="axiom set to validate against (default: a1a2a3)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fls",
        description="verification and enumeration workbench for fuzzy linear spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a space document against the axioms")
    p.add_argument("file")
    _add_axioms_option(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("closure", help="closure of a point set")
    p.add_argument("file")
    p.add_argument("--set", required=True, metavar="x,y[,z...]", dest="points")
    p.add_argument("--mode", choices=["exists", "forall"], default="exists")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="fuzzy degrees of every point and line")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="exact labeling counts")
    count_sub = p.add_subparsers(dest="what", required=True)
    c = count_sub.add_parser("lines", help="labelings of one k-point support")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c = count_sub.add_parser("points", help="joint labelings of several supports")
    c.add_argument("--supports", required=True, metavar="v1,v2,...")
    c.add_argument("--n", type=int, required=True)

    p = sub.add_parser("infer-lines", help="recover the line count from m = (n+1)^(b*v)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="theorem checkers")
    verify_sub = p.add_subparsers(dest="theorem", required=True)
    for name, blurb in (
        ("dbe", "crisp line-count theorem"),
        ("gdbe", "generalized, lattice-valued form"),
    ):
        vp = verify_sub.add_parser(name, help=blurb)
        vp.add_argument("file")
        if name == "gdbe":
            _add_axioms_option(vp)
        vp.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="census of skeleton classes on v points")
    p.add_argument("--points", type=int, required=True, metavar="V")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--nontrivial", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_LABELING_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clause", choices=["c1", "c2", "c3", "all"], default=None)
    _add_axioms_option(p)
    p.add_argument("--out", metavar="census.json")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("fixtures", help="write the fixture corpus as JSON files")
    p.add_argument("--out", required=True, metavar="DIR")

    return parser


def _cmd_check(args) -> int:
    space = load_space(args.file)
    report = space.validate(parse_axiom_set(args.axioms))
    if args.json:
        doc = [
            {"axiom": c.axiom.value, "passed": c.passed, "witness": c.witness}
            for c in report.checks
        ]
        print(json.dumps(doc, indent=2))
    else:
        for c in report.checks:
            line = f"{c.axiom.value}: {'pass' if c.passed else 'FAIL'}"
            if c.witness:
                line += f"  [{c.witness}]"
            print(line)
    return 0 if report.ok else 1


def _cmd_closure(args) -> int:
    space = load_space(args.file)
    names = [t for t in args.points.split(",") if t]
    indices = [space.point_index(name) for name in names]
    mode = ClosureMode(args.mode)
    result = closure(space, indices, mode)
    out = sorted(space.point_names[i] for i in result)
    if args.json:
        print(json.dumps({"closure": out}))
    else:
        print(",".join(out))
    return 0


def _cmd_classify(args) -> int:
    space = load_space(args.file)
    space.validate(DEFAULT_AXIOMS).require("classification")
    summary = summarize(space)
    if args.json:
        print(json.dumps(summary.to_dict(), indent=2))
    else:
        print("point degrees:")
        for name, deg in summary.per_point_degree.items():
            print(f"  {name}: {deg}")
        print("line degrees:")
        for name, deg in summary.per_line_degree.items():
            print(f"  {name}: {deg}")
        print(f"max point k: {summary.max_point_k}")
        print(f"max line k: {summary.max_line_k}")
    return 0


def _cmd_count(args) -> int:
    lattice = ChainLattice(args.n)
    if args.what == "lines":
        print(count_k_fuzzy_line_labelings(args.k, lattice))
    else:
        sizes = [int(t) for t in args.supports.split(",") if t]
        print(count_k_fuzzy_point_configs(sizes, lattice))
    return 0


def _cmd_infer_lines(args) -> int:
    print(infer_line_count(args.m, args.v, ChainLattice(args.n)))
    return 0


def _cmd_verify(args) -> int:
    space = load_space(args.file)
    if args.theorem == "dbe":
        verdict = check_classical_dbe(space)
        holds = verdict.classical_holds
    else:
        verdict = check_generalized_dbe(space, parse_axiom_set(args.axioms))
        holds = verdict.generalized_holds
    print(render_verdict(verdict, "json" if args.json else "text"))
    return 0 if holds else 1


def _cmd_enumerate(args) -> int:
    result = census(
        args.points,
        ChainLattice(args.n),
        nontrivial_only=args.nontrivial,
        cap=args.cap,
        seed=args.seed,
        axioms=parse_axiom_set(args.axioms),
        workers=args.workers,
    )
    text = result.to_json()
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if args.clause is None:
        return 0
    found = 0
    for entry in result.entries:
        if entry.verdict is None:
            continue
        for name, witness in _clause_failures(entry.verdict, args.clause):
            found += 1
            print(f"counterexample ({name}): {witness}", file=sys.stderr)
    return 1 if found else 0


def _cmd_fixtures(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    for name, build in fixture_corpus.FIXTURES.items():
        path = os.path.join(args.out, f"{name}.json")
        with open(path, "w") as handle:
            handle.write(serialize_space(build()))
        print(path)
    return 0


_HANDLERS = {
    "check": _cmd_check,
    "closure": _cmd_closure,
    "classify": _cmd_classify,
    "count": _cmd_count,
    "infer-lines": _cmd_infer_lines,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "fixtures": _cmd_fixtures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except NoExactSolutionError as exc:
        print(f"no exact solution: {exc}", file=sys.stderr)
        return 1
    except FlsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
