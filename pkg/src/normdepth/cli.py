"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import betti_hochster, betti_taylor, g_profile
from .complexes import FieldSpec
from .constructions import (
    ConstructionResult,
    cut_vertex_example_graph,
    cut_profile,
    ones_profile_ideal,
    realize_profile,
    staircase_graph,
    step_profile_ideal,
)
from .errors import CapExceeded, NormDepthError
from .graphs import edge_ideal
from .io import ParseError, dumps, graph_to_text, ideal_to_json, load_input
from .suites import SUITES, SuiteOptions
from .sweeps import conjecture_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _field(args) -> FieldSpec:
    return FieldSpec(args.char)


def _load_ideal(path: str):
    ideal, graph = load_input(path)
    if graph is not None:
        ideal = edge_ideal(graph)
    return ideal


def cmd_gprofile(args) -> int:
    ideal = _load_ideal(args.file)
    field = _field(args)
    prof = g_profile(ideal, field)
    payload = {"field": str(field), "ideal": ideal_to_json(ideal), "profile": prof.to_json()}
    if args.json:
        print(dumps(payload))
        return EXIT_OK
    print(f"ideal  {ideal}")
    print(f"field  {field}")
    print(f"nu     {prof.nu}")
    print(f"{'k':>3} {'d_k':>5} {'depth':>6} {'g(k)':>5}")
    for k in range(prof.nu):
        print(f"{k + 1:>3} {prof.dks[k]:>5} {prof.depths[k]:>6} {prof.gs[k]:>5}")
    print(dumps(payload))
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal = _load_ideal(args.file)
    field = _field(args)
    table = betti_taylor(ideal, field) if args.oracle == "taylor" else betti_hochster(ideal, field)
    if not args.json:
        print(table)
    print(dumps({"field": str(field), "method": args.oracle, "betti": table.to_json()}))
    return EXIT_OK


def _bundle(r: ConstructionResult) -> dict:
    out = {
        "provenance": r.provenance,
        "variables": r.variables,
        "ideal": ideal_to_json(r.ideal),
        "predicted": r.predicted.to_json(),
        "graph": r.graph.to_json() if r.graph is not None else None,
    }
    return out


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "thm38":
        r = staircase_graph(args.s, args.m)
    elif kind == "lemma42":
        r = step_profile_ideal(args.s, args.m)
    elif kind == "lemma43":
        r = ones_profile_ideal(args.m)
    elif kind == "thm41":
        try:
            target = [int(x) for x in args.profile.split(",") if x.strip()]
        except ValueError as exc:
            raise ParseError(f"bad --profile: {exc}") from exc
        r = realize_profile(target)
    else:
        g = cut_vertex_example_graph()
        r = ConstructionResult(edge_ideal(g), cut_profile(3), "cut_vertex_example_graph()", g)
    bundle = _bundle(r)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "ideal.json").write_text(json.dumps(bundle["ideal"], indent=1) + "\n")
        (out / "predicted.json").write_text(json.dumps(bundle["predicted"]) + "\n")
        (out / "provenance.txt").write_text(r.provenance + "\n")
        if r.graph is not None:
            (out / "graph.txt").write_text(graph_to_text(r.graph))
    print(dumps(bundle))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all", file=sys.stderr)
        return EXIT_USAGE
    opts = SuiteOptions(args.max_vertices, args.trials, args.seed, _field(args), args.jobs)
    results = [SUITES[n](opts) for n in names]
    passed = all(r.passed for r in results)
    for r in results:
        for c in r.checks:
            print(f"[{'PASS' if c['passed'] else 'FAIL'}] {r.suite}: {c['name']}", file=sys.stderr)
    print(dumps({"passed": passed, "suites": [r.to_json() for r in results]}))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_sweep(args) -> int:
    rep = conjecture_sweep(
        args.max_vertices, args.sample, args.seed, _field(args), args.jobs, args.profiles, args.timing
    )
    print(dumps(rep.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="normdepth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_char(sp):
        sp.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")

    sp = sub.add_parser("gprofile", help="normalized depth profile of an ideal or graph file")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true", help="print only the JSON record")
    add_char(sp)
    sp.set_defaults(func=cmd_gprofile)

    sp = sub.add_parser("betti", help="graded Betti table of S/I")
    sp.add_argument("file")
    sp.add_argument("--oracle", choices=["hochster", "taylor"], default="hochster")
    sp.add_argument("--json", action="store_true")
    add_char(sp)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("construct", help="build an ideal or graph with a prescribed profile")
    sp.add_argument("kind", choices=["thm38", "thm41", "lemma42", "lemma43", "example36"])
    sp.add_argument("--s", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--profile", help="comma-separated non-increasing values")
    sp.add_argument("--out", help="directory for ideal.json, graph.txt, predicted.json, provenance.txt")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    sp.add_argument("--max-vertices", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--jobs", type=int, default=1)
    add_char(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="look for graphs with an increasing profile")
    sp.add_argument("--max-vertices", type=int, required=True)
    sp.add_argument("--sample", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--profiles", action="store_true", help="include every profile in the report")
    sp.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    add_char(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def _check_construct_args(args) -> str | None:
    if args.command != "construct":
        return None
    need = {"thm38": ("s", "m"), "lemma42": ("s", "m"), "lemma43": ("m",), "thm41": ("profile",)}
    missing = [f"--{a}" for a in need.get(args.kind, ()) if getattr(args, a) is None]
    return f"construct {args.kind} needs {' '.join(missing)}" if missing else None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    problem = _check_construct_args(args)
    if problem:
        parser.error(problem)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NormDepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
