"""Command-line interface.

Every verb prints one JSON report on stdout.  Exit status is 0 on success,
1 for domain errors (bad input, unmet preconditions) and 2 for defects
(a guaranteed property failed).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io
from .coloring import wnt_dominating_coloring
from .errors import DefectError, DomainError, GraphFormatError, WntdomError
from .generators import FAMILIES, FIXTURE_NAMES, GenSpec, fixture
from .oracle import OracleBudget, exhaustive_reduction_search, minimum_dominating_set, verify_dominating_set
from .pipeline import bound, dominate
from .plane_graph import PlaneGraph, blocks
from .reduction import apply_reduction, find_reduction, qualifying_blocks
from .wnt import is_near_triangulation, is_triangulation, is_wnt

EXIT_OK, EXIT_DOMAIN, EXIT_DEFECT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are input errors, not defects
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _parse_set(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise GraphFormatError(f"--set must be comma-separated integers, got {text!r}") from None


def _graph(args) -> PlaneGraph:
    if args.input:
        return io.load(args.input)
    if args.family == "fixture":
        if not args.name:
            raise GraphFormatError("--family fixture needs --name")
        return fixture(args.name)
    if args.family:
        try:
            return GenSpec(args.family, args.n, args.seed, args.steps).generate()
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    raise GraphFormatError("give --input <path> or --family/--n/--seed")


def _budget(args) -> OracleBudget:
    return OracleBudget(max_vertices=args.budget_n or 25)


# -- verbs --------------------------------------------------------------------


def cmd_gen(args, g: PlaneGraph) -> dict | str:
    if args.format == "dot":
        return io.export_dot(g, external=True)
    return json.loads(io.dumps(g))


def cmd_dominate(args, g: PlaneGraph) -> dict:
    return dominate(g).to_json()


def cmd_reduce(args, g: PlaneGraph) -> dict:
    if not is_wnt(g):
        from .errors import NotWnt

        raise NotWnt("reduce expects a weak near-triangulation")
    steps = []
    h = g
    while True:
        step = find_reduction(h)
        if step is None:
            break
        steps.append(step)
        h = apply_reduction(h, step)
    out = {"steps": len(steps), "q": len(h), "residual": json.loads(io.dumps(h))}
    if args.trace:
        out["trace"] = [s.to_json() for s in steps]
    return out


def cmd_color(args, g: PlaneGraph) -> dict:
    return wnt_dominating_coloring(g).to_json()


def cmd_verify(args, g: PlaneGraph) -> dict:
    if args.set is None:
        raise GraphFormatError("verify needs --set <ids>")
    return {"dominates": verify_dominating_set(g, _parse_set(args.set))}


def cmd_oracle(args, g: PlaneGraph) -> dict:
    budget = _budget(args)
    if args.exact:
        s = minimum_dominating_set(g, budget)
        return {"gamma": len(s), "set": sorted(s)}
    if args.search_reduction:
        step = exhaustive_reduction_search(g, budget)
        return {"step": None if step is None else {"center": step.center, "removed": sorted(step.removed)}}
    if args.verify is not None:
        return {"dominates": verify_dominating_set(g, _parse_set(args.verify))}
    raise GraphFormatError("oracle needs one of --exact, --search-reduction, --verify <ids>")


def cmd_stats(args, g: PlaneGraph) -> dict:
    wnt = is_wnt(g)
    dec = blocks(g)
    out = {
        "n": len(g),
        "m": g.num_edges(),
        "faces": len(g.face_list),
        "external": sorted(g.external_vertices()),
        "components": len(g.components()),
        "blocks": [sorted(b.vertices) for b in dec.blocks],
        "cutvertices": sorted(dec.cutvertices),
        "is_wnt": wnt,
        "is_triangulation": is_triangulation(g),
        "is_near_triangulation": is_near_triangulation(g),
        "bound": bound(len(g)),
    }
    if wnt:
        out["qualifying_blocks"] = [sorted(b.vertices) for b in qualifying_blocks(g)]
    return out


VERBS = {
    "gen": cmd_gen,
    "dominate": cmd_dominate,
    "reduce": cmd_reduce,
    "color": cmd_color,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wntdom", description="Dominating sets of plane triangulations via WNT reductions.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--input", help="graph JSON file")
        sp.add_argument("--dir", help="process every *.json file in a directory")
        sp.add_argument("--family", choices=FAMILIES, help="generate the input instead of reading it")
        sp.add_argument("--name", choices=FIXTURE_NAMES, help="fixture name for --family fixture")
        sp.add_argument("--n", type=int, default=0, help="size (rim size for wheel, k for fan_strip)")
        sp.add_argument("--seed", type=lambda s: int(s, 0), default=0)
        sp.add_argument("--steps", type=int, default=0, help="flip attempts for flipwalk")
        sp.add_argument("-v", "--verbose", action="store_true")

    for verb in VERBS:
        sp = sub.add_parser(verb)
        common(sp)
        if verb == "gen":
            sp.add_argument("--format", choices=("json", "dot"), default="json")
        if verb == "reduce":
            sp.add_argument("--trace", action="store_true", help="include every reduction step")
        if verb == "verify":
            sp.add_argument("--set", help="comma-separated vertex ids")
        if verb == "oracle":
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--exact", action="store_true")
            g.add_argument("--search-reduction", action="store_true")
            g.add_argument("--verify", metavar="IDS")
            sp.add_argument("--budget-n", type=int, help="maximum vertex count for the oracle")
    return p


def _run_one(args, g_loader) -> tuple[int, object]:
    try:
        g = g_loader()
        return EXIT_OK, VERBS[args.verb](args, g)
    except DefectError as exc:
        return EXIT_DEFECT, {"error": type(exc).__name__, "message": str(exc)}
    except DomainError as exc:
        return EXIT_DOMAIN, {"error": type(exc).__name__, "message": str(exc)}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.dir:
        results, code = [], EXIT_OK
        for path in sorted(Path(args.dir).glob("*.json")):
            rc, rep = _run_one(args, lambda p=path: io.load(p))
            code = max(code, rc)
            results.append({"file": path.name, "exit": rc, "report": rep})
        print(json.dumps({"results": results}, sort_keys=True))
        return code
    rc, rep = _run_one(args, lambda: _graph(args))
    if isinstance(rep, str):
        sys.stdout.write(rep)
    else:
        print(json.dumps(rep, sort_keys=True))
    if rc != EXIT_OK:
        print(f"wntdom: {rep['error']}: {rep['message']}", file=sys.stderr)
    return rc


def entry() -> None:
    try:
        sys.exit(main())
    except WntdomError as exc:  # pragma: no cover - main already maps these
        print(f"wntdom: {exc}", file=sys.stderr)
        sys.exit(EXIT_DEFECT if isinstance(exc, DefectError) else EXIT_DOMAIN)
