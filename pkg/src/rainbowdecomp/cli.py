"""Command-line front end.

Exit codes:
  0  success
  1  verify-paper: at least one claim failed
  2  graph file could not be parsed
  3  hypothesis of the requested construction does not hold
  4  a constructor produced an invalid certificate (internal error)
  5  search budget exhausted
  6  parameters outside the supported range
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .claims import run_claims
from .constructors import (
    construct_different_centers,
    construct_identical_trees,
    construct_same_center,
    construct_two_centers,
    two_center_config,
)
from .errors import CountUnavailable, GraphFormatError, HypothesisViolation, InstanceTooLarge, OutOfSupportedRange
from .generate import KINDS, generate, star_graph
from .graph import SHAPES, StarConfiguration, as_star_configuration, decomposition_problems, validate_graph
from .io import GraphDocument, collection_to_dict, collection_to_dot, dumps_graph, load_graph, parse_graph
from .latin import LatinSquare, count_omega, omega_via_permanent
from .search import DEFAULT_BUDGET, MODES, search_decompositions

EXIT_OK = 0
EXIT_CLAIMS_FAILED = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_CERTIFICATE = 4
EXIT_BUDGET = 5
EXIT_RANGE = 6

METHODS = ("auto", "different-centers", "same-center", "two-centers", "identical-trees")
ROUTES = ("reduced", "permanent", "search")
MAX_SEARCH_OMEGA_N = 6


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(source: str) -> GraphDocument:
    """Read a graph file, or a bundled fixture when ``source`` names one."""
    path = Path(source)
    try:
        if not path.exists() and source in fixtures.NAMES:
            return parse_graph(fixtures.fixture_text(source))
        return load_graph(path)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {source}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise CliError(EXIT_PARSE, f"{source}: {exc}") from None


def _parse_colors(text: str, doc: GraphDocument) -> list[int]:
    out = []
    names = list(doc.color_names or ())
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if tok.lstrip("-").isdigit():
            out.append(int(tok))
        elif tok in names:
            out.append(names.index(tok))
        else:
            raise CliError(EXIT_HYPOTHESIS, f"unknown color {tok!r} in --order")
    return out


def _parse_square(text: str) -> LatinSquare:
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
        return LatinSquare(tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise CliError(EXIT_HYPOTHESIS, f"--square: {exc}") from None


def cmd_validate(args) -> int:
    doc = _load(args.graph)
    report = validate_graph(doc.graph)
    out = report.to_dict()
    if doc.color_names:
        for cls in out["classes"]:
            cls["name"] = doc.color_names[cls["color"]]
    _emit(out)
    return EXIT_OK


def _auto_method(cfg: StarConfiguration, target: str) -> str:
    """Same center, then distinct centers, then (for trees only) two centers."""
    hubs = set(cfg.centers)
    if len(hubs) == 1:
        return "same-center"
    if len(hubs) == len(cfg.centers):
        return "different-centers"
    if target == "tree" and len(hubs) == 2:
        return "two-centers"
    reason = (
        "rainbow stars exist iff all stars share one center or all centers differ; "
        f"here {len(cfg.centers)} stars sit on {len(hubs)} centers"
    )
    if target == "star" and len(hubs) == 2:
        reason += " (use --target tree for the two-center tree construction)"
    raise HypothesisViolation(f"no construction applies: {reason}")


def cmd_construct(args) -> int:
    doc = _load(args.graph)
    g = doc.graph
    method = args.method
    try:
        if method == "identical-trees":
            square = _parse_square(args.square) if args.square else LatinSquare.cyclic(g.vertex_count - 1)
            coll = construct_identical_trees(g, square)
        else:
            cfg = as_star_configuration(g)
            if method == "auto":
                method = _auto_method(cfg, args.target)
            if method == "same-center":
                coll = construct_same_center(cfg)
            elif method == "different-centers":
                coll = construct_different_centers(cfg)
            else:
                order_k = order_j = None
                if args.order:
                    left, sep, right = args.order.partition(":")
                    if not sep:
                        raise CliError(EXIT_HYPOTHESIS, "--order expects COLORS_K:COLORS_J")
                    order_k, order_j = _parse_colors(left, doc), _parse_colors(right, doc)
                coll = construct_two_centers(two_center_config(cfg, order_k, order_j))
    except HypothesisViolation as exc:
        raise CliError(EXIT_HYPOTHESIS, f"hypothesis violated ({method}): {exc}") from None
    problems = decomposition_problems(g, coll)
    if problems:
        raise CliError(EXIT_CERTIFICATE, "internal certificate failure: " + "; ".join(problems))
    out = {"method": method, **collection_to_dict(doc, coll)}
    _emit(out)
    if args.dot:
        Path(args.dot).write_text(collection_to_dot(doc, coll))
    return EXIT_OK


def cmd_search(args) -> int:
    doc = _load(args.graph)
    try:
        report = search_decompositions(doc.graph, args.shape, args.mode, args.limit, args.budget)
    except HypothesisViolation as exc:
        raise CliError(EXIT_HYPOTHESIS, f"search precondition violated: {exc}") from None
    except InstanceTooLarge as exc:
        if exc.partial is not None:
            _emit(exc.partial.to_dict())
        raise CliError(EXIT_BUDGET, str(exc)) from None
    _emit(report.to_dict())
    if args.dot and report.certificates:
        Path(args.dot).write_text(collection_to_dot(doc, report.certificates[0]))
    if report.budget_exhausted:
        print(f"search budget of {args.budget} nodes exhausted", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def omega_by_search(n: int, budget: int = DEFAULT_BUDGET) -> int:
    if not 2 <= n <= MAX_SEARCH_OMEGA_N:
        raise OutOfSupportedRange(f"search route supports n=2..{MAX_SEARCH_OMEGA_N}, got {n}")
    return search_decompositions(star_graph(n, [0] * (n - 1)), "star", "count", budget=budget).count


def cmd_count_omega(args) -> int:
    n = args.n
    try:
        if args.route == "reduced":
            value = count_omega(n)
        elif args.route == "permanent":
            value = omega_via_permanent(n, allow_long=args.long)
        else:
            value = omega_by_search(n, args.budget)
    except (OutOfSupportedRange, CountUnavailable) as exc:
        raise CliError(EXIT_RANGE, str(exc)) from None
    except InstanceTooLarge as exc:
        raise CliError(EXIT_BUDGET, str(exc)) from None
    print(value)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    rows = run_claims(fixtures.catalog())
    width = max(len(r[0]) for r in rows)
    for cid, desc, ok in rows:
        print(f"{'PASS' if ok else 'FAIL'}  {cid:<{width}}  {desc}")
    failed = [cid for cid, _, ok in rows if not ok]
    print(f"{len(rows) - len(failed)}/{len(rows)} claims passed")
    if failed:
        print("failed: " + ", ".join(failed))
        return EXIT_CLAIMS_FAILED
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(args.kind, args.n, args.seed)
    except OutOfSupportedRange as exc:
        raise CliError(EXIT_RANGE, str(exc)) from None
    sys.stdout.write(dumps_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowdecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="report connectivity, color count and class shapes")
    p.add_argument("graph", help="graph file or bundled fixture name")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("construct", help="build a certified rainbow decomposition")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument(
        "--target", choices=("star", "tree"), default="star", help="shape auto aims for; tree enables two-centers"
    )
    p.add_argument("--order", help="two-centers color order, e.g. red,blue:green,yellow")
    p.add_argument("--square", help="identical-trees Latin square, rows split by ';', e.g. 0,1;1,0")
    p.add_argument("--dot", metavar="PATH", help="also write the decomposition as DOT")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive search for rainbow decompositions")
    p.add_argument("graph")
    p.add_argument("--shape", choices=SHAPES, default="tree")
    p.add_argument("--mode", choices=MODES, default="count")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node cap")
    p.add_argument("--dot", metavar="PATH", help="write the first certificate as DOT")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("count-omega", help="number of rainbow star collections for the same-center graph")
    p.add_argument("n", type=int)
    p.add_argument("--route", choices=ROUTES, default="reduced")
    p.add_argument("--long", action="store_true", help="allow the side-5 permanent sum (slow)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_count_omega)

    p = sub.add_parser("verify-paper", help="replay every worked example and print PASS/FAIL")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("gen", help="emit a random configuration of the given kind")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
