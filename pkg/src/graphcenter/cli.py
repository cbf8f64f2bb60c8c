"""Command-line interface.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage, parse or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .constructions import (
    LabeledGraph,
    Prescription,
    attach_paths_uniform,
    fig2_gadget,
    fig3_gadget,
    hedetniemi,
    join_solution,
    single_center_template,
    substitute_center,
    theorem4_build,
)
from .errors import GraphCenterError
from .formats import (
    FORMATS,
    emit_graph_output,
    format_for_path,
    parse_graph_input,
    to_graph6,
)
from .graph import Graph, complete_graph, metric_profile
from .search import Mode, SearchQuery, find_single_center_graphs
from .verification import verify_prescription

CONSTRUCTIONS = ("hedetniemi", "fig2", "fig3", "prop2", "lemma3", "theorem4", "join")
RECIPE_SUFFIX = ".recipe.json"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_input(path: str) -> Graph:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_graph_input(data)


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _expect(name: str, given: Optional[int], value: int, construction: str) -> None:
    if given is not None and given != value:
        raise UsageError(f"{construction} gives {name}={value}, but --{name} {given} was requested")


def _need(value: Optional[int], flag: str, construction: str) -> int:
    if value is None:
        raise UsageError(f"{construction} needs --{flag}")
    return value


def _build(args: argparse.Namespace) -> LabeledGraph:
    kind = args.construction
    h = _read_input(args.h) if args.h else None
    if kind == "hedetniemi":
        r = _need(args.r, "r", kind)
        _expect("d", args.d, 2 * r, kind)
        return hedetniemi(h or complete_graph(1), r)
    if kind in ("fig2", "fig3"):
        r = _need(args.r, "r", kind)
        gadget = fig2_gadget(r) if kind == "fig2" else fig3_gadget(r)
        _expect("d", args.d, gadget.recipe.d, kind)
        return substitute_center(gadget, h) if h is not None else gadget
    if kind == "prop2":
        if h is None:
            raise UsageError("prop2 needs --h (a self-centered graph)")
        prof = metric_profile(h)
        z = prof.radius
        t = args.t
        if t is None:
            r = _need(args.r, "r or --t", kind)
            t = r - z + 1
        out = attach_paths_uniform(h, t)
        _expect("r", args.r, out.recipe.r, kind)
        _expect("d", args.d, out.recipe.d, kind)
        return out
    if kind == "lemma3":
        if h is not None:
            raise UsageError("lemma3 builds a single-center graph; use theorem4 to install --h")
        return single_center_template(_need(args.r, "r", kind), _need(args.d, "d", kind))
    if kind == "theorem4":
        p = Prescription(_need(args.r, "r", kind), _need(args.d, "d", kind), h or complete_graph(1))
        return theorem4_build(p)
    if kind == "join":
        if not args.y:
            raise UsageError("join needs --y (the graph joined to the clique)")
        _expect("r", args.r, 1, kind)
        _expect("d", args.d, 2, kind)
        return join_solution(_need(args.t, "t", kind), _read_input(args.y))
    raise UsageError(f"unknown construction {kind!r}")


def cmd_build(args: argparse.Namespace) -> int:
    out = _build(args)
    fmt = args.format or format_for_path(args.output)
    _write_output(emit_graph_output(out.graph, fmt), args.output)
    sidecar = {
        "recipe": out.recipe.to_dict(),
        "center_image": sorted(out.center_image),
        "order": out.graph.order,
        "graph6": to_graph6(out.graph),
    }
    Path(args.output + RECIPE_SUFFIX).write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    prof = metric_profile(_read_input(args.input))
    if args.json:
        print(json.dumps({
            "radius": prof.radius,
            "diameter": prof.diameter,
            "center_vertices": prof.sorted_center,
        }))
    else:
        center = ",".join(map(str, prof.sorted_center))
        print(f"radius={prof.radius} diameter={prof.diameter} center=[{center}]")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_input(args.input)
    p = Prescription(args.r, args.d, _read_input(args.h))
    image = None
    recipe_path = args.recipe
    if recipe_path is None and args.input != "-":
        candidate = Path(args.input + RECIPE_SUFFIX)
        if candidate.exists():
            recipe_path = str(candidate)
    if recipe_path is not None:
        try:
            image = json.loads(Path(recipe_path).read_text())["center_image"]
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad recipe sidecar {recipe_path}: {exc}") from None
    rep = verify_prescription(g, p, expected_center_image=image)
    print(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    q = SearchQuery(args.r, args.d, args.max_order, Mode(args.mode), args.corpus)
    res = find_single_center_graphs(q, workers=args.workers)
    print(json.dumps(res.to_dict()) if args.json else res.to_text())
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    g = _read_input(args.input)
    _write_output(emit_graph_output(g, args.to), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcenter",
        description="Build and check graphs with prescribed radius, diameter and center.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a graph")
    b.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    b.add_argument("--r", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--t", type=int, help="path order (prop2) or clique size (join)")
    b.add_argument("--h", metavar="H-FILE", help="center graph to install (graph6 or edge list)")
    b.add_argument("--y", metavar="Y-FILE", help="graph joined to K_t (join only)")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--format", choices=FORMATS, help="output format (default: from the suffix)")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="print radius, diameter and center")
    a.add_argument("input")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check a graph against (r, d, H)")
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--h", metavar="H-FILE", required=True)
    v.add_argument("--recipe", help="sidecar JSON with the installed center image "
                                    "(default: INPUT.recipe.json when present)")
    v.add_argument("--json", action="store_true")
    v.add_argument("input")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive search for single-center graphs")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.FIRST_MINIMAL.value)
    s.add_argument("--corpus", help="graph6 file supplying orders 9 and 10")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("convert", help="transcode between graph formats")
    c.add_argument("--to", required=True, choices=FORMATS)
    c.add_argument("-o", "--output")
    c.add_argument("input")
    c.set_defaults(func=cmd_convert)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphCenterError, UsageError, OSError) as exc:
        print(f"graphcenter: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
