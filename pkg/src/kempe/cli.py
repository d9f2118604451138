"""Command-line interface.

Subcommands: states, classify, astar, search.  Inputs come from the fixture
registry (--fixture) or a graph JSON document (--input).  Identical
invocations produce identical output; worker count only affects wall time.

Exit codes: 0 success, 2 input or usage error, 3 invariant violation
(including method disagreement under --method both), 4 budget truncation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .configs import search_astar
from .errors import (
    BudgetExceededError,
    FixtureDataUnavailableError,
    FixtureNotFoundError,
    KempeError,
    OperationError,
    StructureError,
)
from .fixtures import fixture, fixture_names
from .formats import export_dot, search_report_csv
from .graphs import AGraph, Pair, ParentedAGraph
from .stategraph import astar_member, astar_member_fast, build_state_graph, classify_components

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_TRUNCATED = 4

WORKERS_ENV = "KEMPE_WORKERS"


def _load_input(args):
    if args.fixture:
        return fixture(args.fixture).graph
    from .formats import load_graph_file

    return load_graph_file(args.input)


def _as_agraph(g) -> AGraph:
    if isinstance(g, ParentedAGraph):
        return g.agraph
    if isinstance(g, AGraph):
        return g
    raise OperationError("this command needs an a-graph (boundary labels)")


def _pairs(g, arg: str) -> list[Pair]:
    if arg == "both":
        wanted = [Pair.XY, Pair.UV]
    else:
        wanted = [Pair(arg)]
    return wanted


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


JSON_SCHEMA = "kempe-cli/1"


def _json_dumps(payload) -> str:
    payload = {"schema": JSON_SCHEMA, **payload}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_states(args) -> int:
    g = _load_input(args)
    budget = args.max_states
    sg = build_state_graph(g, max_states=budget)
    if args.format == "dot":
        _emit(args, export_dot(sg))
        return EXIT_OK
    if args.format == "json":
        payload = {
            "command": "states",
            "input": args.fixture or args.input,
            "count": sg.state_count,
            "components": [len(c) for c in sg.components],
        }
        if args.list:
            payload["states"] = [list(s.labels) for s in sg.states]
        _emit(args, _json_dumps(payload))
        return EXIT_OK
    lines = [f"states: {sg.state_count}"]
    lines.append(f"components: {' '.join(str(len(c)) for c in sg.components)}")
    if args.list:
        lines.extend(" ".join(map(str, s.labels)) for s in sg.states)
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    a = _as_agraph(_load_input(args))
    sg = build_state_graph(a, max_states=args.max_states)
    if args.format == "dot":
        _emit(args, export_dot(sg))
        return EXIT_OK
    rows = []
    for pair in _pairs(a, args.pair):
        labels = classify_components(sg, pair)
        for comp, lab in zip(sg.components, labels):
            rows.append({"pair": pair.value, "label": lab.value, "size": len(comp)})
    if args.format == "json":
        _emit(
            args,
            _json_dumps(
                {
                    "command": "classify",
                    "input": args.fixture or args.input,
                    "components": rows,
                }
            ),
        )
        return EXIT_OK
    lines = [f"pair {r['pair']}: {r['label']}:{r['size']}" for r in rows]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _witness_payload(verdict):
    if verdict.witness is None:
        return None
    w = verdict.witness
    out = {}
    if w.state is not None:
        out["state"] = list(w.state.labels)
    if w.component is not None:
        out["component_size"] = len(w.component)
    if w.path is not None:
        out["path"] = list(w.path)
        out["path_colors"] = list(w.path_colors)
    return out


def cmd_astar(args) -> int:
    g = _load_input(args)
    a = _as_agraph(g)
    results = []
    disagreement = False
    sg = None
    if args.method in ("definition", "both"):
        sg = build_state_graph(a, max_states=args.max_states)
    for pair in _pairs(a, args.pair):
        entry = {"pair": pair.value}
        if sg is not None:
            v = astar_member(a, pair, sg=sg)
            entry["definition"] = v.member
            entry["witness"] = _witness_payload(v)
        if args.method in ("fast", "both"):
            v = astar_member_fast(a, pair)
            entry["fast"] = v.member
            if "witness" not in entry or entry["witness"] is None:
                entry["witness"] = _witness_payload(v)
        if args.method == "both" and entry["definition"] != entry["fast"]:
            disagreement = True
        entry["member"] = entry.get("definition", entry.get("fast"))
        results.append(entry)
    if args.format == "json":
        _emit(
            args,
            _json_dumps(
                {
                    "command": "astar",
                    "input": args.fixture or args.input,
                    "method": args.method,
                    "results": results,
                    "methods_agree": not disagreement,
                }
            ),
        )
    else:
        lines = []
        for entry in results:
            verdict = "member" if entry["member"] else "non-member"
            extra = ""
            if args.method == "both":
                extra = " (methods agree)" if not disagreement else " (METHODS DISAGREE)"
            lines.append(f"pair {entry['pair']}: {verdict}{extra}")
            w = entry.get("witness")
            if w:
                if "path" in w:
                    colors = "-".join(str(c + 1) for c in w["path_colors"])
                    path = "-".join(map(str, w["path"]))
                    lines.append(f"  witness state {w['state']} with {colors} path {path}")
                elif "component_size" in w:
                    lines.append(
                        f"  witness mixed component of size {w['component_size']}"
                    )
        _emit(args, "\n".join(lines) + "\n")
    if disagreement:
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_search(args) -> int:
    workers = args.workers or int(os.environ.get(WORKERS_ENV, "1"))
    report = search_astar(
        args.max_order,
        max_seconds_per_cell=args.max_seconds_per_cell,
        workers=workers,
    )
    if args.format == "json":
        payload = {
            "command": "search",
            "max_order": args.max_order,
            "rows": [
                {
                    "m": r.m,
                    "n": r.n,
                    "config_id": r.config_id,
                    "order": r.order,
                    "state_count": r.state_count,
                    "xy_parent_i6c": r.xy_parent_i6c,
                    "uv_parent_i6c": r.uv_parent_i6c,
                    "astar_xy": r.astar_xy,
                    "astar_uv": r.astar_uv,
                }
                for r in report.rows
            ],
            "members": [
                {"m": row.m, "n": row.n, "config_id": row.config_id, "pair": pair.value}
                for row, pair in report.members()
            ],
            "truncated_cells": [
                [c.m, c.n] for c in report.cells if c.truncated
            ],
        }
        _emit(args, _json_dumps(payload))
    else:
        _emit(args, search_report_csv(report, include_timings=not args.no_timings))
    return EXIT_TRUNCATED if report.truncated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kempe",
        description="Kempe-exchange analysis of 4-colorings of near-triangulations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p, need_pair: bool = False):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--fixture", choices=fixture_names(), help="named fixture")
        src.add_argument("--input", help="path to a graph JSON document")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument(
            "--max-states",
            type=int,
            default=None,
            help="abort with exit code 4 beyond this many states",
        )
        if need_pair:
            p.add_argument(
                "--pair", choices=["xy", "uv", "both"], default="both",
                help="which opposite boundary pair to analyze",
            )

    p = sub.add_parser("states", help="count (and optionally list) coloring states")
    add_input_opts(p)
    p.add_argument("--list", action="store_true", help="list every state")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("classify", help="label the Kempe components n / s / n-s")
    add_input_opts(p, need_pair=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("astar", help="decide membership in the A* family")
    add_input_opts(p, need_pair=True)
    p.add_argument(
        "--method", choices=["definition", "fast", "both"], default="both"
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_astar)

    p = sub.add_parser("search", help="sweep conforming configurations for A* members")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument(
        "--max-seconds-per-cell", type=float, default=None,
        help="per-(m,n) generation budget; exceeding it flags truncation",
    )
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--no-timings", action="store_true",
                   help="blank the wall-time column for byte-stable output")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED
    except (FixtureNotFoundError, FixtureDataUnavailableError, OperationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except KempeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
