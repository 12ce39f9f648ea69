"""Command-line interface.

Exit codes: 0 success or true, 1 verified false, 2 input error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import basis as _basis
from .graph import EmptySelection, UnknownVertex, ValidationError
from .io import (
    DocumentError,
    graph_to_document,
    load_graph,
    parse_int,
    parse_spline,
    spline_to_document,
    trace_to_document,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    IntegerLattice,
    ZeroLabel,
    spline_lattice_enumerate,
    spline_lattice_kernel,
)
from .reduction import reduce
from .splines import LengthMismatch, extend_from_subgraph, find_violation, project

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

ORIENTATION_NOTE = (
    "# splines are listed as (f_v1, ..., f_vn); "
    "in column notation v1 is the bottom entry"
)


class InputError(Exception):
    pass


def _emit(args, machine: dict, human: Sequence[str]) -> None:
    if args.format == "machine":
        json.dump(machine, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in human:
            print(line)


def _fmt(f: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in f) + ")"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(header)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return [line(header)] + [line(r) for r in rows]


def _spline_arg(values: Sequence[str]) -> tuple:
    try:
        return parse_spline(values)
    except DocumentError as exc:
        raise InputError(str(exc)) from exc


def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    f = _spline_arg(args.spline)
    try:
        bad = find_violation(G, f)
    except LengthMismatch as exc:
        raise InputError(str(exc)) from exc
    if bad is None:
        _emit(args, {"ok": True}, ["ok"])
        return EXIT_OK
    vid = G.ids[bad.index] if bad.kind == "vertex" else None
    doc = {"ok": False, "violation": {"kind": bad.kind, "index": bad.index, "message": bad.message}}
    if vid is not None:
        doc["violation"]["vertex"] = vid
    _emit(args, doc, [f"violation: {bad.message}"])
    return EXIT_FALSE


def cmd_basis(args) -> int:
    G = load_graph(args.graph)
    seq = _basis.reduction_sequence(G)
    B = _basis.flow_up_basis(G, seq)
    doc = {
        "vertices": list(G.ids),
        "rank": B.rank,
        "leading_terms": [str(L) for L in B.leading_terms],
        "basis": [{"index": i, "spline": spline_to_document(f)} for i, f in zip(B.indices, B.elements)],
    }
    if B.degenerate:
        doc["trivial_kernels"] = list(B.degenerate)
    human = [ORIENTATION_NOTE]
    human += _table(
        ["i", "L_i", "F(i)"],
        [[str(i), str(B.leading_terms[i - 1]), _fmt(f)] for i, f in zip(B.indices, B.elements)],
    )
    if B.degenerate:
        human.append("# trivial kernel (L_i = 0) at i = " + ", ".join(map(str, B.degenerate)))
    if args.trace:
        doc["trace"] = [trace_to_document(t) for t in seq.traces]
        human.append("# reduction trace")
        human += _trace_lines(seq.traces)
    _emit(args, doc, human)
    return EXIT_OK


def _trace_lines(traces) -> List[str]:
    lines = []
    for trace in traces:
        for step in trace_to_document(trace)["steps"]:
            kind = step.pop("kind")
            lines.append(f"{kind}: " + json.dumps(step, separators=(",", ":")))
    return lines


def cmd_minlead(args) -> int:
    G = load_graph(args.graph)
    i = _index_arg(args.index, G.n)
    try:
        value = _basis.minimal_leading_term(G, i, args.order)
    except (UnknownVertex, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(args, {"index": i, "minimal_leading_term": str(value)}, [str(value)])
    return EXIT_OK


def cmd_rank(args) -> int:
    G = load_graph(args.graph)
    r = _basis.rank(G)
    _emit(args, {"rank": r}, [str(r)])
    return EXIT_OK


def cmd_reduce(args) -> int:
    G = load_graph(args.graph)
    try:
        H, trace = reduce(G, args.vertex)
    except UnknownVertex as exc:
        raise InputError(f"unknown vertex {args.vertex!r}") from exc
    doc = {"graph": graph_to_document(H)}
    human = _table(["vertex", "m"], [[vid, str(m)] for vid, m in H.vertices])
    human += _table(["u", "v", "r"], [[H.ids[u], H.ids[v], str(r)] for u, v, r in H.edges])
    if args.trace:
        doc["trace"] = trace_to_document(trace)
        human.append("# reduction trace")
        human += _trace_lines([trace])
    _emit(args, doc, human)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    G = load_graph(args.graph)
    spanned = IntegerLattice(_basis.flow_up_basis(G).elements, G.n)
    results = {}
    if args.method in ("kernel", "both"):
        results["kernel"] = spanned == spline_lattice_kernel(G)
    if args.method in ("enumerate", "both"):
        try:
            results["enumerate"] = spanned == spline_lattice_enumerate(G, args.budget)
        except ZeroLabel as exc:
            raise InputError(f"enumeration needs nonzero labels: {exc}") from exc
    ok = all(results.values())
    human = [f"{name}: {'equal' if v else 'DIFFERENT'}" for name, v in results.items()]
    _emit(args, {"ok": ok, "checks": results}, human)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_extend(args) -> int:
    G = load_graph(args.graph)
    subset = [s for s in args.subset.split(",") if s]
    try:
        f = extend_from_subgraph(G, subset, _spline_arg(args.spline))
    except (UnknownVertex, EmptySelection, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(args, {"spline": spline_to_document(f)}, [ORIENTATION_NOTE, _fmt(f)])
    return EXIT_OK


def cmd_project(args) -> int:
    G = load_graph(args.graph)
    try:
        f = project(G, _spline_arg(args.spline), args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, {"spline": spline_to_document(f)}, [ORIENTATION_NOTE, _fmt(f)])
    return EXIT_OK


def _index_arg(text: str, n: int) -> int:
    try:
        i = parse_int(text, "index")
    except DocumentError as exc:
        raise InputError(str(exc)) from exc
    if not 1 <= i <= n:
        raise InputError(f"index must lie in [1, {n}]")
    return i


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zsplines", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check that a vector is a spline")
    p.add_argument("graph")
    p.add_argument("spline", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("basis", help="flow-up basis")
    p.add_argument("graph")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("minlead", help="minimal leading term at a 1-based position")
    p.add_argument("graph")
    p.add_argument("index")
    p.add_argument("--order", nargs="+", help="reduction order (vertex ids)")
    p.set_defaults(func=cmd_minlead)

    p = sub.add_parser("rank", help="rank of the spline module")
    p.add_argument("graph")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("reduce", help="reduced graph on one vertex")
    p.add_argument("graph")
    p.add_argument("vertex", help="vertex id")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle-check", help="compare the basis lattice with the oracle")
    p.add_argument("graph")
    p.add_argument("--method", choices=("kernel", "enumerate", "both"), default="kernel")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("extend", help="extend a subgraph spline to the whole graph")
    p.add_argument("graph")
    p.add_argument("--subset", required=True, help="comma-separated vertex ids")
    p.add_argument("spline", nargs="+")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("project", help="truncate a spline to v_1 .. v_k")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("spline", nargs="+")
    p.set_defaults(func=cmd_project)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DocumentError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
