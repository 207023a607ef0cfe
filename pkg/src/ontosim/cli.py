"""Command line front end: ``ontosim {weights,path,sim,matrix,compare}``.

Exit codes: 0 success, 2 bad input, 1 anything else.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import FIXTURES, fixture_path
from .errors import OntologyError
from .formats import (
    LabeledMatrix,
    compare_matrices,
    format_number,
    load_matrix_csv,
    matrix_to_csv,
    matrix_to_json,
)
from .graph import load_graph
from .shortest_path import render_trace, shortest_path_to_root
from .similarity import DEFAULT_DEG, similarity, similarity_matrix
from .weighting import WeightedGraph, annotate_weights


def _resolve(name: str) -> Path:
    p = Path(name)
    if not p.exists() and name in FIXTURES:
        return fixture_path(name)
    return p


def _weighted(file: str) -> WeightedGraph:
    return annotate_weights(load_graph(_resolve(file)))


def _deg(text: str) -> float:
    try:
        d = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < d <= 1.0:
        raise argparse.ArgumentTypeError(f"deg must lie in (0, 1], got {text}")
    return d


def _node_list(text: str) -> list[str]:
    return [n.strip() for n in text.split(",") if n.strip()]


def cmd_weights(args) -> str:
    wg = _weighted(args.file)
    return "".join(
        f"{a.parent} {a.child} {format_number(a.weight, args.precision)}\n" for a in wg.arcs()
    )


def cmd_path(args) -> str:
    wg = _weighted(args.file)
    path, trace = shortest_path_to_root(wg, args.node)
    out = f"{path} ({format_number(path.total_weight, args.precision)})\n"
    if args.trace:
        out += "\n" + render_trace(trace, args.precision)
    return out


def cmd_sim(args) -> str:
    wg = _weighted(args.file)
    res = similarity(wg, args.a, args.b, args.deg)
    p = args.precision
    if not args.explain:
        return format_number(res.ssim, p) + "\n"
    parts = [f"ssim={format_number(res.ssim, p)}", f"sdis={format_number(res.sdis, p)}"]
    if res.decomposition is not None:
        dec = res.decomposition
        parts += [f"fc={dec.fc}", f"cpath={format_number(dec.cpath_weight, p)}"]
    else:
        parts.append(f"branch={res.branch}")
    return " ".join(parts) + "\n"


def cmd_matrix(args) -> str:
    wg = _weighted(args.file)
    nodes = args.nodes if args.nodes else list(wg.graph.nodes)
    m = similarity_matrix(wg, nodes, args.deg)
    if args.format == "json":
        return matrix_to_json(nodes, m, args.precision, deg=args.deg)
    if len(nodes) == 1:
        return format_number(m[0, 0], args.precision) + "\n"
    return matrix_to_csv(nodes, m, args.precision)


def cmd_compare(args) -> str:
    wg = _weighted(args.file)
    baseline = load_matrix_csv(_resolve(args.baseline))
    m = similarity_matrix(wg, baseline.labels, args.deg)
    report = compare_matrices(LabeledMatrix(baseline.labels, m), baseline, args.precision)
    return report.render()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontosim", description="Semantic similarity in a single-rooted is-a hierarchy."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="ontology document (or a bundled fixture name)")
        p.add_argument("--precision", type=int, default=3, help="decimals printed (default 3)")
        p.set_defaults(func=func)
        return p

    add("weights", cmd_weights, "print every arc weight")

    p = add("path", cmd_path, "shortest path from a node to the root")
    p.add_argument("--node", required=True)
    p.add_argument("--trace", action="store_true", help="print the iteration tables")

    p = add("sim", cmd_sim, "similarity of two concepts")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--deg", type=_deg, default=DEFAULT_DEG)
    p.add_argument("--explain", action="store_true", help="also print sdis, fc and cpath weight")

    p = add("matrix", cmd_matrix, "pairwise similarity matrix")
    p.add_argument("--nodes", type=_node_list, help="comma-separated labels (default: all)")
    p.add_argument("--deg", type=_deg, default=DEFAULT_DEG)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("compare", cmd_compare, "diff our matrix against a published table")
    p.add_argument("baseline", help="CSV table with labeled rows and columns")
    p.add_argument("--deg", type=_deg, default=DEFAULT_DEG)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        sys.stdout.write(args.func(args))
    except (OntologyError, OSError) as exc:
        print(f"ontosim: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"ontosim: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0
