"""Dijkstra from a node up to the root, stopping as soon as the root is settled.

Only generalizations of the start node are ever touched: the search walks
child -> parent arcs exclusively.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .errors import Unreachable
from .formats import format_number
from .weighting import WeightedGraph

__all__ = [
    "INF",
    "ConceptPath",
    "TraceRow",
    "DijkstraTrace",
    "shortest_path_to_root",
    "render_trace",
]

INF = math.inf


@dataclass(frozen=True)
class ConceptPath:
    """Shortest path from ``start`` to the root.

    ``arc_weights[i]`` is the weight of the arc between ``nodes[i]`` and
    ``nodes[i + 1]``.
    """

    start: str
    nodes: tuple[str, ...]
    arc_weights: tuple[float, ...]

    @property
    def total_weight(self) -> float:
        return math.fsum(self.arc_weights)

    @property
    def root(self) -> str:
        return self.nodes[-1]

    def suffix_weight(self, i: int) -> float:
        """Weight of the sub-path from ``nodes[i]`` to the root."""
        return math.fsum(self.arc_weights[i:])

    def __str__(self) -> str:
        return " > ".join(self.nodes)


@dataclass(frozen=True)
class TraceRow:
    weights: tuple[float, ...]
    preds: tuple[str | None, ...]
    extracted: str | None = None


@dataclass(frozen=True)
class DijkstraTrace:
    """One row per extraction from the frontier; row 0 is the initialization."""

    nodes: tuple[str, ...]
    rows: tuple[TraceRow, ...]

    def weights(self, k: int = -1) -> dict[str, float]:
        return dict(zip(self.nodes, self.rows[k].weights))

    def preds(self, k: int = -1) -> dict[str, str | None]:
        return dict(zip(self.nodes, self.rows[k].preds))

    def extraction_weights(self) -> list[float]:
        """Settled label of each extracted node, in extraction order."""
        out = []
        for row in self.rows[1:]:
            out.append(row.weights[self.nodes.index(row.extracted)])
        return out


def shortest_path_to_root(wg: WeightedGraph, start: str) -> tuple[ConceptPath, DijkstraTrace]:
    g = wg.graph
    g.require(start)
    root = g.root
    idx = g.index

    dist = {n: INF for n in g.nodes}
    pred: dict[str, str | None] = {n: None for n in g.nodes}
    dist[start] = 0.0
    settled: set[str] = set()
    open_: set[str] = {start}
    heap = [(0.0, idx[start], start)]

    def snapshot(extracted: str | None = None) -> TraceRow:
        return TraceRow(
            tuple(dist[n] for n in g.nodes), tuple(pred[n] for n in g.nodes), extracted
        )

    def root_is_final() -> bool:
        # No open node can still undercut the root label: each would need at
        # least (its own label) plus the arc into the root from an unsettled child.
        if dist[root] == INF:
            return False
        frontier = min((dist[n] for n in open_ if n != root), default=INF)
        if frontier == INF:
            return True
        into_root = min(
            (wg.weight(root, c) for c in g.children_of[root] if c not in settled),
            default=INF,
        )
        return dist[root] <= frontier + into_root

    rows = [snapshot()]
    while heap and start != root:
        w, _, t = heapq.heappop(heap)
        if t in settled or w > dist[t]:
            continue
        if t == root:
            break
        settled.add(t)
        open_.discard(t)
        for s in g.parents_of[t]:
            if s in settled:
                continue
            cand = dist[t] + wg.weight(s, t)
            if cand < dist[s]:
                dist[s] = cand
                pred[s] = t
                open_.add(s)
                heapq.heappush(heap, (cand, idx[s], s))
        rows.append(snapshot(t))
        if root_is_final():
            break

    if dist[root] == INF:
        raise Unreachable(f"root {root!r} not reachable from {start!r}")

    chain = [root]
    while chain[-1] != start:
        chain.append(pred[chain[-1]])
    chain.reverse()
    arc_ws = tuple(wg.weight(p, c) for c, p in zip(chain, chain[1:]))
    return ConceptPath(start, tuple(chain), arc_ws), DijkstraTrace(g.nodes, tuple(rows))


def _fmt_weight(w: float, precision: int) -> str:
    return "∞" if w == INF else format_number(w, precision)


def render_trace(trace: DijkstraTrace, precision: int = 3) -> str:
    """Weight table followed by predecessor table, one column per node."""
    header = ["", *trace.nodes]
    weight_rows = [
        [f"W{k}", *(_fmt_weight(w, precision) for w in row.weights)]
        for k, row in enumerate(trace.rows)
    ]
    pred_rows = [
        [f"W{k}", *(p if p is not None else "∅" for p in row.preds)]
        for k, row in enumerate(trace.rows)
    ]
    blocks = []
    for title, body in (("weights", weight_rows), ("predecessors", pred_rows)):
        table = [header, *body]
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        lines = [title]
        for r in table:
            lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(r)).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
