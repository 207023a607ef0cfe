"""In-memory single-rooted "is-a" hierarchy, its text format, and depth bookkeeping."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    CycleDetected,
    DuplicateEdge,
    FormatError,
    MultipleRoots,
    NoRoot,
    NotAnArc,
    UnknownNode,
    UnknownNodeInEdge,
    UnreachableNode,
)

__all__ = [
    "OntologyGraph",
    "NodeMeta",
    "load_graph",
    "parse_document",
    "max_depths",
    "sibling_order",
]


@dataclass(frozen=True)
class OntologyGraph:
    """Validated, immutable single-rooted DAG.

    Arcs are stored parent -> child.  ``nodes`` is in load order and
    ``index`` maps each label to its position there; that index is the
    tie-breaker for every ordering decision downstream.  Child lists keep
    edge declaration order, which is what sibling order is read from.
    """

    root: str
    nodes: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    children_of: Mapping[str, tuple[str, ...]] = field(repr=False)
    parents_of: Mapping[str, tuple[str, ...]] = field(repr=False)
    index: Mapping[str, int] = field(repr=False)

    @classmethod
    def from_edges(
        cls,
        root: str,
        edges: Iterable[tuple[str, str]],
        nodes: Iterable[str] | None = None,
    ) -> OntologyGraph:
        """Build and validate a graph from ``(parent, child)`` pairs.

        If ``nodes`` is given it is the closed set of allowed labels (in
        load order, root included or prepended); otherwise labels are
        collected from the root and then the edges in order of appearance.
        """
        _check_label(root)
        order: dict[str, None] = {root: None}
        closed = nodes is not None
        if closed:
            for n in nodes:
                _check_label(n)
                order.setdefault(n, None)
        children: dict[str, list[str]] = {}
        parents: dict[str, list[str]] = {}
        arcs: list[tuple[str, str]] = []
        seen: set[tuple[str, str]] = set()
        for parent, child in edges:
            for label in (parent, child):
                _check_label(label)
                if label not in order:
                    if closed:
                        raise UnknownNodeInEdge(
                            f"edge {parent} -> {child} uses undeclared node {label!r}"
                        )
                    order[label] = None
            if (parent, child) in seen:
                raise DuplicateEdge(f"duplicate edge {parent} -> {child}")
            seen.add((parent, child))
            arcs.append((parent, child))
            children.setdefault(parent, []).append(child)
            parents.setdefault(child, []).append(parent)

        labels = tuple(order)
        if parents.get(root):
            if any(p == root for p in parents[root]):
                raise CycleDetected(f"self-loop on root {root!r}")
            # root with a parent is either part of a cycle or a second root above it
            _find_cycle(labels, children)
            raise MultipleRoots(
                f"declared root {root!r} has parent(s) {', '.join(parents[root])}"
            )
        _find_cycle(labels, children)
        orphans = [n for n in labels if n != root and not parents.get(n)]
        if orphans:
            raise MultipleRoots(
                f"nodes without a parent besides root {root!r}: {', '.join(orphans)}"
            )
        _check_reachable(root, labels, parents)

        return cls(
            root=root,
            nodes=labels,
            arcs=tuple(arcs),
            children_of=MappingProxyType({n: tuple(children.get(n, ())) for n in labels}),
            parents_of=MappingProxyType({n: tuple(parents.get(n, ())) for n in labels}),
            index=MappingProxyType({n: i for i, n in enumerate(labels)}),
        )

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def __contains__(self, label: object) -> bool:
        return label in self.index

    def require(self, label: str) -> str:
        if label not in self.index:
            raise UnknownNode(f"unknown node {label!r}")
        return label

    def has_arc(self, parent: str, child: str) -> bool:
        return child in self.index and parent in self.parents_of[child]


@dataclass(frozen=True)
class NodeMeta:
    node: str
    max_depth: int


def _check_label(label: str) -> None:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise FormatError(f"invalid node label {label!r}")


def _find_cycle(labels: tuple[str, ...], children: Mapping[str, list[str]]) -> None:
    indeg = {n: 0 for n in labels}
    for kids in children.values():
        for c in kids:
            indeg[c] += 1
    stack = [n for n in labels if indeg[n] == 0]
    visited = 0
    while stack:
        n = stack.pop()
        visited += 1
        for c in children.get(n, ()):
            indeg[c] -= 1
            if indeg[c] == 0:
                stack.append(c)
    if visited != len(labels):
        stuck = [n for n in labels if indeg[n] > 0]
        raise CycleDetected(f"cycle through node(s) {', '.join(stuck)}")


def _check_reachable(
    root: str, labels: tuple[str, ...], parents: Mapping[str, list[str]]
) -> None:
    reaches = {root}
    pending = [n for n in labels if n != root]
    # acyclic at this point, so repeated sweeps terminate
    while pending:
        rest = [n for n in pending if not any(p in reaches for p in parents.get(n, ()))]
        if len(rest) == len(pending):
            raise UnreachableNode(f"cannot reach root {root!r} from: {', '.join(rest)}")
        reaches.update(n for n in pending if n not in rest)
        pending = rest


def parse_document(text: str) -> OntologyGraph:
    """Parse an ontology document.

    Format::

        # comment
        root: A
        A B        # parent child
        A C

    The header must precede every edge line.  Child order under each
    parent is the order of that parent's edge lines.
    """
    root: str | None = None
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("root:"):
            if root is not None:
                raise MultipleRoots(f"line {lineno}: second root header")
            label = line[len("root:"):].strip()
            if not label or len(label.split()) != 1:
                raise FormatError(f"line {lineno}: expected 'root: <label>'")
            root = label
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<parent> <child>', got {raw!r}")
        if root is None:
            raise NoRoot(f"line {lineno}: edge before 'root:' header")
        edges.append((parts[0], parts[1]))
    if root is None:
        raise NoRoot("document has no 'root:' header")
    return OntologyGraph.from_edges(root, edges)


def load_graph(source: str | PathLike[str]) -> OntologyGraph:
    """Load a graph from a path, or from document text if it contains a newline."""
    if isinstance(source, str) and ("\n" in source or source.lstrip().startswith("root:")):
        return parse_document(source)
    return parse_document(Path(source).read_text(encoding="utf-8"))


def max_depths(g: OntologyGraph) -> dict[str, NodeMeta]:
    """Longest root-to-node path length, in arcs, for every node."""
    depth = {n: 0 for n in g.nodes}
    indeg = {n: len(g.parents_of[n]) for n in g.nodes}
    heap = [(g.index[g.root], g.root)]
    while heap:
        _, n = heapq.heappop(heap)
        for c in g.children_of[n]:
            depth[c] = max(depth[c], depth[n] + 1)
            indeg[c] -= 1
            if indeg[c] == 0:
                heapq.heappush(heap, (g.index[c], c))
    return {n: NodeMeta(n, depth[n]) for n in g.nodes}


def sibling_order(g: OntologyGraph, parent: str, child: str) -> int:
    """0-based position of ``child`` among ``parent``'s children."""
    g.require(parent)
    g.require(child)
    try:
        return g.children_of[parent].index(child)
    except ValueError:
        raise NotAnArc(f"{parent} -> {child} is not an arc") from None
