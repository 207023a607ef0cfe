"""Arc weights for an is-a hierarchy.

Each parent -> child arc gets::

    W(parent, child) = 1 / (max_depth(parent) + order(child) / (node_count + 1) + 1)

where ``order(child)`` is the child's 0-based position under that parent.
Because ``order / (node_count + 1) < 1``, every arc is strictly lighter
than any arc above it on a root-to-leaf walk.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import NotAnArc
from .graph import NodeMeta, OntologyGraph, max_depths, sibling_order

__all__ = ["WeightedArc", "WeightedGraph", "arc_weight", "annotate_weights"]


@dataclass(frozen=True)
class WeightedArc:
    parent: str
    child: str
    child_order: int
    weight: float


@dataclass(frozen=True)
class WeightedGraph:
    graph: OntologyGraph
    arc_weights: Mapping[tuple[str, str], WeightedArc] = field(repr=False)
    depths: Mapping[str, NodeMeta] = field(repr=False)

    def weight(self, parent: str, child: str) -> float:
        try:
            return self.arc_weights[parent, child].weight
        except KeyError:
            raise NotAnArc(f"{parent} -> {child} is not an arc") from None

    def arcs(self) -> list[WeightedArc]:
        """Weighted arcs in declaration order."""
        return [self.arc_weights[a] for a in self.graph.arcs]


def arc_weight(
    g: OntologyGraph, depths: Mapping[str, NodeMeta], parent: str, child: str
) -> float:
    order = sibling_order(g, parent, child)
    return 1.0 / (depths[parent].max_depth + order / (g.node_count + 1) + 1)


def annotate_weights(g: OntologyGraph) -> WeightedGraph:
    depths = max_depths(g)
    table = {
        (p, c): WeightedArc(p, c, sibling_order(g, p, c), arc_weight(g, depths, p, c))
        for p, c in g.arcs
    }
    return WeightedGraph(g, MappingProxyType(table), MappingProxyType(depths))
