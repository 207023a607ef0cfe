"""Semantic distance and similarity between concepts of one hierarchy.

A concept is identified with its start node and stands for the node set of
that node's shortest path to the root.  Two concepts share the root-anchored
tail of their paths; the distance is what is left after discarding that
shared tail from both sides, and similarity is ``1 / (deg * distance + 1)``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegOutOfRange, DifferentRoots
from .shortest_path import ConceptPath, shortest_path_to_root
from .weighting import WeightedGraph

__all__ = [
    "DEFAULT_DEG",
    "DistanceDecomposition",
    "SimilarityResult",
    "first_common_node",
    "semantic_distance",
    "similarity",
    "similarity_matrix",
    "ssim_from_sdis",
]

log = logging.getLogger(__name__)

DEFAULT_DEG = 0.4


@dataclass(frozen=True)
class DistanceDecomposition:
    path_a: ConceptPath
    path_b: ConceptPath
    fc: str
    cpath_weight: float
    sdis: float


@dataclass(frozen=True)
class SimilarityResult:
    """Outcome of one pairwise comparison.

    ``branch`` records which case produced ``sdis``: ``"identical"``,
    ``"direct"`` (one node is the other's parent, distance = that arc's
    weight) or ``"paths"`` (shortest-path decomposition, kept in
    ``decomposition``).
    """

    a: str
    b: str
    deg: float
    sdis: float
    ssim: float
    branch: str
    decomposition: DistanceDecomposition | None = None


def _shared_tail(path_a: ConceptPath, path_b: ConceptPath) -> tuple[int, int]:
    if path_a.root != path_b.root:
        raise DifferentRoots(f"paths end at {path_a.root!r} and {path_b.root!r}")
    i, j = len(path_a.nodes) - 1, len(path_b.nodes) - 1
    while i > 0 and j > 0 and path_a.nodes[i - 1] == path_b.nodes[j - 1]:
        i -= 1
        j -= 1
    return i, j


def first_common_node(path_a: ConceptPath, path_b: ConceptPath) -> tuple[str, float]:
    """Deepest node of the longest common root-anchored suffix, and the suffix weight."""
    i, _ = _shared_tail(path_a, path_b)
    return path_a.nodes[i], path_a.suffix_weight(i)


def _check_deg(deg: float) -> float:
    if not (0.0 < deg <= 1.0):
        raise DegOutOfRange(f"deg must lie in (0, 1], got {deg!r}")
    return deg


def ssim_from_sdis(sdis: float, deg: float = DEFAULT_DEG) -> float:
    return 1.0 / (deg * sdis + 1.0)


class _PathCache:
    def __init__(self, wg: WeightedGraph):
        self.wg = wg
        self._paths: dict[str, ConceptPath] = {}

    def __call__(self, node: str) -> ConceptPath:
        if node not in self._paths:
            self._paths[node] = shortest_path_to_root(self.wg, node)[0]
        return self._paths[node]


def _decompose(paths, a: str, b: str) -> DistanceDecomposition:
    pa, pb = paths(a), paths(b)
    i, j = _shared_tail(pa, pb)
    # total_a + total_b - 2 * shared equals the two unshared prefixes; summing
    # those directly avoids cancellation
    sdis = math.fsum(pa.arc_weights[:i] + pb.arc_weights[:j])
    return DistanceDecomposition(pa, pb, pa.nodes[i], pa.suffix_weight(i), sdis)


def semantic_distance(wg: WeightedGraph, a: str, b: str) -> DistanceDecomposition:
    wg.graph.require(a)
    wg.graph.require(b)
    return _decompose(_PathCache(wg), a, b)


def _similarity(wg: WeightedGraph, a: str, b: str, deg: float, paths) -> SimilarityResult:
    g = wg.graph
    g.require(a)
    g.require(b)
    if a == b:
        return SimilarityResult(a, b, deg, 0.0, 1.0, "identical")
    if g.has_arc(a, b) or g.has_arc(b, a):
        parent, child = (a, b) if g.has_arc(a, b) else (b, a)
        sdis = wg.weight(parent, child)
        via_paths = _decompose(paths, a, b).sdis
        if not math.isclose(via_paths, sdis, rel_tol=1e-12, abs_tol=1e-12):
            log.warning(
                "direct arc %s -> %s gives distance %.6g but shortest paths give %.6g",
                parent, child, sdis, via_paths,
            )
        return SimilarityResult(a, b, deg, sdis, ssim_from_sdis(sdis, deg), "direct")
    dec = _decompose(paths, a, b)
    return SimilarityResult(a, b, deg, dec.sdis, ssim_from_sdis(dec.sdis, deg), "paths", dec)


def similarity(wg: WeightedGraph, a: str, b: str, deg: float = DEFAULT_DEG) -> SimilarityResult:
    """Similarity of concepts ``a`` and ``b``.

    Identical nodes score 1.  A node and its direct parent are separated by
    exactly their arc weight, even when the child's cheapest route to the
    root avoids that parent (a warning is logged in that case).  Everything
    else goes through the shortest-path decomposition.
    """
    return _similarity(wg, a, b, _check_deg(deg), _PathCache(wg))


def similarity_matrix(
    wg: WeightedGraph, nodes: Sequence[str], deg: float = DEFAULT_DEG
) -> np.ndarray:
    _check_deg(deg)
    for n in nodes:
        wg.graph.require(n)
    paths = _PathCache(wg)
    out = np.empty((len(nodes), len(nodes)))
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            out[i, j] = _similarity(wg, a, b, deg, paths).ssim
    return out
