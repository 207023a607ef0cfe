"""Path-based semantic similarity for single-rooted is-a hierarchies."""
import logging

from .errors import OntologyError
from .graph import NodeMeta, OntologyGraph, load_graph, max_depths, parse_document, sibling_order
from .shortest_path import ConceptPath, DijkstraTrace, render_trace, shortest_path_to_root
from .similarity import (
    DEFAULT_DEG,
    DistanceDecomposition,
    SimilarityResult,
    first_common_node,
    semantic_distance,
    similarity,
    similarity_matrix,
)
from .weighting import WeightedArc, WeightedGraph, annotate_weights, arc_weight

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "OntologyError",
    "OntologyGraph",
    "NodeMeta",
    "load_graph",
    "parse_document",
    "max_depths",
    "sibling_order",
    "WeightedArc",
    "WeightedGraph",
    "arc_weight",
    "annotate_weights",
    "ConceptPath",
    "DijkstraTrace",
    "shortest_path_to_root",
    "render_trace",
    "DEFAULT_DEG",
    "DistanceDecomposition",
    "SimilarityResult",
    "first_common_node",
    "semantic_distance",
    "similarity",
    "similarity_matrix",
]
