"""
Building a hierarchy in code
============================

Graphs can come from edge lists as well as ``.onto`` files.  Child order
under each parent is the order the edges are given in.
"""

import logging

from ontosim import OntologyGraph, annotate_weights, semantic_distance, similarity
from ontosim.errors import CycleDetected

edges = [
    ("animal", "mammal"),
    ("animal", "bird"),
    ("mammal", "dog"),
    ("mammal", "cat"),
    ("bird", "penguin"),
    ("mammal", "platypus"),
    ("bird", "platypus"),  # two parents; order counted separately under each
]
g = OntologyGraph.from_edges("animal", edges)
wg = annotate_weights(g)

dec = semantic_distance(wg, "dog", "cat")
print("dog/cat meet at", dec.fc, "distance", round(dec.sdis, 4))
print("dog~cat    ", round(similarity(wg, "dog", "cat").ssim, 3))
print("dog~penguin", round(similarity(wg, "dog", "penguin").ssim, 3))

###############################################################################
# A node and its direct parent are separated by exactly their arc, even if the
# node's cheapest route to the root avoids that parent.  A warning is logged
# when the two readings disagree.

logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
r = similarity(wg, "mammal", "platypus")
print(r.branch, round(r.sdis, 4))

###############################################################################
# Invalid hierarchies are rejected at load time.

try:
    OntologyGraph.from_edges("a", [("a", "b"), ("b", "c"), ("c", "b")])
except CycleDetected as exc:
    print("rejected:", exc)
