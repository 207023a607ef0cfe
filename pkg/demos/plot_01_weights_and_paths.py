"""
Arc weights and the shortest route to the root
===============================================

Weights shrink as arcs get deeper, so walking a node up to the root is a
shortest-path problem over a handful of generalizations.
"""

from ontosim import annotate_weights, load_graph, max_depths, render_trace, shortest_path_to_root
from ontosim.data import fixture_path

g = load_graph(fixture_path("fig2.onto"))
print(g.node_count, "nodes, root", g.root)

###############################################################################
# Depth is the *longest* route from the root: G hangs under C (depth 2) and
# under F (depth 3), so it sits at depth 4.

depths = max_depths(g)
print({n: m.max_depth for n, m in depths.items()})

###############################################################################
# Every parent -> child arc gets its weight from the parent's depth and the
# child's position among its siblings.

wg = annotate_weights(g)
for arc in wg.arcs():
    print(f"{arc.parent:>3} -> {arc.child:<3} order={arc.child_order}  w={arc.weight:.4f}")

###############################################################################
# H has three ways up.  The search settles nodes cheapest-first and stops as
# soon as nothing left in the frontier could still undercut the root.

path, trace = shortest_path_to_root(wg, "H")
print(path, round(path.total_weight, 3))
print(render_trace(trace))
