"""
Similarity between vehicle concepts
===================================

A seven-node WordNet fragment, the pairwise similarity matrix at ``deg=0.4``,
and how it lines up against two published baselines.
"""

import numpy as np

from ontosim import annotate_weights, load_graph, similarity, similarity_matrix
from ontosim.data import fixture_path
from ontosim.formats import LabeledMatrix, compare_matrices, load_matrix_csv, matrix_to_csv

wg = annotate_weights(load_graph(fixture_path("fig6.onto")))
nodes = ["Vehicle", "Truck", "Car", "FamilyCar", "SportCar"]

m = similarity_matrix(wg, nodes, deg=0.4)
print(matrix_to_csv(nodes, m))

###############################################################################
# Car is a direct parent of SportCar, so their distance is just that arc.
# Truck and FamilyCar only share the root, so both full paths count.

for a, b in [("Car", "SportCar"), ("Truck", "FamilyCar")]:
    r = similarity(wg, a, b, 0.4)
    print(a, b, r.branch, f"sdis={r.sdis:.4f}", f"ssim={r.ssim:.3f}")

###############################################################################
# Siblings get different scores against their parent, because sibling order
# feeds into the arc weight.

print("Vehicle~Truck", round(similarity(wg, "Vehicle", "Truck").ssim, 3))
print("Vehicle~Car  ", round(similarity(wg, "Vehicle", "Car").ssim, 3))

###############################################################################
# Compare against the published tables.

ours = LabeledMatrix(tuple(nodes), m)
for name in ["table5.csv", "table4.csv", "table3.csv"]:
    report = compare_matrices(ours, load_matrix_csv(fixture_path(name)))
    print(name, "max |delta| =", report.max_abs_delta)

###############################################################################
# Larger ``deg`` makes distance count for more.

for deg in (0.1, 0.4, 1.0):
    print(deg, np.round(similarity_matrix(wg, ["Truck", "SportCar"], deg)[0, 1], 3))
