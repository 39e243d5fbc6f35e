"""Counting trees and enumerating small switching classes."""
import time

from skewlines import (
    count_signed_weighted_trees,
    count_weighted_trees,
    enumerate_eulerian_graphs,
    enumerate_switching_classes,
    enumerate_trees,
)

# TREE COUNTS =============================================================

a = count_weighted_trees(12)
b = count_signed_weighted_trees(12)
for n in range(13):
    print(f"{n:3d} {a[n]:>10d} {b[n]:>10d}")

# ratio of consecutive terms creeps toward the growth rate
big = count_signed_weighted_trees(200)
print("ratio at 200:", big[200] / big[199])

for t in enumerate_trees(3, signed=True):
    print("   ", t.render())

# SWITCHING CLASSES =======================================================

for n in range(1, 8):
    t0 = time.perf_counter()
    census = enumerate_switching_classes(n)
    print(f"order {n}: {len(census):3d} classes in {time.perf_counter() - t0:.2f}s")

for rep, ann in zip(census.representatives[:3], census.annotations[:3]):
    print(ann.charpoly, "|", ann.euler, "| spindle" if ann.spindle else "| no spindle")

# EULERIAN GRAPHS =========================================================

graphs = enumerate_eulerian_graphs(7)
print(len(graphs), "Eulerian graphs on 7 vertices")
print(len({g.degree_sequence() for g in graphs}), "degree sequences")
print("largest:", graphs[-1].edges)
