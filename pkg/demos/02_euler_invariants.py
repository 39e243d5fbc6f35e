"""Euler partitions on both parities, plus the invariant summary."""
from pathlib import Path

from skewlines import (
    cross_invariants,
    euler_partition,
    euler_tree,
    eulerian_normalize_odd,
    invariant_summary,
    row_signs,
)
from skewlines.euler import eulerian_dot
from skewlines.textio import parse_matrix

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def load(name):
    return parse_matrix((DATA / f"{name}.txt").read_text())


# ODD ORDER ===============================================================

X5 = load("spindle5")
rep = eulerian_normalize_odd(X5)
print("flip lines:", rep.flipped)
print("partition:", rep.classes)
print(eulerian_dot(rep))

s = invariant_summary(rep.normalized)
print("signature", s.signature, "triangles", s.triangle_count, "row sums", s.row_sum_histogram)

# EVEN ORDER ==============================================================

X10 = load("tree10")
print("row signs:", row_signs(X10).eps)
tree = euler_tree(X10)
print("tree:", tree.render())
print("shape:", tree.shape().render())

part = euler_partition(X10)
print("partition:", part)
print(cross_invariants(X10, part))

# the two 8x8 matrices share a spectrum but their trees differ
for name in ("cospectral8_a", "cospectral8_b"):
    print(name, euler_tree(load(name)).render())
