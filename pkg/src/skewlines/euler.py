"""Eulerian semi-orientations (odd order) and Euler trees (even order)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence, Union

import numpy as np

from .signmat import SignMatrix, SwitchingTransform, apply_switching

__all__ = [
    "EulerError",
    "Partition",
    "OddEulerReport",
    "RowSignVector",
    "Leaf",
    "Node",
    "EulerTree",
    "InvariantSummary",
    "eulerian_normalize_odd",
    "odd_euler_partition",
    "row_signs",
    "euler_tree",
    "euler_partition",
    "leaf_signature",
    "cross_invariants",
    "is_eulerian",
    "invariant_summary",
    "eulerian_dot",
    "tree_partition",
]


class EulerError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint index classes with display labels."""

    classes: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __str__(self) -> str:
        return " ".join(
            f"{lab}={{{','.join(map(str, cls))}}}" for lab, cls in zip(self.labels, self.classes)
        )

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.classes}


# ---------------------------------------------------------------------------
# odd order
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OddEulerReport:
    normalized: SignMatrix
    flips: tuple[int, ...]
    classes: Partition

    @property
    def flipped(self) -> tuple[int, ...]:
        """Lines whose orientation was reversed."""
        return tuple(i + 1 for i, f in enumerate(self.flips) if f < 0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges of the Eulerian graph (pairs with a +1 entry)."""
        return _plus_edges(self.normalized)


def _plus_counts(arr: np.ndarray) -> np.ndarray:
    return (arr > 0).sum(axis=1)


def _plus_edges(X: SignMatrix) -> list[tuple[int, int]]:
    iu, ju = np.nonzero(np.triu(X.entries > 0, k=1))
    return [(int(a) + 1, int(b) + 1) for a, b in zip(iu, ju)]


def eulerian_normalize_odd(X: SignMatrix) -> OddEulerReport:
    """Reverse every line with an odd number of positive crossings.

    The flip vector is reported with ``flips[0] == +1``; flipping all lines
    at once leaves the normalized matrix unchanged.
    """
    if X.n % 2 == 0:
        raise EulerError(f"Eulerian semi-orientation needs odd order, got {X.n}")
    v = _plus_counts(X.entries)
    flips = np.where(v % 2 == 1, -1, 1)
    if flips[0] < 0:
        flips = -flips
    flips_t = tuple(int(f) for f in flips)
    XE = apply_switching(X, SwitchingTransform.from_signs(flips_t))
    counts = _plus_counts(XE.entries)
    ks = sorted(set(int(c) // 2 for c in counts))
    classes = tuple(
        tuple(i + 1 for i in range(X.n) if counts[i] == 2 * k) for k in ks
    )
    return OddEulerReport(XE, flips_t, Partition(classes, tuple(f"L{k}" for k in ks)))


def odd_euler_partition(X: SignMatrix) -> Partition:
    return eulerian_normalize_odd(X).classes


# ---------------------------------------------------------------------------
# even order
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RowSignVector:
    eps: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(l for l, e in zip(self.labels, self.eps) if e < 0)

    @property
    def plus(self) -> tuple[int, ...]:
        return tuple(l for l, e in zip(self.labels, self.eps) if e > 0)

    @property
    def trivial(self) -> bool:
        return len(set(self.eps)) <= 1


def _eps(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    rows = np.prod(arr + np.eye(n, dtype=arr.dtype), axis=1, dtype=np.int64)
    total = np.prod(arr[np.triu_indices(n, k=1)], dtype=np.int64)
    return rows * total


def row_signs(X: SignMatrix, labels: Optional[Sequence[int]] = None) -> RowSignVector:
    """Row signs eps_i = prod_{j != i} x_ij * prod_{s<t} x_st (even order).

    ``labels`` names the rows (defaults to 1..n); used when X is a submatrix.
    """
    if X.n % 2:
        raise EulerError(f"row signs need even order, got {X.n}")
    labels = tuple(labels) if labels is not None else tuple(range(1, X.n + 1))
    return RowSignVector(tuple(int(e) for e in _eps(X.entries)), labels)


@dataclass(frozen=True)
class Leaf:
    """Leaf of an Euler tree; ``indices`` is None for abstract shapes."""

    indices: Optional[tuple[int, ...]]
    weight: int
    signature: Optional[int]

    def leaves(self) -> Iterator["Leaf"]:
        yield self

    @property
    def total_weight(self) -> int:
        return self.weight

    def render(self) -> str:
        sign = "" if self.signature is None else ("+" if self.signature > 0 else "-")
        body = "" if self.indices is None else "[" + ",".join(map(str, self.indices)) + "]"
        return f"{body}w{self.weight}{sign}"

    def relabel(self, f: Callable[[int], int]) -> "Leaf":
        return Leaf(tuple(sorted(f(i) for i in self.indices)), self.weight, self.signature)

    def shape(self) -> "Leaf":
        return Leaf(None, self.weight, self.signature)


@dataclass(frozen=True)
class Node:
    left: "EulerTree"
    right: "EulerTree"

    def leaves(self) -> Iterator[Leaf]:
        yield from self.left.leaves()
        yield from self.right.leaves()

    @property
    def total_weight(self) -> int:
        return self.left.total_weight + self.right.total_weight

    def render(self) -> str:
        return f"({self.left.render()} {self.right.render()})"

    def relabel(self, f: Callable[[int], int]) -> "Node":
        return Node(self.left.relabel(f), self.right.relabel(f))

    def shape(self) -> "Node":
        return Node(self.left.shape(), self.right.shape())


EulerTree = Union[Leaf, Node]


def _labelled_leaves(tree: EulerTree, word: str = "") -> Iterator[tuple[str, Leaf]]:
    if isinstance(tree, Leaf):
        yield "R" + word, tree
    else:
        yield from _labelled_leaves(tree.left, word + "-")
        yield from _labelled_leaves(tree.right, word + "+")


def tree_partition(tree: EulerTree) -> Partition:
    """Leaves read left to right, labelled by their R_w words."""
    pairs = list(_labelled_leaves(tree))
    return Partition(tuple(l.indices for _, l in pairs), tuple(w for w, _ in pairs))


def _build(arr: np.ndarray, labels: tuple[int, ...]) -> EulerTree:
    eps = _eps(arr)
    if np.all(eps == eps[0]):
        return Leaf(tuple(sorted(labels)), len(labels) // 2, int(eps[0]))
    minus = np.flatnonzero(eps < 0)
    plus = np.flatnonzero(eps > 0)
    return Node(
        _build(arr[np.ix_(minus, minus)], tuple(labels[i] for i in minus)),
        _build(arr[np.ix_(plus, plus)], tuple(labels[i] for i in plus)),
    )


def euler_tree(X: SignMatrix) -> EulerTree:
    """Recursive R_-/R_+ split by row signs; leaves carry original labels."""
    if X.n % 2:
        raise EulerError(f"Euler tree needs even order, got {X.n}")
    return _build(X.entries, tuple(range(1, X.n + 1)))


def euler_partition(X: SignMatrix) -> Partition:
    return tree_partition(euler_tree(X))


def leaf_signature(X: SignMatrix) -> int:
    """Signature of an Eulerian matrix of even order (its common row sign)."""
    rs = row_signs(X)
    if not rs.trivial:
        raise EulerError(
            f"matrix is not Eulerian: rows split as R-={set(rs.minus)} R+={set(rs.plus)}"
        )
    return rs.eps[0]


def cross_invariants(
    X: SignMatrix, partition: Partition, anchors: Optional[Sequence[int]] = None
) -> np.ndarray:
    """Sign matrix ``a`` over the classes of the Euler partition.

    Off-diagonal ``a[i, j]`` is the product of all x_st with s in R_i and t in
    R_j.  The diagonal is the signature of the submatrix on R_i, computed
    from the fixed row ``anchors[i]`` (default: smallest element of R_i).
    """
    if X.n % 2:
        raise EulerError(f"cross invariants need even order, got {X.n}")
    if partition.as_sets() != euler_partition(X).as_sets():
        raise EulerError("partition is not the Euler partition of the matrix")
    classes = [np.asarray(c, dtype=np.intp) - 1 for c in partition.classes]
    if anchors is None:
        anchors = [min(c) for c in partition.classes]
    m = len(classes)
    a = np.zeros((m, m), dtype=np.int64)
    x = X.entries.astype(np.int64)
    for i, ri in enumerate(classes):
        s0 = anchors[i] - 1
        if s0 not in ri:
            raise EulerError(f"anchor {anchors[i]} not in class {partition.classes[i]}")
        sub = x[np.ix_(ri, ri)]
        row = np.prod([x[s0, t] for t in ri if t != s0], dtype=np.int64)
        a[i, i] = row * np.prod(sub[np.triu_indices(len(ri), k=1)], dtype=np.int64)
        for j in range(i + 1, m):
            a[i, j] = a[j, i] = np.prod(x[np.ix_(ri, classes[j])], dtype=np.int64)
    return a


# ---------------------------------------------------------------------------
# invariants of Eulerian matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantSummary:
    total_sum: int
    signature: int
    row_sum_histogram: dict[int, int]
    triangle_count: int
    degree_pair_edges: dict[tuple[int, int], int]

    def key(self) -> tuple:
        """Hashable form for comparing summaries."""
        return (
            self.total_sum,
            self.signature,
            tuple(sorted(self.row_sum_histogram.items())),
            self.triangle_count,
            tuple(sorted(self.degree_pair_edges.items())),
        )


def is_eulerian(X: SignMatrix) -> bool:
    """True when every row has an even number of +1 entries."""
    return bool(np.all(_plus_counts(X.entries) % 2 == 0))


def invariant_summary(XE: SignMatrix) -> InvariantSummary:
    if not is_eulerian(XE):
        raise EulerError("matrix is not Eulerian (some row has an odd number of +1 entries)")
    n = XE.n
    x = XE.entries.astype(np.int64)
    total = int(x.sum())
    signature = int(np.prod(x[np.triu_indices(n, k=1)])) if n > 1 else 1
    exponent, rem = divmod(-n * (n - 1) + total, 4)
    if rem or signature != (-1) ** exponent:
        raise RuntimeError(f"signature {signature} disagrees with total sum {total}")
    hist = Counter(int(s) for s in x.sum(axis=1))
    adj = (x > 0).astype(np.int64)
    triangles = int(np.trace(adj @ adj @ adj)) // 6
    deg = adj.sum(axis=1)
    pairs: Counter = Counter()
    for a, b in _plus_edges(XE):
        da, db = int(deg[a - 1]), int(deg[b - 1])
        pairs[(min(da, db), max(da, db))] += 1
    return InvariantSummary(total, signature, dict(sorted(hist.items())), triangles, dict(sorted(pairs.items())))


def eulerian_dot(report: OddEulerReport, name: str = "eulerian") -> str:
    """Graphviz DOT text for the Eulerian graph of an odd-order matrix."""
    lines = [f"graph {name} {{"]
    lines += [f"  {i};" for i in range(1, report.normalized.n + 1)]
    lines += [f"  {a} -- {b};" for a, b in report.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
