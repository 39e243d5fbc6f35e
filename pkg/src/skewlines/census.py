"""Counting and enumeration: weighted Euler trees, switching classes, Eulerian graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .euler import Leaf, Node, EulerTree, euler_tree, eulerian_normalize_odd
from .signmat import (
    SignMatrix,
    _block_pairs,
    _perm_table,
    char_poly,
    matrix_from_code,
    num_block_pairs,
    orbit_codes,
)
from .spindle import find_spindle

__all__ = [
    "CensusError",
    "count_weighted_trees",
    "count_signed_weighted_trees",
    "enumerate_trees",
    "ClassAnnotation",
    "ClassCensus",
    "enumerate_switching_classes",
    "EulerianGraph",
    "enumerate_eulerian_graphs",
]

SWITCHING_BOUND = 8
EULERIAN_BOUND = 7


class CensusError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weighted Euler trees
# ---------------------------------------------------------------------------


def _tree_counts(N: int, leaf: list[int]) -> list[int]:
    # G = L + G^2 with G = F - 1; leaf[n] counts single-leaf trees of weight n
    g = [0] * (N + 1)
    for n in range(1, N + 1):
        g[n] = leaf[n] + sum(g[i] * g[n - i] for i in range(1, n))
    return [1] + g[1:]


def count_weighted_trees(N: int) -> list[int]:
    """alpha_0..alpha_N: weighted Euler trees by total weight."""
    if N < 0:
        raise CensusError("N must be nonnegative")
    return _tree_counts(N, [0] + [1] * N)


def count_signed_weighted_trees(N: int) -> list[int]:
    """beta_0..beta_N: leaves of weight >= 2 additionally carry a sign."""
    if N < 0:
        raise CensusError("N must be nonnegative")
    return _tree_counts(N, [0] + [1 if n == 1 else 2 for n in range(1, N + 1)])


@lru_cache(maxsize=None)
def _trees(n: int, signed: bool) -> tuple[EulerTree, ...]:
    if signed and n >= 2:
        out: list[EulerTree] = [Leaf(None, n, 1), Leaf(None, n, -1)]
    else:
        out = [Leaf(None, n, 1 if signed else None)]
    for i in range(1, n):
        for left in _trees(i, signed):
            for right in _trees(n - i, signed):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_trees(n: int, signed: bool = False) -> list[EulerTree]:
    """All plane (signed) weighted Euler tree shapes of total weight ``n``.

    In signed shapes weight-1 leaves carry +1, the only possible signature.
    """
    if n < 1:
        raise CensusError("total weight must be at least 1")
    return list(_trees(n, signed))


# ---------------------------------------------------------------------------
# switching classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassAnnotation:
    charpoly: str
    euler: str
    spindle: Optional[tuple[int, ...]]


@dataclass(frozen=True)
class ClassCensus:
    order: int
    representatives: tuple[SignMatrix, ...]
    annotations: tuple[ClassAnnotation, ...]

    def __len__(self) -> int:
        return len(self.representatives)


def euler_description(X: SignMatrix) -> str:
    if X.n % 2:
        return str(eulerian_normalize_odd(X).classes)
    return euler_tree(X).render()


def annotate(X: SignMatrix) -> ClassAnnotation:
    res = find_spindle(X)
    return ClassAnnotation(str(char_poly(X)), euler_description(X), res.sigma if res else None)


def class_codes(n: int) -> list[int]:
    """Canonical codes of all switching classes of order ``n``, ascending.

    Walks the 2^C(n-1,2) first-row-normalized matrices; the smallest code not
    yet reached is a new class minimum, and its whole orbit is marked.
    """
    if n <= 2:
        return [0]
    seen = np.zeros(1 << num_block_pairs(n), dtype=bool)
    codes = []
    start = 0
    while True:
        rest = seen[start:]
        if rest.all():
            return codes
        c = start + int(np.argmin(rest))
        codes.append(c)
        seen[orbit_codes(matrix_from_code(n, c))] = True
        start = c + 1


def enumerate_switching_classes(
    n: int, bound: int = SWITCHING_BOUND, annotations: bool = True, jobs: int = 1
) -> ClassCensus:
    """One canonical representative per switching class of order ``n``.

    Representatives are sorted lexicographically.  ``jobs > 1`` computes the
    annotations in worker processes; the result does not depend on ``jobs``.
    """
    if n < 1:
        raise CensusError("order must be positive")
    if n > bound:
        raise CensusError(f"order {n} exceeds census bound {bound}")
    reps = tuple(matrix_from_code(n, c) for c in class_codes(n))
    notes: tuple[ClassAnnotation, ...] = ()
    if annotations:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                notes = tuple(pool.map(annotate, reps, chunksize=max(1, len(reps) // (4 * jobs))))
        else:
            notes = tuple(annotate(X) for X in reps)
    return ClassCensus(n, reps, notes)


# ---------------------------------------------------------------------------
# Eulerian graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerianGraph:
    """Simple graph on 1..n with all degrees even, in lex-min labeling."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a - 1] += 1
            deg[b - 1] += 1
        return tuple(deg)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def sign_matrix(self) -> SignMatrix:
        """The Eulerian linking matrix: +1 on edges, -1 on non-edges."""
        arr = -np.ones((self.n, self.n), dtype=np.int8)
        np.fill_diagonal(arr, 0)
        for a, b in self.edges:
            arr[a - 1, b - 1] = arr[b - 1, a - 1] = 1
        return SignMatrix.from_rows(arr.tolist())


def _eulerian_adjacency(n: int, code: int) -> np.ndarray:
    # free edges among vertices 0..n-2 from ``code``; vertex n-1 fixes parity
    adj = np.zeros((n, n), dtype=np.int64)
    iu, ju, _ = _block_pairs(n - 1)
    npairs = len(iu)
    for k in range(npairs):
        if (code >> (npairs - 1 - k)) & 1:
            adj[iu[k], ju[k]] = adj[ju[k], iu[k]] = 1
    odd = adj.sum(axis=1) % 2 == 1
    adj[n - 1, :] = adj[:, n - 1] = odd
    adj[n - 1, n - 1] = 0
    return adj


def enumerate_eulerian_graphs(n: int, bound: int = EULERIAN_BOUND) -> list[EulerianGraph]:
    """Isomorphism classes of Eulerian graphs on ``n`` vertices (n odd).

    Each class is labeled by its lexicographically minimal upper-triangle
    adjacency over all n! vertex orders; cost O(classes * n! * n^2).
    """
    if n % 2 == 0:
        raise CensusError(f"Eulerian census is for odd orders, got {n}")
    if n > bound:
        raise CensusError(f"order {n} exceeds census bound {bound}")
    if n == 1:
        return [EulerianGraph(1, ())]
    perms = _perm_table(n)
    iu_r, ju_r, w_r = _block_pairs(n - 1)
    iu_f, ju_f, w_f = _block_pairs(n)
    seen = np.zeros(1 << len(iu_r), dtype=bool)
    graphs = []
    start = 0
    while not seen[start:].all():
        c = start + int(np.argmin(seen[start:]))
        adj = _eulerian_adjacency(n, c)
        best = None
        for lo in range(0, len(perms), 40320):
            p = perms[lo:lo + 40320]
            seen[adj[p[:, iu_r], p[:, ju_r]] @ w_r] = True
            full = adj[p[:, iu_f], p[:, ju_f]] @ w_f
            lo_code = int(full.min())
            best = lo_code if best is None else min(best, lo_code)
        npairs = len(iu_f)
        edges = tuple(
            (int(iu_f[k]) + 1, int(ju_f[k]) + 1)
            for k in range(npairs)
            if (best >> (npairs - 1 - k)) & 1
        )
        graphs.append(EulerianGraph(n, edges))
        start = c + 1
    graphs.sort(key=lambda g: (len(g.edges), g.edges))
    return graphs
