"""Spindle-permutations: linking matrices, equivalence moves and reconstruction.

Permutations are one-line images ``(sigma(1), ..., sigma(n))`` on 1..n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .signmat import SignMatrix, SwitchingTransform, _wrap, apply_switching, switching_equivalent

__all__ = [
    "SpindleError",
    "ClosureBoundExceeded",
    "SpindleResult",
    "NO_SPINDLE_MESSAGE",
    "check_permutation",
    "spindle_matrix",
    "move_circular",
    "move_vertical",
    "move_horizontal",
    "neighbours",
    "spindle_closure",
    "spindle_equivalent",
    "spindle_equivalent_by_matrix",
    "find_spindle",
]

NO_SPINDLE_MESSAGE = "no spindle structure exists for this switching class"

DEFAULT_CLOSURE_BOUND = 10**6


class SpindleError(ValueError):
    pass


class ClosureBoundExceeded(RuntimeError):
    """The move closure grew past its safety bound before deciding."""


def check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise SpindleError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def spindle_matrix(sigma: Sequence[int]) -> SignMatrix:
    """Linking matrix x_ij = sign((i - j)(sigma(i) - sigma(j)))."""
    s = np.asarray(check_permutation(sigma), dtype=np.int64)
    i = np.arange(1, len(s) + 1)
    return _wrap(np.sign(np.subtract.outer(i, i) * np.subtract.outer(s, s)))


def _mod1(x: int, n: int) -> int:
    # residues in 1..n, with 0 represented by n
    return (x - 1) % n + 1


def move_circular(sigma: Sequence[int], s: int, t: int) -> tuple[int, ...]:
    """mu(i) = s + sigma(i + t), everything mod n with representatives in 1..n."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    if not (0 <= s < n and 0 <= t < n):
        raise SpindleError(f"shifts must lie in 0..{n - 1}, got s={s}, t={t}")
    return tuple(_mod1(s + sigma[_mod1(i + t, n) - 1], n) for i in range(1, n + 1))


def _block_ok(sigma: tuple[int, ...], k: int) -> bool:
    return 1 <= k <= len(sigma) and set(sigma[:k]) == set(range(1, k + 1))


def move_vertical(sigma: Sequence[int], k: int) -> tuple[int, ...]:
    """Reverse the leading block: mu(i) = k + 1 - sigma(k + 1 - i) for i <= k."""
    sigma = check_permutation(sigma)
    if not _block_ok(sigma, k):
        raise SpindleError(f"sigma([1,{k}]) != [1,{k}] for {sigma}")
    head = tuple(k + 1 - sigma[k - i] for i in range(1, k + 1))
    return head + sigma[k:]


def move_horizontal(sigma: Sequence[int], k: int) -> tuple[int, ...]:
    """Invert the leading block: mu(i) = sigma^-1(i) for i <= k."""
    sigma = check_permutation(sigma)
    if k <= 1 or not _block_ok(sigma, k):
        raise SpindleError(f"horizontal move needs 1 < k and sigma([1,{k}]) = [1,{k}]")
    inv = [0] * k
    for i in range(k):
        inv[sigma[i] - 1] = i + 1
    return tuple(inv) + sigma[k:]


def neighbours(sigma: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All permutations one move away from ``sigma``."""
    n = len(sigma)
    for s in range(n):
        for t in range(n):
            yield move_circular(sigma, s, t)
    for k in range(1, n + 1):
        if _block_ok(sigma, k):
            yield move_vertical(sigma, k)
            if k > 1:
                yield move_horizontal(sigma, k)


def spindle_closure(sigma: Sequence[int], bound: int = DEFAULT_CLOSURE_BOUND) -> set[tuple[int, ...]]:
    """Breadth-first closure of ``sigma`` under all three kinds of move."""
    start = check_permutation(sigma)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise ClosureBoundExceeded(f"closure exceeded {bound} permutations")
                queue.append(nxt)
    return seen


def spindle_equivalent(
    a: Sequence[int], b: Sequence[int], bound: int = DEFAULT_CLOSURE_BOUND
) -> bool:
    """Whether ``b`` is reachable from ``a`` by spindle moves."""
    a, b = check_permutation(a), check_permutation(b)
    if len(a) != len(b):
        raise SpindleError(f"sizes differ: {len(a)} vs {len(b)}")
    return b in spindle_closure(a, bound)


def spindle_equivalent_by_matrix(a: Sequence[int], b: Sequence[int]) -> bool:
    """Same question answered through switching classes of the linking matrices."""
    if len(a) != len(b):
        raise SpindleError(f"sizes differ: {len(a)} vs {len(b)}")
    return switching_equivalent(spindle_matrix(a), spindle_matrix(b))


@dataclass(frozen=True)
class SpindleResult:
    """``sigma`` realizes X; ``gamma[i-1]`` is the row of X used for line i."""

    sigma: tuple[int, ...]
    gamma: tuple[int, ...]

    def transform(self, X: SignMatrix) -> SwitchingTransform:
        """Switching transform carrying X onto ``spindle_matrix(sigma)``."""
        signs = [1] + [X[1, j] for j in range(2, X.n + 1)]
        return SwitchingTransform(self.gamma, tuple(signs[g - 1] for g in self.gamma))

    def verify(self, X: SignMatrix) -> bool:
        return apply_switching(X, self.transform(X)) == spindle_matrix(self.sigma)


def find_spindle(X: SignMatrix, prune: bool = True) -> Optional[SpindleResult]:
    """Backtracking search for a spindle-permutation in the switching class of X.

    Returns None when no spindle exists.  ``prune`` toggles the dead-end test
    (condition 3), which only cuts the search and never changes the answer.
    """
    n = X.n
    if n == 1:
        return SpindleResult((1,), (1,))
    d = X.entries[0].astype(np.int64)
    d[0] = 1
    x = (X.entries * np.outer(d, d)).tolist()
    x = [[0] + row for row in x]
    x.insert(0, [0] * (n + 1))
    minus_count = [0] + [sum(1 for v in row[1:] if v == -1) for row in x[1:]]

    gamma = [0] * (n + 1)
    sigma = [0] * (n + 1)
    used = [False] * (n + 1)
    gamma[1] = sigma[1] = 1
    used[1] = True
    k = 2
    gamma[2] = 1
    while True:
        gamma[k] += 1
        g = gamma[k]
        sigma[k] = 1 + minus_count[g] + sum(x[gamma[s]][g] for s in range(1, k))
        ok = not used[g]
        if ok:
            sk = sigma[k]
            for s in range(1, k):
                diff = sk - sigma[s]
                if x[g][gamma[s]] != (diff > 0) - (diff < 0):
                    ok = False
                    break
        if ok and prune:
            ok = _dead_end_free(x, gamma, used, k, n)
        if ok:
            if k == n:
                result = SpindleResult(tuple(sigma[1:]), tuple(gamma[1:]))
                check_permutation(result.sigma)
                return result
            used[g] = True
            k += 1
            gamma[k] = 1
            continue
        while gamma[k] == n:
            k -= 1
            used[gamma[k]] = False
        if k == 1:
            return None


def _dead_end_free(x: list[list[int]], gamma: list[int], used: list[bool], k: int, n: int) -> bool:
    g = gamma[k]
    for j in range(1, n + 1):
        if used[j] or j == g:
            continue
        xj = x[j]
        for s in range(1, k):
            gs = gamma[s]
            if xj[gs] * x[gs][g] == -1 and xj[g] != xj[gs]:
                return False
    return True
