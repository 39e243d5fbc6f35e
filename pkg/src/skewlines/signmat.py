"""Sign matrices, switching, vorticities and switching-class canonical forms.

A sign matrix is a symmetric matrix with zero diagonal and off-diagonal
entries in {-1, +1}; it is the linking matrix of a labeled, oriented
configuration of skew lines.  All user-facing indices are 1-based.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "SignMatrixError",
    "SignMatrix",
    "SwitchingTransform",
    "IntPolynomial",
    "new_sign_matrix",
    "apply_switching",
    "vorticity",
    "all_vorticities",
    "matrix_from_vorticities",
    "char_poly",
    "canonical_code",
    "canonical_form",
    "orbit_codes",
    "matrix_from_code",
    "normalize_first_row",
    "switching_equivalent",
]


class SignMatrixError(ValueError):
    """Raised for malformed sign matrices and inconsistent inputs."""


@dataclass(frozen=True, eq=False)
class SignMatrix:
    """Immutable validated sign matrix.

    Use :func:`new_sign_matrix` or :meth:`from_rows` to build one; the
    constructor assumes ``entries`` is already a valid read-only int8 array.
    """

    entries: np.ndarray = field(repr=False)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SignMatrix":
        return new_sign_matrix(len(rows), rows)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        _check_index(self.n, i)
        _check_index(self.n, j)
        return int(self.entries[i - 1, j - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"SignMatrix({self.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def submatrix(self, indices: Iterable[int]) -> "SignMatrix":
        """Principal submatrix on the given 1-based indices, in that order."""
        idx = np.asarray([i - 1 for i in indices], dtype=np.intp)
        return _wrap(self.entries[np.ix_(idx, idx)])


def _wrap(arr: np.ndarray) -> SignMatrix:
    arr = np.array(arr, dtype=np.int8, copy=True)
    arr.setflags(write=False)
    return SignMatrix(arr)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")


def new_sign_matrix(n: int, entries) -> SignMatrix:
    """Validate ``entries`` as an order-``n`` sign matrix.

    Errors name the offending cell with 1-based (row, column).
    """
    if n < 1:
        raise SignMatrixError(f"order must be positive, got {n}")
    rows = [list(r) for r in entries]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SignMatrixError(f"entries must be {n}x{n}")
    arr = np.zeros((n, n), dtype=np.int8)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v != int(v):
                raise SignMatrixError(f"non-integer entry {v!r} at ({i + 1},{j + 1})")
            v = int(v)
            if i == j:
                if v != 0:
                    raise SignMatrixError(f"nonzero diagonal entry {v} at ({i + 1},{j + 1})")
            elif v not in (-1, 1):
                raise SignMatrixError(f"entry {v} at ({i + 1},{j + 1}) is not +1 or -1")
            arr[i, j] = v
    for i in range(n):
        for j in range(i + 1, n):
            if arr[i, j] != arr[j, i]:
                raise SignMatrixError(
                    f"asymmetric: entry ({i + 1},{j + 1}) = {arr[i, j]} "
                    f"but ({j + 1},{i + 1}) = {arr[j, i]}"
                )
    return _wrap(arr)


@dataclass(frozen=True)
class SwitchingTransform:
    """A relabeling ``perm`` (1-based one-line images) plus a sign vector.

    Acting on ``X`` gives ``Y[i][j] = signs[i] * signs[j] * X[perm(i)][perm(j)]``.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(int(p) for p in self.perm)
        signs = tuple(int(s) for s in self.signs)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise SignMatrixError(f"perm {perm} is not a bijection of 1..{len(perm)}")
        if len(signs) != len(perm):
            raise SignMatrixError("signs and perm have different lengths")
        if any(s not in (-1, 1) for s in signs):
            raise SignMatrixError(f"signs {signs} must be +1/-1")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SwitchingTransform":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SwitchingTransform":
        return cls(tuple(range(1, len(signs) + 1)), tuple(signs))

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "SwitchingTransform":
        return cls(tuple(perm), (1,) * len(perm))

    def then(self, other: "SwitchingTransform") -> "SwitchingTransform":
        """The transform equal to applying ``self`` first and ``other`` second."""
        if other.n != self.n:
            raise SignMatrixError("transform sizes differ")
        perm = tuple(self.perm[q - 1] for q in other.perm)
        signs = tuple(other.signs[i] * self.signs[other.perm[i] - 1] for i in range(self.n))
        return SwitchingTransform(perm, signs)


def apply_switching(X: SignMatrix, T: SwitchingTransform) -> SignMatrix:
    if T.n != X.n:
        raise SignMatrixError(f"transform of size {T.n} applied to order-{X.n} matrix")
    p = np.asarray(T.perm, dtype=np.intp) - 1
    d = np.asarray(T.signs, dtype=np.int8)
    return _wrap(X.entries[np.ix_(p, p)] * np.outer(d, d))


def vorticity(X: SignMatrix, i: int, j: int, k: int) -> int:
    """Product x_ij * x_jk * x_ki of a triple of distinct lines."""
    for a in (i, j, k):
        _check_index(X.n, a)
    if len({i, j, k}) != 3:
        raise SignMatrixError(f"indices ({i},{j},{k}) are not pairwise distinct")
    return X[i, j] * X[j, k] * X[k, i]


def all_vorticities(X: SignMatrix) -> dict[tuple[int, int, int], int]:
    return {
        t: vorticity(X, *t)
        for t in itertools.combinations(range(1, X.n + 1), 3)
    }


def matrix_from_vorticities(n: int, vort: Mapping[Sequence[int], int]) -> SignMatrix:
    """Rebuild a linking matrix from the vorticities of all triples.

    Line 1 is oriented arbitrarily and the others so that they cross it
    positively; then ``x_ab = vort(1, a, b)``.  Keys may be any ordering of
    a triple.  The triples avoiding line 1 are checked for consistency.
    """
    table: dict[tuple[int, int, int], int] = {}
    for key, v in vort.items():
        t = tuple(sorted(int(a) for a in key))
        if len(t) != 3 or len(set(t)) != 3 or not all(1 <= a <= n for a in t):
            raise SignMatrixError(f"bad triple {tuple(key)} for order {n}")
        if v not in (-1, 1):
            raise SignMatrixError(f"vorticity of {t} must be +1/-1, got {v}")
        if table.get(t, v) != v:
            raise SignMatrixError(f"conflicting values given for triple {t}")
        table[t] = int(v)

    def lookup(t: tuple[int, int, int]) -> int:
        try:
            return table[t]
        except KeyError:
            raise SignMatrixError(f"missing vorticity for triple {t}") from None

    rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    for a, b in itertools.combinations(range(2, n + 1), 2):
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = lookup((1, a, b))
    X = new_sign_matrix(n, rows)
    for t in itertools.combinations(range(2, n + 1), 3):
        if vorticity(X, *t) != lookup(t):
            raise SignMatrixError(f"inconsistent vorticities: triple {t} is not realizable")
    return X


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial in ``t``; ``coeffs`` are degree-ascending."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    def divide_linear(self, r: int) -> "IntPolynomial":
        """Quotient by (t - r); ``r`` must be a root."""
        q = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            q.append(acc)
        if q.pop() != 0:
            raise ValueError(f"{r} is not a root")
        return IntPolynomial(tuple(reversed(q)))

    def integer_roots(self) -> tuple[dict[int, int], "IntPolynomial"]:
        """Split off all integer roots: returns (root -> multiplicity, cofactor)."""
        roots: dict[int, int] = {}
        p = self
        while p.degree > 0 and p.coeffs[0] == 0:
            p = IntPolynomial(p.coeffs[1:])
            roots[0] = roots.get(0, 0) + 1
        if p.degree <= 0:
            return roots, p
        c0 = abs(p.coeffs[0])
        divisors = set()
        for d in range(1, math.isqrt(c0) + 1):
            if c0 % d == 0:
                divisors.update((d, c0 // d))
        for d in sorted(divisors):
            for r in (d, -d):
                while p.degree > 0 and p(r) == 0:
                    p = p.divide_linear(r)
                    roots[r] = roots.get(r, 0) + 1
        return roots, p

    def __str__(self) -> str:
        return _format_poly(self.coeffs)

    def factored(self) -> str:
        """Product of linear integer factors times a leftover factor, if any."""
        roots, rest = self.integer_roots()
        parts = []
        for r in sorted(roots, reverse=True):
            lin = "t" if r == 0 else (f"t - {r}" if r > 0 else f"t + {-r}")
            m = roots[r]
            factor = lin if r == 0 else f"({lin})"
            parts.append(factor + (f"^{m}" if m > 1 else ""))
        if rest.degree > 0 or rest.coeffs != (1,) or not parts:
            parts.append(f"({rest})" if parts else str(rest))
        return "".join(parts)


def _format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
        body = str(mag) if d == 0 or mag != 1 else ""
        body += mono
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


def _berkowitz(a: list[list[int]]) -> list[int]:
    """Coefficients of det(tI - A), degree-descending, division-free."""
    poly = [1]
    for r in range(1, len(a) + 1):
        col_r = [a[i][r - 1] for i in range(r - 1)]
        row_r = a[r - 1][: r - 1]
        toeplitz = [1, -a[r - 1][r - 1]]
        v = col_r
        for _ in range(r - 1):
            toeplitz.append(-sum(x * y for x, y in zip(row_r, v)))
            v = [sum(a[i][k] * v[k] for k in range(r - 1)) for i in range(r - 1)]
        poly = [
            sum(toeplitz[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(toeplitz))
            for i in range(r + 1)
        ]
    return poly


def char_poly(X: SignMatrix) -> IntPolynomial:
    """Exact characteristic polynomial det(tI - X)."""
    return IntPolynomial(tuple(reversed(_berkowitz(X.tolist()))))


# ---------------------------------------------------------------------------
# canonical form
#
# A matrix whose first row is all +1 is encoded by the bits of the upper
# triangle of its lower-right (n-1)x(n-1) block in row-major order, most
# significant first, +1 -> 1.  Minimal code == lexicographically minimal
# matrix.  The orbit of X inside this normalized space is obtained by
# choosing the line sent to position 1 (n ways; the sign vector is then
# forced up to a global flip) and ordering the others ((n-1)! ways).
# ---------------------------------------------------------------------------

_PERM_CHUNK = 40320


@lru_cache(maxsize=None)
def _perm_table(m: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(m))), dtype=np.intp).reshape(-1, m)


@lru_cache(maxsize=None)
def _block_pairs(m: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(m, k=1)
    weights = (1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)).astype(np.int64)
    return iu, ju, weights


def normalize_first_row(X: SignMatrix, line: int = 1) -> SignMatrix:
    """Switch signs so that row ``line`` is all +1, then move it to position 1."""
    n = X.n
    d = X.entries[line - 1].astype(np.int8).copy()
    d[line - 1] = 1
    perm = (line,) + tuple(i for i in range(1, n + 1) if i != line)
    Y = _wrap(X.entries * np.outer(d, d))
    return apply_switching(Y, SwitchingTransform.from_perm(perm))


def _block_bits(X: SignMatrix, line: int) -> np.ndarray:
    Y = normalize_first_row(X, line)
    return (Y.entries[1:, 1:] > 0).astype(np.int64)


def orbit_codes(X: SignMatrix) -> np.ndarray:
    """Codes of every first-row-normalized matrix switching-equivalent to X.

    Cost is n * (n-1)! block gathers: fine up to n ~ 10.
    """
    n = X.n
    if n <= 2:
        return np.zeros(1, dtype=np.int64)
    m = n - 1
    perms = _perm_table(m)
    iu, ju, weights = _block_pairs(m)
    out = []
    for line in range(1, n + 1):
        bits = _block_bits(X, line)
        for start in range(0, len(perms), _PERM_CHUNK):
            p = perms[start:start + _PERM_CHUNK]
            out.append(bits[p[:, iu], p[:, ju]] @ weights)
    return np.concatenate(out)


def canonical_code(X: SignMatrix) -> int:
    return int(orbit_codes(X).min())


def matrix_from_code(n: int, code: int) -> SignMatrix:
    """The first-row-normalized order-``n`` matrix with the given block code."""
    arr = np.ones((n, n), dtype=np.int8)
    np.fill_diagonal(arr, 0)
    if n > 2:
        iu, ju, _ = _block_pairs(n - 1)
        npairs = len(iu)
        for k in range(npairs):
            bit = (code >> (npairs - 1 - k)) & 1
            v = 1 if bit else -1
            arr[iu[k] + 1, ju[k] + 1] = arr[ju[k] + 1, iu[k] + 1] = v
    return _wrap(arr)


def canonical_form(X: SignMatrix) -> SignMatrix:
    """Lexicographically minimal first-row-normalized member of X's switching class.

    Exhaustive over n choices of leading line and (n-1)! orderings of the
    rest, so O(n! * n^2); intended for n <= 10.
    """
    return matrix_from_code(X.n, canonical_code(X))


def switching_equivalent(X: SignMatrix, Y: SignMatrix) -> bool:
    if X.n != Y.n:
        raise SignMatrixError(f"orders differ: {X.n} vs {Y.n}")
    return canonical_code(X) == canonical_code(Y)


def num_block_pairs(n: int) -> int:
    return math.comb(n - 1, 2) if n > 2 else 0
