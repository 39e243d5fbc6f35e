"""Plain-text formats for sign matrices, permutations and vorticity lists.

Matrix format: ``#`` starts a comment running to end of line; the first token
is the order n, followed by n*n entries from {-1, 0, 1} in row-major order.
"""

from __future__ import annotations

import re
from typing import Iterator, Sequence

from .signmat import SignMatrix, SignMatrixError, new_sign_matrix

__all__ = [
    "FormatError",
    "parse_matrix",
    "format_matrix",
    "parse_permutation",
    "format_permutation",
    "parse_vorticities",
    "format_vorticities",
]

_TOKEN = re.compile(r"\S+")


class FormatError(ValueError):
    """Malformed text input; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            yield m.group(), lineno, m.start() + 1


def parse_matrix(text: str | bytes) -> SignMatrix:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    toks = list(_tokens(text))
    if not toks:
        raise FormatError("empty input: expected the matrix order")
    head, line, col = toks[0]
    try:
        n = int(head)
    except ValueError:
        raise FormatError(f"expected the matrix order, got {head!r}", line, col) from None
    if n < 1:
        raise FormatError(f"matrix order must be positive, got {n}", line, col)
    body = toks[1:]
    values = []
    for tok, line, col in body[: n * n]:
        if tok not in ("-1", "0", "1", "+1"):
            raise FormatError(f"bad entry {tok!r}", line, col)
        values.append(int(tok))
    if len(body) < n * n:
        last_line, last_col = (body[-1][1], body[-1][2]) if body else (line, col)
        raise FormatError(
            f"expected {n * n} entries for order {n}, found {len(body)}", last_line, last_col
        )
    if len(body) > n * n:
        tok, line, col = body[n * n]
        raise FormatError(f"unexpected extra token {tok!r} after {n * n} entries", line, col)
    rows = [values[i * n:(i + 1) * n] for i in range(n)]
    try:
        return new_sign_matrix(n, rows)
    except SignMatrixError as exc:
        raise FormatError(str(exc)) from None


def format_matrix(X: SignMatrix) -> str:
    lines = [str(X.n)]
    lines += [" ".join(f"{v:2d}" for v in row) for row in X.tolist()]
    return "\n".join(lines) + "\n"


def parse_permutation(text: str | Sequence[str]) -> tuple[int, ...]:
    """One-line images such as ``"1 4 2 5 3"`` (commas also accepted)."""
    if not isinstance(text, str):
        text = " ".join(text)
    toks = text.replace(",", " ").split()
    try:
        sigma = tuple(int(t) for t in toks)
    except ValueError:
        raise FormatError(f"permutation images must be integers: {text!r}") from None
    if not sigma or sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise FormatError(f"{text!r} is not a permutation of 1..{len(sigma)}")
    return sigma


def format_permutation(sigma: Sequence[int]) -> str:
    return " ".join(str(s) for s in sigma)


def parse_vorticities(text: str) -> tuple[int, dict[tuple[int, int, int], int]]:
    """Lines ``i j k v``; returns the order (largest index seen) and the map."""
    vort: dict[tuple[int, int, int], int] = {}
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 4:
            raise FormatError(f"expected 'i j k sign', got {len(body)} tokens", lineno, 1)
        try:
            i, j, k, v = (int(t) for t in body)
        except ValueError:
            raise FormatError("non-integer token", lineno, 1) from None
        if min(i, j, k) < 1:
            raise FormatError("indices are 1-based", lineno, 1)
        vort[(i, j, k)] = v
        n = max(n, i, j, k)
    if not vort:
        raise FormatError("no vorticities given")
    return n, vort


def format_vorticities(vort: dict[tuple[int, int, int], int]) -> str:
    return "".join(f"{i} {j} {k} {v:2d}\n" for (i, j, k), v in sorted(vort.items()))
