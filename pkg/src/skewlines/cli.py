"""Command-line front end.

Exit codes: 0 success, 1 for the negative answers of ``equiv`` and
``spindle``, 2 for input errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

from . import census, euler, signmat, spindle
from .signmat import SignMatrix, SignMatrixError
from .textio import (
    FormatError,
    format_matrix,
    format_permutation,
    format_vorticities,
    parse_matrix,
    parse_permutation,
    parse_vorticities,
)

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _matrix(path: str) -> SignMatrix:
    try:
        return parse_matrix(_read(path))
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _fmt_set(xs: Sequence[int]) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def cmd_validate(args, out: TextIO) -> int:
    X = _matrix(args.file)
    out.write(f"valid sign matrix of order {X.n}\n")
    return EXIT_OK


def cmd_euler(args, out: TextIO) -> int:
    X = _matrix(args.file)
    if X.n % 2:
        rep = euler.eulerian_normalize_odd(X)
        if args.dot:
            out.write(euler.eulerian_dot(rep))
            return EXIT_OK
        out.write(f"flipped: {_fmt_set(rep.flipped)}\n")
        out.write(f"partition: {rep.classes}\n")
        return EXIT_OK
    if args.dot:
        raise InputError("--dot is only available for odd order")
    tree = euler.euler_tree(X)
    out.write(f"partition: {euler.tree_partition(tree)}\n")
    out.write(f"tree: {tree.render()}\n")
    return EXIT_OK


def cmd_tree(args, out: TextIO) -> int:
    X = _matrix(args.file)
    if X.n % 2:
        raise InputError(f"Euler trees need even order, got {X.n}")
    out.write(euler.euler_tree(X).render() + "\n")
    return EXIT_OK


def _write_summary(s: euler.InvariantSummary, out: TextIO) -> None:
    out.write(f"total_sum: {s.total_sum}\n")
    out.write(f"signature: {s.signature:+d}\n")
    out.write("row_sums: " + " ".join(f"{k}:{v}" for k, v in s.row_sum_histogram.items()) + "\n")
    out.write(f"triangles: {s.triangle_count}\n")
    out.write(
        "degree_pair_edges: "
        + " ".join(f"({a},{b}):{c}" for (a, b), c in s.degree_pair_edges.items())
        + "\n"
    )


def cmd_invariants(args, out: TextIO) -> int:
    X = _matrix(args.file)
    if X.n % 2:
        rep = euler.eulerian_normalize_odd(X)
        out.write(f"partition: {rep.classes}\n")
        _write_summary(euler.invariant_summary(rep.normalized), out)
        return EXIT_OK
    rs = euler.row_signs(X)
    out.write("row_signs: " + " ".join(f"{e:+d}" for e in rs.eps) + "\n")
    part = euler.euler_partition(X)
    out.write(f"partition: {part}\n")
    a = euler.cross_invariants(X, part)
    out.write("cross_invariants:\n")
    for row in a.tolist():
        out.write(" ".join(f"{v:2d}" for v in row) + "\n")
    if euler.is_eulerian(X):
        _write_summary(euler.invariant_summary(X), out)
    return EXIT_OK


def cmd_charpoly(args, out: TextIO) -> int:
    p = signmat.char_poly(_matrix(args.file))
    out.write(f"charpoly: {p}\n")
    out.write(f"factored: {p.factored()}\n")
    return EXIT_OK


def cmd_equiv(args, out: TextIO) -> int:
    X, Y = _matrix(args.file1), _matrix(args.file2)
    if X.n != Y.n:
        out.write(f"not switching-equivalent (orders {X.n} and {Y.n})\n")
        return EXIT_NO
    if signmat.switching_equivalent(X, Y):
        out.write("switching-equivalent\n")
        return EXIT_OK
    out.write("not switching-equivalent\n")
    return EXIT_NO


def cmd_vorticity(args, out: TextIO) -> int:
    out.write(format_vorticities(signmat.all_vorticities(_matrix(args.file))))
    return EXIT_OK


def cmd_from_vorticity(args, out: TextIO) -> int:
    try:
        n, vort = parse_vorticities(_read(args.file))
    except FormatError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    out.write(format_matrix(signmat.matrix_from_vorticities(n, vort)))
    return EXIT_OK


def cmd_from_perm(args, out: TextIO) -> int:
    out.write(format_matrix(spindle.spindle_matrix(parse_permutation(args.perm))))
    return EXIT_OK


def cmd_spindle(args, out: TextIO) -> int:
    res = spindle.find_spindle(_matrix(args.file), prune=not args.no_prune)
    if res is None:
        out.write(spindle.NO_SPINDLE_MESSAGE + "\n")
        return EXIT_NO
    out.write(f"sigma: {format_permutation(res.sigma)}\n")
    out.write(f"gamma: {format_permutation(res.gamma)}\n")
    return EXIT_OK


def cmd_moves(args, out: TextIO) -> int:
    sigma = parse_permutation(args.perm)
    need = 2 if args.op == "circular" else 1
    if len(args.args) != need:
        raise InputError(f"--op {args.op} takes {need} integer argument(s)")
    if args.op == "circular":
        mu = spindle.move_circular(sigma, *args.args)
    elif args.op == "vertical":
        mu = spindle.move_vertical(sigma, *args.args)
    else:
        mu = spindle.move_horizontal(sigma, *args.args)
    out.write(format_permutation(mu) + "\n")
    return EXIT_OK


def cmd_count_trees(args, out: TextIO) -> int:
    if args.max < 0:
        raise InputError("--max must be nonnegative")
    counter = census.count_signed_weighted_trees if args.signed else census.count_weighted_trees
    for i, v in enumerate(counter(args.max)):
        out.write(f"{i} {v}\n")
    return EXIT_OK


def cmd_census(args, out: TextIO) -> int:
    result = census.enumerate_switching_classes(args.order, jobs=args.jobs)
    records = []
    for k, (X, note) in enumerate(zip(result.representatives, result.annotations), start=1):
        flag = "yes" if note.spindle is not None else "no"
        records.append(
            f"# class {k}: charpoly={note.charpoly}, euler={note.euler}, spindle={flag}\n"
            + format_matrix(X)
        )
    out.write("\n".join(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skewlines", description="Invariants of skew-line configurations from linking matrices."
    )
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        return sp

    verb("validate", cmd_validate, "check a matrix file").add_argument("file")
    sp = verb("euler", cmd_euler, "Eulerian partition (odd) or Euler tree (even)")
    sp.add_argument("file")
    sp.add_argument("--dot", action="store_true", help="emit the Eulerian graph as DOT (odd order)")
    verb("tree", cmd_tree, "render the Euler tree (even order)").add_argument("file")
    verb("invariants", cmd_invariants, "invariant summary").add_argument("file")
    verb("charpoly", cmd_charpoly, "exact characteristic polynomial").add_argument("file")
    sp = verb("equiv", cmd_equiv, "decide switching equivalence")
    sp.add_argument("file1")
    sp.add_argument("file2")
    verb("vorticity", cmd_vorticity, "list the vorticities of all triples").add_argument("file")
    verb("from-vorticity", cmd_from_vorticity, "rebuild a matrix from vorticities").add_argument("file")
    verb("from-perm", cmd_from_perm, "linking matrix of a spindle-permutation").add_argument("perm")
    sp = verb("spindle", cmd_spindle, "search for a spindle-permutation")
    sp.add_argument("file")
    sp.add_argument("--no-prune", action="store_true", help="skip the dead-end pruning test")
    sp = verb("moves", cmd_moves, "apply a spindle move to a permutation")
    sp.add_argument("perm")
    sp.add_argument("--op", required=True, choices=["circular", "vertical", "horizontal"])
    sp.add_argument("--args", type=int, nargs="+", required=True, metavar="INT")
    sp = verb("count-trees", cmd_count_trees, "count (signed) weighted Euler trees")
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--signed", action="store_true")
    sp = verb("census", cmd_census, "all switching classes of a given order")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, FormatError, SignMatrixError, euler.EulerError,
            spindle.SpindleError, census.CensusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
