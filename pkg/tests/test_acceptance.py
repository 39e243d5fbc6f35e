"""Acceptance gate. Each criterion reports one line in the terminal summary."""

import io
import itertools
import math
import time

import numpy as np
import sympy

from conftest import DATA, random_eulerian, random_sign_matrix
from skewlines.census import (
    class_codes,
    count_signed_weighted_trees,
    count_weighted_trees,
    enumerate_eulerian_graphs,
    enumerate_switching_classes,
    enumerate_trees,
)
from skewlines.cli import main
from skewlines.euler import Leaf, euler_partition, euler_tree, invariant_summary, row_signs
from skewlines.signmat import (
    SwitchingTransform,
    apply_switching,
    canonical_code,
    char_poly,
    matrix_from_code,
    switching_equivalent,
)
from skewlines.spindle import (
    find_spindle,
    move_circular,
    move_horizontal,
    move_vertical,
    spindle_closure,
    spindle_matrix,
)


def cli(*argv):
    buf = io.StringIO()
    return main(list(argv), out=buf), buf.getvalue()


def test_criterion_1_sequence_reproduction():
    t0 = time.perf_counter()
    code_a, plain = cli("count-trees", "--max", "9")
    code_b, signed = cli("count-trees", "--max", "9", "--signed")
    elapsed = time.perf_counter() - t0
    assert code_a == code_b == 0
    assert [int(l.split()[1]) for l in plain.splitlines()] == [1, 1, 2, 5, 15, 51, 188, 731, 2950, 12235]
    assert [int(l.split()[1]) for l in signed.splitlines()] == [1, 1, 3, 8, 27, 104, 436, 1930, 8871, 41916]
    assert elapsed < 1.0


def test_criterion_2_tree_count_agreement():
    t0 = time.perf_counter()
    alpha, beta = count_weighted_trees(8), count_signed_weighted_trees(8)
    for n in range(1, 9):
        assert len(enumerate_trees(n, signed=False)) == alpha[n]
        assert len(enumerate_trees(n, signed=True)) == beta[n]
    assert time.perf_counter() - t0 < 60


def test_criterion_3_tree10_golden(tree10):
    tree = euler_tree(tree10)
    assert tree.render() == "(([3,5]w1+ [6,10]w1+) [1,2,4,7,8,9]w3+)"
    assert euler_partition(tree10).classes == ((3, 5), (6, 10), (1, 2, 4, 7, 8, 9))
    leaves = list(tree.leaves())
    assert [l.weight for l in leaves] == [1, 1, 3]
    assert leaves[-1] == Leaf((1, 2, 4, 7, 8, 9), 3, 1)
    code, text = cli("euler", str(DATA / "tree10.txt"))
    assert code == 0 and "tree: (([3,5]w1+ [6,10]w1+) [1,2,4,7,8,9]w3+)\n" in text


def test_criterion_4_cospectral8_golden(cospectral8):
    first, second = cospectral8
    t = sympy.symbols("t")
    expanded = sympy.Poly(
        sympy.expand((t - 3) * (t - 1) ** 2 * (t + 1) * (t + 3) ** 2 * (t**2 - 2 * t - 11)), t
    )
    want = [int(c) for c in reversed(expanded.all_coeffs())]
    assert list(char_poly(first).coeffs) == want
    assert list(char_poly(second).coeffs) == want
    code, text = cli("equiv", str(DATA / "cospectral8_a.txt"), str(DATA / "cospectral8_b.txt"))
    assert (code, text) == (1, "not switching-equivalent\n")
    rs = row_signs(first)
    assert rs.minus == (2, 5, 7, 8) and rs.plus == (1, 3, 4, 6)
    left, right = euler_tree(first).leaves()
    assert (left.indices, left.signature) == ((2, 5, 7, 8), 1)
    assert (right.indices, right.signature) == ((1, 3, 4, 6), 1)
    assert row_signs(second).trivial
    assert euler_tree(second) == Leaf(tuple(range(1, 9)), 4, 1)


def test_criterion_5_census_counts():
    t0 = time.perf_counter()
    assert len(enumerate_switching_classes(5)) == 7
    assert len(enumerate_switching_classes(7)) == 54
    graphs = enumerate_eulerian_graphs(7)
    assert len(graphs) == 54
    assert len({g.degree_sequence() for g in graphs}) == 36
    assert len({2 * len(g.edges) for g in graphs}) == 18
    assert time.perf_counter() - t0 < 300


def test_criterion_6_charpoly_minimality():
    for n in range(1, 8):
        polys = [tuple(char_poly(matrix_from_code(n, c)).coeffs) for c in class_codes(n)]
        assert len(set(polys)) == len(polys), n


def test_criterion_7_spindle_round_trip():
    t0 = time.perf_counter()
    total = 0
    for n in range(1, 7):
        for sigma in itertools.permutations(range(1, n + 1)):
            X = spindle_matrix(sigma)
            for prune in (True, False):
                res = find_spindle(X, prune=prune)
                assert res is not None, (sigma, prune)
                assert res.verify(X)
                assert switching_equivalent(spindle_matrix(res.sigma), X)
            total += 1
    assert total == 720 + 120 + 24 + 6 + 2 + 1
    assert time.perf_counter() - t0 < 60


def test_criterion_8_move_invariance(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        sigma = tuple(int(v) + 1 for v in rng.permutation(n))
        X = spindle_matrix(sigma)
        kind = rng.choice(["circular", "vertical", "horizontal"]) if n > 1 else "circular"
        if kind == "circular":
            s, t = (int(v) for v in rng.integers(0, n, size=2))
            moved = move_circular(sigma, s, t)
            s2, t2 = (int(v) for v in rng.integers(0, n, size=2))
            assert move_circular(moved, s2, t2) == move_circular(sigma, (s + s2) % n, (t + t2) % n)
        else:
            lo = 1 if kind == "vertical" else 2
            ks = [k for k in range(lo, n + 1) if set(sigma[:k]) == set(range(1, k + 1))]
            k = int(rng.choice(ks))
            op = move_vertical if kind == "vertical" else move_horizontal
            moved = op(sigma, k)
            assert op(moved, k) == sigma
        assert canonical_code(spindle_matrix(moved)) == canonical_code(X)


def test_criterion_9_move_closure_matches_switching():
    t0 = time.perf_counter()
    for n in range(1, 6):
        perms = list(itertools.permutations(range(1, n + 1)))
        codes = {p: canonical_code(spindle_matrix(p)) for p in perms}
        closure_id = {}
        for p in perms:
            if p not in closure_id:
                for q in spindle_closure(p):
                    closure_id[q] = p
        for a, b in itertools.product(perms, repeat=2):
            assert (closure_id[a] == closure_id[b]) == (codes[a] == codes[b])
    assert time.perf_counter() - t0 < 120


def test_criterion_10_signature_identity(rng):
    for _ in range(1000):
        n = int(rng.integers(5, 10))
        XE = random_eulerian(rng, n)
        x = np.array(XE.tolist())
        total = int(x.sum())
        eps = math.prod(int(v) for v in x[np.triu_indices(n, k=1)])
        assert eps == (-1) ** ((-n * (n - 1) + total) // 4)
        assert invariant_summary(XE).signature == eps
    for _ in range(200):
        n = 2 * int(rng.integers(1, 7))
        X = random_sign_matrix(rng, n)
        vec = row_signs(X).eps
        assert math.prod(vec) == 1
        d = tuple(int(v) for v in rng.choice([-1, 1], size=n))
        assert row_signs(apply_switching(X, SwitchingTransform.from_signs(d))).eps == vec
