import itertools

import pytest
from hypothesis import given, strategies as st

from skewlines.census import class_codes
from skewlines.signmat import (
    SignMatrix,
    apply_switching,
    canonical_code,
    matrix_from_code,
    switching_equivalent,
    vorticity,
)
from skewlines.spindle import (
    ClosureBoundExceeded,
    SpindleError,
    find_spindle,
    move_circular,
    move_horizontal,
    move_vertical,
    spindle_closure,
    spindle_equivalent,
    spindle_equivalent_by_matrix,
    spindle_matrix,
)

SIGMA5 = (1, 4, 2, 5, 3)


def is_odd(sigma):
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j]) % 2


class TestSpindleMatrix:
    def test_five_lines(self, spindle5):
        assert spindle_matrix(SIGMA5) == spindle5

    def test_identity_and_reversal(self):
        assert spindle_matrix((1, 2, 3)).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        assert spindle_matrix((3, 2, 1)).tolist() == [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]

    def test_not_a_permutation(self):
        with pytest.raises(SpindleError):
            spindle_matrix((1, 1, 2))

    @given(st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))))
    def test_row1_positive_when_fixed(self, sigma):
        X = spindle_matrix(sigma)
        assert isinstance(X, SignMatrix)
        if sigma[0] == 1:
            assert all(X[1, j] == 1 for j in range(2, len(sigma) + 1))


class TestMoves:
    def test_circular_zero(self):
        assert move_circular(SIGMA5, 0, 0) == SIGMA5

    def test_circular_value(self):
        assert move_circular(SIGMA5, 1, 0) == (2, 5, 3, 1, 4)

    def test_circular_formula(self):
        # oracle: literal modular evaluation with residue 0 read as n
        n = 5
        for s in range(n):
            for t in range(n):
                want = []
                for i in range(1, n + 1):
                    j = (i + t) % n or n
                    want.append((s + SIGMA5[j - 1]) % n or n)
                assert move_circular(SIGMA5, s, t) == tuple(want)

    def test_circular_range(self):
        with pytest.raises(SpindleError):
            move_circular(SIGMA5, 5, 0)

    def test_vertical_full(self):
        assert move_vertical(SIGMA5, 5) == (3, 1, 4, 2, 5)

    def test_vertical_k1(self):
        assert move_vertical(SIGMA5, 1) == SIGMA5

    def test_vertical_block_violated(self):
        with pytest.raises(SpindleError):
            move_vertical(SIGMA5, 2)

    def test_horizontal_full(self):
        assert move_horizontal(SIGMA5, 5) == (1, 3, 5, 2, 4)

    def test_horizontal_errors(self):
        with pytest.raises(SpindleError):
            move_horizontal(SIGMA5, 1)
        with pytest.raises(SpindleError):
            move_horizontal(SIGMA5, 3)

    def test_partial_blocks(self):
        sigma = (2, 3, 1, 5, 4)
        assert move_vertical(sigma, 3) == (3, 1, 2, 5, 4)
        assert move_horizontal(sigma, 3) == (3, 1, 2, 5, 4)
        assert move_horizontal(sigma, 5) == (3, 1, 2, 5, 4)

    @given(st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))), st.data())
    def test_involutions_and_group_law(self, sigma, data):
        n = len(sigma)
        for k in range(1, n + 1):
            if set(sigma[:k]) == set(range(1, k + 1)):
                assert move_vertical(move_vertical(sigma, k), k) == tuple(sigma)
                if k > 1:
                    assert move_horizontal(move_horizontal(sigma, k), k) == tuple(sigma)
        s1, t1, s2, t2 = (data.draw(st.integers(0, n - 1)) for _ in range(4))
        assert move_circular(move_circular(sigma, s1, t1), s2, t2) == move_circular(
            sigma, (s1 + s2) % n, (t1 + t2) % n
        )


class TestEquivalence:
    def test_vertical_is_equivalent(self):
        assert spindle_equivalent(SIGMA5, move_vertical(SIGMA5, 5))

    def test_identity_vs_reversal(self):
        # every vorticity is +1 for one and -1 for the other, so no switching joins them
        ident, rev = (1, 2, 3, 4), (4, 3, 2, 1)
        assert vorticity(spindle_matrix(ident), 1, 2, 3) == -vorticity(spindle_matrix(rev), 1, 2, 3)
        assert not spindle_equivalent_by_matrix(ident, rev)
        assert not spindle_equivalent(ident, rev)

    def test_reversal_of_two_circular(self):
        assert spindle_equivalent((1, 2), (2, 1))

    def test_inequivalent(self):
        a, b = (1, 2, 3, 4), (2, 4, 1, 3)
        assert not spindle_equivalent_by_matrix(a, b)
        assert not spindle_equivalent(a, b)

    def test_size_mismatch(self):
        with pytest.raises(SpindleError):
            spindle_equivalent((1, 2), (1, 2, 3))

    def test_bound(self):
        with pytest.raises(ClosureBoundExceeded):
            spindle_closure((1, 2, 3, 4, 5, 6), bound=5)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_closure_matches_switching(self, n):
        perms = list(itertools.permutations(range(1, n + 1)))
        codes = {p: canonical_code(spindle_matrix(p)) for p in perms}
        for p in perms:
            closure = spindle_closure(p)
            assert closure == {q for q in perms if codes[q] == codes[p]}


class TestFindSpindle:
    def test_five_line_spindle(self, spindle5):
        res = find_spindle(spindle5)
        assert res is not None and res.verify(spindle5)
        assert spindle_equivalent(res.sigma, SIGMA5)

    def test_order3_negative_vorticity(self):
        X = SignMatrix.from_rows([[0, 1, 1], [1, 0, -1], [1, -1, 0]])
        assert vorticity(X, 1, 2, 3) == -1
        res = find_spindle(X)
        # oracle: the order-3 spindle matrices with vorticity -1 come from odd perms
        odd = [p for p in itertools.permutations((1, 2, 3)) if vorticity(spindle_matrix(p), 1, 2, 3) == -1]
        assert all(is_odd(p) for p in odd)
        assert res.sigma in odd and is_odd(res.sigma)
        assert res.sigma == (1, 3, 2)

    def test_order1_and_2(self):
        assert find_spindle(SignMatrix.from_rows([[0]])).sigma == (1,)
        assert find_spindle(SignMatrix.from_rows([[0, -1], [-1, 0]])).sigma == (1, 2)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_soundness_against_brute_force(self, n):
        spindle_codes = {
            canonical_code(spindle_matrix(p)) for p in itertools.permutations(range(1, n + 1))
        }
        missing = 0
        for c in class_codes(n):
            X = matrix_from_code(n, c)
            for prune in (True, False):
                res = find_spindle(X, prune=prune)
                assert (res is not None) == (c in spindle_codes)
                if res is not None:
                    assert res.verify(X)
            missing += c not in spindle_codes
        assert missing == (1 if n == 6 else 0)

    def test_skew6(self, skew6):
        spindle_codes = {canonical_code(spindle_matrix(p)) for p in itertools.permutations(range(1, 7))}
        res = find_spindle(skew6)
        assert (res is not None) == (canonical_code(skew6) in spindle_codes)
        assert res is not None and res.verify(skew6)
        assert switching_equivalent(spindle_matrix(res.sigma), skew6)

    def test_closing_identity_cellwise(self, skew6):
        res = find_spindle(skew6)
        x = skew6.tolist()
        d = [1] + [x[0][j] for j in range(1, 6)]
        norm = [[d[i] * d[j] * x[i][j] for j in range(6)] for i in range(6)]
        g, s = res.gamma, res.sigma
        for i in range(6):
            for j in range(6):
                want = (i - j) * (s[i] - s[j])
                assert norm[g[i] - 1][g[j] - 1] == (want > 0) - (want < 0)

    def test_relabeled_inputs(self, rng):
        for _ in range(30):
            n = int(rng.integers(3, 9))
            sigma = tuple(int(v) + 1 for v in rng.permutation(n))
            perm = tuple(int(v) + 1 for v in rng.permutation(n))
            signs = tuple(int(v) for v in rng.choice([-1, 1], size=n))
            from skewlines.signmat import SwitchingTransform

            X = apply_switching(spindle_matrix(sigma), SwitchingTransform(perm, signs))
            res = find_spindle(X)
            assert res is not None and res.verify(X)
