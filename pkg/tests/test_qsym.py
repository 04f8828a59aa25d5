from fractions import Fraction

import pytest

from qweb.scalars import ScalarQ, ZERO, ONE, Q, QINV, QTILDE
from qweb.superlinear import identity, tensor_map, rank_of_vectors
from qweb.qsym import (
    index_set, parity, phi, natural_space, t_matrix,
    sym_basis, sym_dim, sym_normalize, sym_multiply, monomial_parity,
)
from _oracles import sym_ideal_reducer


class TestPhi:
    def test_equal_even(self):
        assert phi(1, 1) == 1

    def test_unrelated(self):
        assert phi(1, 2) == 0

    def test_signs(self):
        assert phi(-1, 1) == 1
        assert phi(1, -1) == -1


class TestTMatrix:
    def test_diagonal_case(self):
        t = t_matrix(1)
        # T(v_1 (x) v_1) = q v_1 (x) v_1 + qtilde v_{-1} (x) v_{-1}
        assert t.entries[((1, 1), (1, 1))] == Q
        assert t.entries[((-1, -1), (1, 1))] == QTILDE

    def test_off_diagonal_case(self):
        t = t_matrix(2)
        col = (1, 2)
        assert t.entries[((2, 1), col)] == ONE
        assert t.entries[((1, 2), col)] == QTILDE
        assert t.entries[((-1, -2), col)] == QTILDE

    @pytest.mark.parametrize("n", [1, 2])
    def test_hecke_relation(self, n):
        t = t_matrix(n)
        assert t @ t == t.scale(QTILDE) + identity(t.source)

    @pytest.mark.parametrize("n", [1, 2])
    def test_braid_relation(self, n):
        t = t_matrix(n)
        one = identity(natural_space(n))
        t1 = tensor_map(t, one)
        t2 = tensor_map(one, t)
        assert t1 @ t2 @ t1 == t2 @ t1 @ t2


class TestBasis:
    def test_degree_zero(self):
        assert sym_basis(0, 2) == ((),)
        assert sym_dim(0, 2) == 1

    def test_degree_one(self):
        for n in (1, 2, 3):
            assert len(sym_basis(1, n)) == 2 * n == sym_dim(1, n)

    def test_degree_two_n_one(self):
        # v_1 v_1 and v_{-1} v_1 survive; the odd square v_{-1} v_{-1} dies
        basis = sym_basis(2, 1)
        assert len(basis) == 2 == sym_dim(2, 1)
        assert (-1, -1) not in basis

    def test_dim_matches_enumeration(self):
        for n in (1, 2, 3):
            for d in range(5):
                assert len(sym_basis(d, n)) == sym_dim(d, n)


class TestNormalize:
    def test_ordered_is_fixed(self):
        assert sym_normalize((1, 2), 2) == {(1, 2): ONE}

    def test_idempotent_on_basis(self):
        for mono in sym_basis(3, 2):
            assert sym_normalize(mono, 2) == {mono: ONE}

    def test_odd_square_vanishes(self):
        assert sym_normalize((-1, -1), 1) == {}

    def test_v2_v1(self):
        got = sym_normalize((2, 1), 2)
        assert got == {(1, 2): QINV, (-2, -1): QINV * QTILDE}

    def test_v1_vminus1(self):
        # q v_{-1} v_1 = T-image forces v_1 v_{-1} = q^{-2} v_{-1} v_1
        got = sym_normalize((1, -1), 1)
        assert got == {(-1, 1): ScalarQ.q_power(-2)}


class TestIdealQuotientOracle:
    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("d", [2, 3])
    def test_normalize_agrees_with_oracle(self, d, n):
        red = sym_ideal_reducer(d, n)
        words = [()]
        for _ in range(d):
            words = [w + (i,) for w in words for i in index_set(n)]
        for w in words:
            diff = {w: ONE}
            for mono, c in sym_normalize(w, n).items():
                s = diff.get(mono, ZERO) - c
                if s:
                    diff[mono] = s
                elif mono in diff:
                    del diff[mono]
            assert red.reduce(diff) == {}, w

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("d", [2, 3])
    def test_basis_monomials_independent_in_quotient(self, d, n):
        red = sym_ideal_reducer(d, n)
        residues = [red.reduce({m: ONE}) for m in sym_basis(d, n)]
        assert all(residues)
        assert rank_of_vectors(residues, Fraction(7, 5)) == sym_dim(d, n)


class TestMultiply:
    def test_graded_commutativity_data(self):
        # products of degree-1 monomials re-expand consistently
        for a in index_set(2):
            for b in index_set(2):
                prod = sym_multiply((a,), (b,), 2)
                for mono in prod:
                    assert monomial_parity(mono) == (parity(a) + parity(b)) & 1
