from fractions import Fraction
from functools import lru_cache
from itertools import product
import random

import pytest

from qweb.scalars import ScalarQ, ZERO, ONE, Q, QINV, QTILDE, SQRT_MINUS_ONE, qint
from qweb.superlinear import SuperMap, rank_of_vectors
from qweb.qsym import index_set, parity, sym_basis, sym_dim
from qweb.aqhowe import (
    fold, factor_parity, aq_normalize, aq_basis, weight_space,
    act, act_matrix, divided_power_act, divided_power_matrix,
    sym_space, dual_sym_space, sym_action_matrix, dual_action_matrix,
    dot_on_sym, udot_operator,
)
from _oracles import aq_ideal_reducer, _aq_words

_Q = ScalarQ.q_power


def _degree_basis(d, m, n):
    """All ordered basis monomials of total degree d."""
    out = []

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for lam in compositions(d, m):
        out.extend(aq_basis(m, n, lam))
    return out


class TestStraightening:
    def test_fold(self):
        assert fold((-2, 1)) == (2, -1)
        assert fold((2, -1)) == (2, -1)

    def test_basis_monomials_fixed(self):
        for mono in _degree_basis(2, 2, 2):
            assert aq_normalize(mono) == {mono: ONE}

    def test_odd_square_dies(self):
        assert aq_normalize(((1, -1), (1, -1))) == {}

    def test_t21_t11(self):
        got = aq_normalize(((2, 1), (1, 1)))
        assert got == {((1, 1), (2, 1)): QINV,
                       ((1, -1), (2, -1)): QTILDE}

    def test_same_row_matches_sym(self):
        # within one row the exchange is the symmetric-algebra rule
        got = aq_normalize(((1, 1), (1, -1)))
        assert got == {((1, -1), (1, 1)): _Q(-2)}

    @pytest.mark.parametrize("d", [2, 3])
    def test_agrees_with_ideal_quotient_oracle(self, d):
        m = n = 2
        red = aq_ideal_reducer(d, m, n)
        for w in _aq_words(m, n, d):
            diff = {w: ONE}
            for mono, c in aq_normalize(w).items():
                s = diff.get(mono, ZERO) - c
                if s:
                    diff[mono] = s
                elif mono in diff:
                    del diff[mono]
            assert red.reduce(diff) == {}, w

    @pytest.mark.parametrize("d", [2, 3])
    def test_basis_independent_in_quotient(self, d):
        m = n = 2
        red = aq_ideal_reducer(d, m, n)
        basis = _degree_basis(d, m, n)
        residues = [red.reduce({mono: ONE}) for mono in basis]
        assert all(residues)
        assert rank_of_vectors(residues, Fraction(7, 5)) == len(basis)

    def test_weight_space_dims(self):
        for m, n, lam in [(2, 2, (1, 1)), (2, 2, (2, 0)), (2, 1, (2, 1)),
                          (3, 2, (1, 1, 1)), (2, 2, (3, 1))]:
            expect = 1
            for k in lam:
                expect *= sym_dim(k, n)
            assert weight_space(m, n, lam).dim == expect


class TestGeneratorAction:
    def test_row_lowering(self):
        for b in index_set(2):
            got = act("m", "E", 1, {((2, b),): ONE})
            assert got == {((1, b),): ONE}

    def test_row_raising(self):
        for b in index_set(2):
            got = act("m", "F", 1, {((1, b),): ONE})
            assert got == {((2, b),): ONE}

    def test_row_weight(self):
        got = act("m", "K", 1, {((1, 1), (1, 2)): ONE})
        assert got == {((1, 1), (1, 2)): _Q(2)}

    def test_row_dot_on_generator(self):
        assert act("m", "Kbar", 1, {((1, 1),): ONE}) == \
            {((1, -1),): SQRT_MINUS_ONE}
        assert act("m", "Kbar", 1, {((1, -1),): ONE}) == \
            {((1, 1),): -SQRT_MINUS_ONE}

    def test_column_dot_on_generator(self):
        for a in (1, 2):
            assert act("n", "Kbar", 1, {((a, 1),): ONE}) == {((a, -1),): ONE}
            assert act("n", "Kbar", 1, {((a, -1),): ONE}) == {((a, 1),): ONE}

    def test_column_weight(self):
        # v_b and v_{-b} carry the same column weight
        got = act("n", "K", 1, {((1, 1), (2, -1)): ONE})
        assert got == {((1, 1), (2, -1)): _Q(2)}
        got = act("n", "K", 2, {((1, 2), (2, 2)): ONE})
        assert got == {((1, 2), (2, 2)): _Q(2)}

    @pytest.mark.parametrize("kind,r", [("E", 1), ("F", 1), ("K", 1),
                                        ("Kinv", 2), ("Kbar", 1)])
    @pytest.mark.parametrize("side", ["m", "n"])
    def test_well_defined_on_quotient(self, side, kind, r):
        # acting before or after straightening gives the same answer
        m = n = 2
        for w in _aq_words(m, n, 2):
            direct = act(side, kind, r, {w: ONE})
            via_basis = {}
            for mono, c in aq_normalize(w).items():
                for mono2, c2 in act(side, kind, r, {mono: ONE}).items():
                    s = via_basis.get(mono2, ZERO) + c * c2
                    if s:
                        via_basis[mono2] = s
                    elif mono2 in via_basis:
                        del via_basis[mono2]
            assert direct == via_basis, w

    @pytest.mark.parametrize("mkind", ["E", "F", "K", "Kinv", "Kbar"])
    @pytest.mark.parametrize("nkind", ["E", "F", "K", "Kinv", "Kbar"])
    def test_two_actions_supercommute(self, mkind, nkind):
        m = n = 2
        sign = -ONE if (mkind == "Kbar" and nkind == "Kbar") else ONE
        for mono in _degree_basis(2, m, n):
            lhs = act("n", nkind, 1, act("m", mkind, 1, {mono: ONE}))
            rhs = act("m", mkind, 1, act("n", nkind, 1, {mono: ONE}))
            rhs = {k: sign * v for k, v in rhs.items()}
            assert lhs == rhs, mono


class TestDividedPowers:
    @staticmethod
    def _closed_form(r, a, xs):
        """Sum of q^gamma monomials over row tuples with a entries equal to r."""
        b = len(xs)
        out = {}
        for rows in product((r, r + 1), repeat=b):
            if rows.count(r) != a:
                continue
            gamma = sum(1 for p in range(b) for s in range(p + 1, b)
                        if rows[p] == r and rows[s] == r + 1)
            word = tuple(zip(rows, xs))
            for mono, c in aq_normalize(word).items():
                s = out.get(mono, ZERO) + _Q(gamma) * c
                if s:
                    out[mono] = s
                elif mono in out:
                    del out[mono]
        return out

    def test_matches_closed_form_short(self):
        n = 2
        for b in (1, 2):
            for xs in product(index_set(n), repeat=b):
                word = tuple((2, x) for x in xs)
                for a in range(1, b + 1):
                    got = divided_power_act("m", "E", 1, a, {word: ONE})
                    assert got == self._closed_form(1, a, xs), (xs, a)

    def test_matches_closed_form_sampled_cubics(self):
        n = 2
        rng = random.Random(0)
        triples = rng.sample(list(product(index_set(n), repeat=3)), 30)
        for xs in triples:
            word = tuple((2, x) for x in xs)
            for a in (1, 2, 3):
                got = divided_power_act("m", "E", 1, a, {word: ONE})
                assert got == self._closed_form(1, a, xs), (xs, a)

    def test_divided_power_matrix_is_laurent(self):
        mat = divided_power_matrix("m", "E", 1, 2, 2, 2, (0, 2))
        assert all(v.is_laurent() for v in mat.entries.values())
        assert mat.target == weight_space(2, 2, (2, 0))


# --- the idempotented relation suite -----------------------------------

# Symbols for words of operators on a fixed row weight:
#   ("E", i) ("F", i)       simple raising/lowering
#   ("Ebar", i) ("Fbar", i) odd partners, realized through the dot relations
#   ("Kbar", i)             the odd Cartan dot
# Words act right-to-left; coefficients may depend on the weight at the
# moment a symbol is applied.


def _shift(sym, lam):
    kind, i = sym
    lam = list(lam)
    if kind in ("E", "Ebar"):
        lam[i - 1] += 1
        lam[i] -= 1
    elif kind in ("F", "Fbar"):
        lam[i - 1] -= 1
        lam[i] += 1
    return tuple(lam)


def _expand_sym(sym, lam):
    """Rewrite one symbol as scalar combinations of primitive operator words."""
    kind, i = sym
    if kind in ("E", "F"):
        return [(ONE, ((kind, i, 1),))]
    if kind == "Kbar":
        return [(ONE, (("Kbar", i),))]
    if kind == "Ebar":
        c = _Q(lam[i - 1])
        return [(c, (("Kbar", i), ("E", i, 1))),
                (-c * Q, (("E", i, 1), ("Kbar", i)))]
    if kind == "Fbar":
        c = -_Q(-lam[i - 1])
        return [(c, (("Kbar", i), ("F", i, 1))),
                (-c * Q, (("F", i, 1), ("Kbar", i)))]
    raise ValueError(sym)


@lru_cache(maxsize=None)
def _word_op(syms, lam, m, n):
    """Operator of a word of symbols applied right-to-left at weight lam."""
    terms = [(ONE, ())]
    cur = lam
    for sym in reversed(syms):
        pieces = _expand_sym(sym, cur)
        terms = [(c * c2, w2 + w) for c, w in terms for c2, w2 in pieces]
        cur = _shift(sym, cur)
    total = None
    for c, w in terms:
        mat = udot_operator(w, lam, m, n).scale(c)
        total = mat if total is None else total + mat
    return total


def _qnum2(k):
    """(q^{2k} - q^{-2k})/(q^2 - q^{-2})."""
    return qint(k, 2)


def _relation_instances(m):
    """Yield (lhs-terms, rhs-terms) as weight-dependent term lists.

    Each side is a list of (coeff_fn(lam) -> ScalarQ, word); the relation
    asserts the two operator sums agree on every dominant weight.
    """
    one = lambda lam: ONE
    rels = []

    def add(lhs, rhs):
        rels.append((lhs, rhs))

    for i in range(1, m):
        for j in range(1, m):
            lhs = [(one, (("E", i), ("F", j))), (lambda l: -ONE, (("F", j), ("E", i)))]
            if i == j:
                ii = i
                rhs = [(lambda l, ii=ii: qint(l[ii - 1] - l[ii]), ())]
            else:
                rhs = []
            add(lhs, rhs)
    for i in range(1, m):
        for j in range(1, m):
            if abs(i - j) > 1:
                for kind in ("E", "F"):
                    add([(one, ((kind, i), (kind, j)))],
                        [(one, ((kind, j), (kind, i)))])
            if abs(i - j) == 1:
                for kind in ("E", "F"):
                    add([(one, ((kind, i), (kind, i), (kind, j))),
                         (lambda l: -(Q + QINV), ((kind, i), (kind, j), (kind, i))),
                         (one, ((kind, j), (kind, i), (kind, i)))], [])
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            lhs = [(one, (("Kbar", i), ("Kbar", j))),
                   (one, (("Kbar", j), ("Kbar", i)))]
            if i == j:
                ii = i
                rhs = [(lambda l, ii=ii: 2 * _qnum2(l[ii - 1]), ())]
            else:
                rhs = []
            add(lhs, rhs)
    for i in range(1, m + 1):
        for j in range(1, m):
            ii, jj = i, j
            lhs = [(one, (("Kbar", i), ("E", j))),
                   (lambda l: -Q, (("E", j), ("Kbar", i)))]
            if j == i:
                add(lhs, [(lambda l, ii=ii: _Q(-l[ii - 1]), (("Ebar", ii),))])
            elif j == i - 1:
                # q Kbar_i E_{i-1} - E_{i-1} Kbar_i = -q^{-(lam_i - 1)} Ebar_{i-1}
                add([(lambda l: Q, (("Kbar", ii), ("E", jj))),
                     (lambda l: -ONE, (("E", jj), ("Kbar", ii)))],
                    [(lambda l, ii=ii: -_Q(-(l[ii - 1] - 1)), (("Ebar", jj),))])
            else:
                add([(one, (("Kbar", ii), ("E", jj))),
                     (lambda l: -ONE, (("E", jj), ("Kbar", ii)))], [])
            if j == i:
                add([(one, (("Kbar", ii), ("F", jj))),
                     (lambda l: -Q, (("F", jj), ("Kbar", ii)))],
                    [(lambda l, ii=ii: -_Q(l[ii - 1]), (("Fbar", ii),))])
            elif j == i - 1:
                # q Kbar_i F_{i-1} - F_{i-1} Kbar_i = q^{lam_i + 1} Fbar_{i-1}
                add([(lambda l: Q, (("Kbar", ii), ("F", jj))),
                     (lambda l: -ONE, (("F", jj), ("Kbar", ii)))],
                    [(lambda l, ii=ii: _Q(l[ii - 1] + 1), (("Fbar", jj),))])
            else:
                add([(one, (("Kbar", ii), ("F", jj))),
                     (lambda l: -ONE, (("F", jj), ("Kbar", ii)))], [])
    for i in range(1, m):
        for j in range(1, m):
            ii = i
            lhs = [(one, (("E", i), ("Fbar", j))),
                   (lambda l: -ONE, (("Fbar", j), ("E", i)))]
            if i == j:
                rhs = [(lambda l, ii=ii: _Q(-l[ii]), (("Kbar", ii),)),
                       (lambda l, ii=ii: -_Q(-l[ii - 1]), (("Kbar", ii + 1),))]
            else:
                rhs = []
            add(lhs, rhs)
            lhs = [(one, (("Ebar", i), ("F", j))),
                   (lambda l: -ONE, (("F", j), ("Ebar", i)))]
            if i == j:
                rhs = [(lambda l, ii=ii: _Q(l[ii]), (("Kbar", ii),)),
                       (lambda l, ii=ii: -_Q(l[ii - 1]), (("Kbar", ii + 1),))]
            else:
                rhs = []
            add(lhs, rhs)
    for i in range(1, m):
        add([(one, (("E", i), ("Ebar", i)))], [(one, (("Ebar", i), ("E", i)))])
        add([(one, (("F", i), ("Fbar", i)))], [(one, (("Fbar", i), ("F", i)))])
    for i in range(1, m - 1):
        add([(one, (("E", i), ("E", i + 1))), (lambda l: -Q, (("E", i + 1), ("E", i)))],
            [(one, (("Ebar", i), ("Ebar", i + 1))),
             (lambda l: Q, (("Ebar", i + 1), ("Ebar", i)))])
        add([(lambda l: Q, (("F", i + 1), ("F", i))), (lambda l: -ONE, (("F", i), ("F", i + 1)))],
            [(one, (("Fbar", i), ("Fbar", i + 1))),
             (lambda l: Q, (("Fbar", i + 1), ("Fbar", i)))])
    for i in range(1, m):
        for j in range(1, m):
            if abs(i - j) != 1:
                continue
            for kind, bark in (("E", "Ebar"), ("F", "Fbar")):
                add([(one, ((kind, i), (kind, i), (bark, j))),
                     (lambda l: -(Q + QINV), ((kind, i), (bark, j), (kind, i))),
                     (one, ((bark, j), (kind, i), (kind, i)))], [])
    return rels


def _dominant_weights(m, total_max):
    out = []

    def build(prefix, remaining):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            build(prefix + [k], remaining - k)

    for d in range(total_max + 1):
        build([], d)
    return out


def _side_op(terms, lam, m, n):
    total = None
    for coeff_fn, word in terms:
        mat = _word_op(word, lam, m, n).scale(coeff_fn(lam))
        total = mat if total is None else total + mat
    return total


@pytest.mark.parametrize("m,n,total", [(2, 2, 3), (3, 1, 3)])
def test_idempotented_relations(m, n, total):
    weights = _dominant_weights(m, total)
    for lhs, rhs in _relation_instances(m):
        for lam in weights:
            left = _side_op(lhs, lam, m, n)
            if not rhs:
                assert not left, (lhs, lam)
                continue
            right = _side_op(rhs, lam, m, n)
            assert left == right, (lhs, lam)


class TestSymSpaces:
    def test_sym_space_dims(self):
        for k in range(4):
            for n in (1, 2):
                assert sym_space(k, n).dim == sym_dim(k, n)
                assert dual_sym_space(k, n).dim == sym_dim(k, n)

    def test_dot_squares_to_identity_like(self):
        # the thickness-1 dot squares to the identity on V_n
        for n in (1, 2):
            d = dot_on_sym(1, n)
            sq = d @ d
            assert sq.scalar_of() == ONE

    def test_dual_weight_action(self):
        # K_1 on the dual of V_1: the dual vector of v_1 has weight -1
        mat = dual_action_matrix("K", 1, 1, 1)
        lbl = (("*", (1,)),)
        assert mat.entries[(lbl, lbl)] == QINV

    def test_evaluation_equivariance(self):
        # <x . f, v> + (-1)^{p(f)p(x)} <f, x . v> pairs to the counit action:
        # concretely, for E and F the pairing of (g.f)(v) + f(g.v) with the
        # coproduct counit must vanish on V_n; spot-check via matrices:
        # dual action is minus transpose conjugated by K-factors, so
        # composing action and dual action of K gives the identity.
        for n in (1, 2):
            k_dual = dual_action_matrix("K", 1, 1, n)
            k_fwd = sym_action_matrix("K", 1, 1, n)
            pairing = {}
            for ((row,), (col,)), val in k_dual.entries.items():
                pairing[(row[1], col[1])] = val
            for (row_, col_), val in k_fwd.entries.items():
                row, col = row_[0], col_[0]
                assert pairing[(col, row)] * val == ONE
