import random

import pytest

from qweb.scalars import ScalarQ, ZERO, ONE, QTILDE
from qweb.webir import BraidWord
from qweb.evaluator import EvalContext
from qweb.invariants import (
    KAPPA, LinkPresentation, cut_closure, tangle_scalar, framing_factor,
    invariant, kappa_circle, kappa_recursion_coefficient,
    kappa_recursion_check,
)

from _oracles import conway_polynomial

UNKNOT = "braid 1 [1] :"
TREFOIL = "braid 2 [1,1] : s1 s1 s1"
FIGURE_EIGHT = "braid 3 [1,1,1] : s1 s-2 s1 s-2"


@pytest.fixture(scope="module")
def ctx1():
    return EvalContext(1, cap=10 ** 6)


@pytest.fixture(scope="module")
def ctx2():
    return EvalContext(2, cap=10 ** 7)


def conway_at_qtilde(word, strands):
    out = ZERO
    for e, c in conway_polynomial(word, strands).items():
        out = out + (QTILDE ** e) * c
    return out


class TestKnotValues:
    def test_unknot_is_one(self, ctx1):
        assert invariant(UNKNOT, ctx1) == ONE

    def test_trefoil(self, ctx1):
        expected = ScalarQ.q_power(2) - ONE + ScalarQ.q_power(-2)
        assert invariant(TREFOIL, ctx1) == expected
        assert expected == QTILDE * QTILDE + ONE

    def test_figure_eight(self, ctx1):
        assert invariant(FIGURE_EIGHT, ctx1) == ONE - QTILDE * QTILDE

    def test_mirror_trefoil_agrees(self, ctx1):
        assert invariant("braid 2 [1,1] : s-1 s-1 s-1", ctx1) == \
            invariant(TREFOIL, ctx1)

    def test_rank_independence(self, ctx1, ctx2):
        for link in (TREFOIL, FIGURE_EIGHT):
            assert invariant(link, ctx1) == invariant(link, ctx2)

    def test_hopf_link(self, ctx1):
        assert invariant("braid 2 [1,1] : s1 s1", ctx1) == QTILDE

    def test_split_unlink_vanishes(self, ctx1):
        # two-component closure of the empty word on two strands
        assert invariant("braid 2 [1,1] :", ctx1) == ZERO


class TestConwayOracle:
    def test_oracle_base_cases(self):
        assert conway_polynomial((), 1) == {0: 1}
        assert conway_polynomial((), 2) == {}
        assert conway_polynomial((1, 1, 1), 2) == {0: 1, 2: 1}

    @pytest.mark.parametrize("word,strands", [
        ((1, 1, 1), 2), ((1, -2, 1, -2), 3), ((1, 1), 2),
        ((1, 1, 1, 1, 1), 2), ((1, 2, 1, 2), 3),
        ((-1, -1, 2, -1, 2), 3), ((1, 1, -2, 1, -2), 3),
    ])
    def test_invariant_matches_oracle(self, word, strands, ctx1):
        braid = BraidWord(strands, (1,) * strands, word)
        assert invariant(braid.pretty(), ctx1) == \
            conway_at_qtilde(word, strands)

    def test_random_braids_match_oracle(self, ctx1):
        rng = random.Random(17)
        for _ in range(6):
            strands = rng.choice((2, 3))
            word = tuple(rng.choice((1, -1)) * rng.randrange(1, strands)
                         for _ in range(rng.randrange(2, 6)))
            braid = BraidWord(strands, (1,) * strands, word)
            assert invariant(braid.pretty(), ctx1) == \
                conway_at_qtilde(word, strands), (word, strands)


class TestFraming:
    def test_factor_values(self):
        assert framing_factor(1, 5) == ONE
        assert framing_factor(2, 1) == ScalarQ.q_power(2)
        assert framing_factor(2, 1) * framing_factor(2, -1) == ONE

    def test_kink_scales_unnormalized_scalar(self, ctx1):
        plain = LinkPresentation("braid 1 [2] :")
        kinked = LinkPresentation("braid 1 [2] :", kinks=(1,))
        assert tangle_scalar(kinked, ctx1) == \
            tangle_scalar(plain, ctx1) * ScalarQ.q_power(2)

    def test_negative_kink(self, ctx1):
        plain = LinkPresentation("braid 1 [2] :")
        kinked = LinkPresentation("braid 1 [2] :", kinks=(-1,))
        assert tangle_scalar(kinked, ctx1) == \
            tangle_scalar(plain, ctx1) * ScalarQ.q_power(-2)

    def test_framed_invariant_is_framing_independent(self, ctx1):
        for kinks in ((1,), (-2,), (3,)):
            assert invariant(
                LinkPresentation("braid 1 [2] :", kinks=kinks), ctx1) == ONE

    def test_thin_kinks_are_invisible(self, ctx1):
        kinked = LinkPresentation(TREFOIL, kinks=(1, 0))
        assert invariant(kinked, ctx1) == invariant(TREFOIL, ctx1)


class TestColoredUnknots:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_normalized_to_one(self, k, ctx1):
        assert invariant(
            LinkPresentation("braid 1 [{}] :".format(k)), ctx1) == ONE


class TestClosureStructure:
    def test_unknot_closure_is_identity_strand(self):
        d = cut_closure(LinkPresentation(UNKNOT))
        assert d.source.word == d.target.word == (("u", 1),)
        assert not d.slices

    def test_trefoil_closure_boundary(self):
        d = cut_closure(LinkPresentation(TREFOIL))
        assert d.source.word == d.target.word == (("u", 1),)

    def test_mismatched_labels_rejected(self):
        with pytest.raises(ValueError, match="closure mismatch"):
            cut_closure(LinkPresentation("braid 2 [1,2] : s1"))

    def test_kink_count_validation(self):
        with pytest.raises(ValueError, match="kink"):
            LinkPresentation(UNKNOT, kinks=(1, 2))


class TestKappa:
    def test_kappa_times_qtilde_is_two(self):
        assert KAPPA * QTILDE == ONE + ONE

    def test_thin_circle_value(self):
        assert kappa_circle(1) == KAPPA

    def test_pair_circle_value(self):
        assert kappa_circle(2) == (ONE + ONE) / (QTILDE * QTILDE)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_recursion_matches_closed_product(self, k):
        assert kappa_recursion_check(k)

    def test_coefficient_simplification_k3(self):
        got = kappa_recursion_coefficient(3)
        from qweb.scalars import qint
        expected = (ScalarQ.q_power(2) + ScalarQ.q_power(-2)) \
            / (qint(3, 1) * QTILDE)
        assert got == expected
