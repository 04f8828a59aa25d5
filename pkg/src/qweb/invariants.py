"""Link invariants from braid closures, plus circle values in the
kappa-modified category.

A link is presented as a braid whose closure is cut along the first
strand, giving a 1-1 tangle whose evaluation is a scalar multiple of the
identity; that scalar, normalized by the like-labelled unknot and the
framing twist factor, is the invariant.  For thin labels it agrees with
the Alexander-Conway polynomial at z = q - q^{-1}.

The kappa mode replaces the vanishing clockwise circle by the nonzero
value 2/(q - q^{-1}); only the resulting closed-circle scalars are
modelled, as symbolic rational functions.
"""

from .scalars import ScalarQ, ONE, QTILDE, qint, qfact
from .webir import (
    UP, DOWN, WebObject, BraidWord, braid_diagram, parse_braid,
    lcup, lcap, rcup, rcap, over_cross, under_cross,
    identity_diagram, from_generator, compose, tensor, tensor_all,
    compose_all,
)
from .evaluator import EvalContext, eval_diagram


class LinkPresentation:
    """A braid together with per-strand framing kinks.

    The closure joins the top of every strand to its own bottom around
    the right-hand side; the first strand is cut open, so its label is
    the label of the resulting 1-1 tangle.
    """

    __slots__ = ("braid", "kinks")

    def __init__(self, braid, kinks=None):
        if isinstance(braid, str):
            braid = parse_braid(braid)
        if kinks is None:
            kinks = (0,) * braid.strands
        kinks = tuple(int(x) for x in kinks)
        if len(kinks) != braid.strands:
            raise ValueError("expected {} kink counts, got {}".format(
                braid.strands, len(kinks)))
        self.braid = braid
        self.kinks = kinks

    @property
    def label(self):
        return self.braid.labels[0]

    def writhe(self):
        return sum(1 if x > 0 else -1 for x in self.braid.letters) + \
            sum(self.kinks)


def _curl_diagram(k, positive):
    """A kink on an upward k-strand; positive kinks scale by q^(k(k-1))."""
    make = under_cross if positive else over_cross
    id_u = identity_diagram(WebObject(((UP, k),)))
    return compose_all([
        tensor(id_u, from_generator(rcup(k))),
        tensor(from_generator(make((UP, k), (DOWN, k))), id_u),
        tensor(from_generator(lcap(k)), id_u),
    ])


def _with_kinks(diagram, labels, kinks):
    out = diagram
    for pos, (k, count) in enumerate(zip(labels, kinks)):
        if not count:
            continue
        curl = _curl_diagram(k, count > 0)
        for _ in range(abs(count)):
            layer = tensor_all(
                [identity_diagram(WebObject(tuple(
                    (UP, x) for x in labels[:pos]))),
                 curl,
                 identity_diagram(WebObject(tuple(
                     (UP, x) for x in labels[pos + 1:])))])
            out = compose(out, layer)
    return out


def cut_closure(link):
    """The 1-1 tangle obtained by closing all strands but the first.

    Closure arcs nest around the right: the bottom of strand j meets a
    cup whose partner sits at the mirrored position, and the innermost
    cap is applied first.
    """
    braid = link.braid
    labels = braid.labels
    core = _with_kinks(braid_diagram(braid), labels, link.kinks)
    m = braid.strands
    bottom = identity_diagram(WebObject(((UP, labels[0]),)))
    for j in range(1, m):
        word = bottom.target.word
        bottom = compose(tensor_all([
            identity_diagram(WebObject(word[:j])),
            from_generator(lcup(labels[j])),
            identity_diagram(WebObject(word[j:])),
        ]), bottom)
    arcs = WebObject(bottom.target.word[m:])
    out = compose(tensor(core, identity_diagram(arcs)), bottom)
    for j in range(m - 1, 0, -1):
        word = out.target.word
        if word[j][1] != word[j + 1][1]:
            raise ValueError(
                "closure mismatch: strand label {} meets arc label {}"
                .format(word[j][1], word[j + 1][1]))
        out = compose(tensor_all([
            identity_diagram(WebObject(word[:j])),
            from_generator(rcap(word[j][1])),
            identity_diagram(WebObject(word[j + 2:])),
        ]), out)
    return out


def tangle_scalar(link, ctx):
    """The unnormalized scalar of the cut closure.

    Raises ValueError("not scalar") if the evaluation is not a multiple
    of the identity, which would signal an evaluation bug.
    """
    return eval_diagram(cut_closure(link), ctx).scalar_of()


def framing_factor(k, kinks):
    """q^(k(k-1)) per positive kink on a k-labelled strand."""
    return ScalarQ.q_power(k * (k - 1) * kinks)


def invariant(link, ctx):
    """The framing-corrected invariant, normalized so unknots give 1."""
    if isinstance(link, (str, BraidWord)):
        link = LinkPresentation(link)
    k = link.label
    raw = tangle_scalar(link, ctx)
    unknot = LinkPresentation(BraidWord(1, (k,), ()))
    base = tangle_scalar(unknot, ctx)
    return raw / base / framing_factor(k, link.writhe())


# --- circle values in the kappa category --------------------------------


KAPPA = (ONE + ONE) / QTILDE


def kappa_circle(k):
    """The clockwise k-labelled circle when the thin circle equals 2/q~."""
    num = ONE
    for t in range(k):
        num = num * (ScalarQ.q_power(t) + ScalarQ.q_power(-t))
    return num / (qfact(k) * QTILDE ** k)


def kappa_recursion_coefficient(k):
    """The displayed two-term coefficient relating the k- and (k-1)-circles."""
    return (qint(k - 1, 1) * ScalarQ.q_power(-1) * (KAPPA + ScalarQ.q_power(1))
            - KAPPA * qint(k - 2, 1)) / qint(k, 1)


def kappa_recursion_check(k):
    """Both displayed coefficient forms agree and reproduce the product."""
    coeff = kappa_recursion_coefficient(k)
    simplified = (ScalarQ.q_power(k - 1) + ScalarQ.q_power(-(k - 1))) \
        / (qint(k, 1) * QTILDE)
    if coeff != simplified:
        return False
    return kappa_circle(k) == coeff * kappa_circle(k - 1)
