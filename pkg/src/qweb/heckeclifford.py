"""Symbolic Hecke-Clifford algebra HC_k(q) with normal forms.

Elements are finite sums  sum c * c_1^{e_1} ... c_k^{e_k} T_sigma  over the
basis indexed by pairs (epsilon, sigma) with epsilon in {0,1}^k and sigma a
permutation of {1, ..., k}.  The defining relations are

    T_i^2 = qtilde T_i + 1,          T_i T_j = T_j T_i   (|i - j| > 1),
    T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1},
    c_i^2 = 1,  c_i c_j = -c_j c_i   (i != j),
    T_i c_i = c_{i+1} T_i,
    T_i c_j = c_j T_i                (j != i, i+1),
    c_i T_i = T_i c_{i+1} + qtilde (c_i - c_{i+1}),

and the normal form keeps Clifford letters on the left in ascending index
order.  The module also provides the diagrammatic realization psi sending
c_i to a dot and T_i to a thin over-crossing, the clasp idempotents in both
closed and recursive form, and the walled generator webs on a mixed
boundary of thin upward and downward strands together with their relation
checker.
"""

from fractions import Fraction
from functools import lru_cache

from .scalars import ScalarQ, ZERO, ONE, QTILDE, qint, qfact
from .webir import (
    WebObject,
    UP,
    DOWN,
    iden,
    dot,
    rcap,
    lcup,
    over_cross,
    under_cross,
    from_generator,
    identity_diagram,
    compose,
    tensor_all,
    compose_all,
    down_dot,
)
from .evaluator import eval_diagram, eval_object

__all__ = [
    "perm_identity",
    "perm_length",
    "perm_reduced_word",
    "HCElement",
    "hc_unit",
    "hc_clifford",
    "hc_braid",
    "hc_multiply",
    "hc_basis",
    "psi",
    "clasp",
    "clasp_recursive",
    "bc_generators",
    "verify_bc_relations",
]


# --- permutations (one-line notation, 0-indexed image tuples) ----------


def perm_identity(k):
    return tuple(range(k))


def perm_length(sigma):
    """Number of inversions."""
    k = len(sigma)
    return sum(
        1 for i in range(k) for j in range(i + 1, k) if sigma[i] > sigma[j]
    )


def _perm_swap(sigma, i):
    """Right multiplication by the adjacent transposition s_i."""
    lst = list(sigma)
    lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


def perm_reduced_word(sigma):
    """A reduced word (tuple of 0-indexed letters), rightmost applied last."""
    word = []
    sigma = tuple(sigma)
    while True:
        for i in range(len(sigma) - 1):
            if sigma[i] > sigma[i + 1]:
                sigma = _perm_swap(sigma, i)
                word.append(i)
                break
        else:
            return tuple(reversed(word))


def _all_permutations(k):
    import itertools

    return list(itertools.permutations(range(k)))


# --- elements ----------------------------------------------------------


class HCElement:
    """A normal-form element of HC_k(q)."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        object.__setattr__(self, "k", k)
        clean = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                eps, sigma = key
                clean[(tuple(eps), tuple(sigma))] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HCElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HCElement)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.k != other.k:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return HCElement(self.k, terms)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, coeff):
        return HCElement(
            self.k, {key: val * coeff for key, val in self.terms.items()}
        )

    def __mul__(self, other):
        return hc_multiply(self, other)

    def is_homogeneous(self):
        parities = {sum(eps) % 2 for (eps, _sigma) in self.terms}
        return len(parities) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (eps, sigma), coeff in sorted(self.terms.items()):
            word = "".join(f"c{i + 1}" for i, e in enumerate(eps) if e)
            word += "".join(f"T{i + 1}" for i in perm_reduced_word(sigma))
            parts.append(f"({coeff})*{word or '1'}")
        return " + ".join(parts)

    __repr__ = __str__


def hc_unit(k):
    eps = (0,) * k
    return HCElement(k, {(eps, perm_identity(k)): ONE})


def hc_clifford(k, i):
    """The generator c_i (1-indexed)."""
    if not 1 <= i <= k:
        raise ValueError("clifford index out of range")
    eps = tuple(1 if j == i - 1 else 0 for j in range(k))
    return HCElement(k, {(eps, perm_identity(k)): ONE})


def hc_braid(k, i):
    """The generator T_i (1-indexed)."""
    if not 1 <= i <= k - 1:
        raise ValueError("braid index out of range")
    eps = (0,) * k
    return HCElement(k, {(eps, _perm_swap(perm_identity(k), i - 1)): ONE})


def hc_basis(k):
    """All k! * 2^k basis pairs (epsilon, sigma)."""
    import itertools

    return [
        (eps, sigma)
        for eps in itertools.product((0, 1), repeat=k)
        for sigma in _all_permutations(k)
    ]


# --- multiplication ----------------------------------------------------


def _cliff_absorb(eps, j):
    """Multiply the ascending Clifford word c^eps by c_j on the right.

    Returns (sign, new_eps); moving c_j past each later letter flips the
    sign and a repeated letter squares to 1.
    """
    later = sum(eps[j + 1 :])
    sign = -ONE if later % 2 else ONE
    lst = list(eps)
    lst[j] ^= 1
    return sign, tuple(lst)


def _push_clifford(word, j):
    """Rewrite T-word * c_j as sum of c_{j'} * T-word' (letters 0-indexed).

    The word is processed from its rightmost letter; each step uses
    T_i c_i = c_{i+1} T_i,  T_i c_{i+1} = c_i T_i - qt c_i + qt c_{i+1},
    and commutation otherwise.  Returns a list of (coeff, j', word').
    """
    if not word:
        return [(ONE, j, ())]
    head, i = word[:-1], word[-1]
    out = []
    if j == i:
        for coeff, j2, w2 in _push_clifford(head, i + 1):
            out.append((coeff, j2, w2 + (i,)))
    elif j == i + 1:
        for coeff, j2, w2 in _push_clifford(head, i):
            out.append((coeff, j2, w2 + (i,)))
            out.append((-QTILDE * coeff, j2, w2))
        for coeff, j2, w2 in _push_clifford(head, i + 1):
            out.append((QTILDE * coeff, j2, w2))
    else:
        for coeff, j2, w2 in _push_clifford(head, j):
            out.append((coeff, j2, w2 + (i,)))
    return out


def _times_braid(elem, i):
    """Right-multiply a normal-form element by T_{i} (0-indexed letter)."""
    terms = {}

    def add(key, coeff):
        cur = terms.get(key, ZERO) + coeff
        if cur:
            terms[key] = cur
        elif key in terms:
            del terms[key]

    for (eps, sigma), coeff in elem.terms.items():
        moved = _perm_swap(sigma, i)
        if sigma[i] < sigma[i + 1]:
            add((eps, moved), coeff)
        else:
            add((eps, moved), coeff)
            add((eps, sigma), QTILDE * coeff)
    return HCElement(elem.k, terms)


def _times_clifford(elem, j):
    """Right-multiply a normal-form element by c_{j} (0-indexed letter)."""
    total = HCElement(elem.k, {})
    for (eps, sigma), coeff in elem.terms.items():
        for push_coeff, j2, word in _push_clifford(perm_reduced_word(sigma), j):
            sign, new_eps = _cliff_absorb(eps, j2)
            piece = HCElement(
                elem.k,
                {(new_eps, perm_identity(elem.k)): coeff * push_coeff * sign},
            )
            for letter in word:
                piece = _times_braid(piece, letter)
            total = total + piece
    return total


def hc_multiply(x, y):
    """Product in HC_k(q), returned in normal form."""
    if x.k != y.k:
        raise ValueError("rank mismatch")
    total = HCElement(x.k, {})
    for (eps, sigma), coeff in y.terms.items():
        piece = x.scale(coeff)
        for j in range(x.k):
            if eps[j]:
                piece = _times_clifford(piece, j)
        for letter in perm_reduced_word(sigma):
            piece = _times_braid(piece, letter)
        total = total + piece
    return total


# --- diagrammatic realization ------------------------------------------


def _strand_diagram(k, position, generator):
    """Embed a width-w generator at a 0-indexed strand position."""
    width = len(generator.source.word)
    parts = (
        [iden(WebObject(((UP, 1),))) for _ in range(position)]
        + [generator]
        + [iden(WebObject(((UP, 1),))) for _ in range(k - position - width)]
    )
    return tensor_all([from_generator(g) for g in parts])


@lru_cache(maxsize=None)
def _psi_generator_matrix(kind, k, pos, n):
    from .evaluator import EvalContext

    ctx = EvalContext(n, cap=10**7)
    if kind == "c":
        diagram = _strand_diagram(k, pos, dot(1))
    else:
        diagram = _strand_diagram(k, pos, over_cross((UP, 1), (UP, 1)))
    return eval_diagram(diagram, ctx)


def psi(x, n):
    """The action of an HC_k(q) element on the k-fold thin upward boundary."""
    from .evaluator import EvalContext
    from .superlinear import identity as space_identity

    k = x.k
    ctx = EvalContext(n, cap=10**7)
    space = eval_object(WebObject(((UP, 1),) * k), ctx)
    total = None
    for (eps, sigma), coeff in x.terms.items():
        mat = space_identity(space)
        # basis term c^eps T_sigma acts as the composite of its letters,
        # leftmost letter applied last
        for j in range(k):
            if eps[j]:
                mat = mat @ _psi_generator_matrix("c", k, j, n)
        for letter in perm_reduced_word(sigma):
            mat = mat @ _psi_generator_matrix("T", k, letter, n)
        mat = mat.scale(coeff)
        total = mat if total is None else total + mat
    if total is None:
        total = space_identity(space).scale(ZERO)
    return total


# --- clasps ------------------------------------------------------------


def _braid_lift(k, sigma):
    """T_sigma as an HCElement."""
    eps = (0,) * k
    return HCElement(k, {(eps, tuple(sigma)): ONE})


def clasp(k):
    """Closed form: q^{-k(k-1)/2} / [k]_q! * sum_sigma q^{l(sigma)} T_sigma."""
    if k < 1:
        raise ValueError("k must be positive")
    prefactor = ScalarQ.q_power(Fraction(-k * (k - 1), 2)) / qfact(k)
    terms = {}
    for sigma in _all_permutations(k):
        terms[((0,) * k, sigma)] = prefactor * ScalarQ.q_power(
            perm_length(sigma)
        )
    return HCElement(k, terms)


def _embed_low(x, k):
    """Include HC_{k-1} into HC_k on the first k-1 strands."""
    terms = {}
    for (eps, sigma), coeff in x.terms.items():
        terms[(eps + (0,), sigma + (len(sigma),))] = coeff
    return HCElement(k, terms)


def _shift_high(x, k):
    """Include HC_2 into HC_k on the last two strands."""
    shift = k - 2
    terms = {}
    for (eps, sigma), coeff in x.terms.items():
        new_eps = (0,) * shift + eps
        new_sigma = tuple(range(shift)) + tuple(s + shift for s in sigma)
        terms[(new_eps, new_sigma)] = coeff
    return HCElement(k, terms)


def clasp_recursive(k):
    """Jones-Wenzl style recursion; agrees with the closed form."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return hc_unit(1)
    if k == 2:
        # (q^{-1}/[2]_q) (1 + q T_1)
        pre = ScalarQ.q_power(-1) / qint(2, 1)
        return hc_unit(2).scale(pre) + hc_braid(2, 1).scale(
            pre * ScalarQ.q_power(1)
        )
    lower = _embed_low(clasp_recursive(k - 1), k)
    middle = _shift_high(clasp_recursive(2), k)
    first = hc_multiply(hc_multiply(lower, middle), lower)
    coeff_a = qint(2, 1) * qint(k - 1, 1) / qint(k, 1)
    coeff_b = qint(k - 2, 1) / qint(k, 1)
    return first.scale(coeff_a) - lower.scale(coeff_b)


# --- walled generator webs ---------------------------------------------


def _mixed_object(r, s):
    return WebObject(((UP, 1),) * r + ((DOWN, 1),) * s)


def _at_position(r, s, position, piece):
    """Tensor a width-w endomorphism piece into the mixed boundary."""
    obj = _mixed_object(r, s)
    width = len(piece.source.word)
    parts = []
    for idx in range(position):
        parts.append(identity_diagram(WebObject((obj.word[idx],))))
    parts.append(piece)
    for idx in range(position + width, r + s):
        parts.append(identity_diagram(WebObject((obj.word[idx],))))
    return tensor_all(parts)


def bc_generators(r, s):
    """The generator webs on r thin upward and s thin downward strands.

    Keys: "T1", ... (upward crossings), "T*1", ... (downward crossings),
    "C1", ... (upward dots), "C*1", ... (downward dots), and "E"
    (the turn-back at the wall).
    """
    gens = {}
    for i in range(1, r):
        gens[f"T{i}"] = _at_position(
            r, s, i - 1, from_generator(over_cross((UP, 1), (UP, 1)))
        )
        gens[f"T{i}inv"] = _at_position(
            r, s, i - 1, from_generator(under_cross((UP, 1), (UP, 1)))
        )
    for j in range(1, s):
        gens[f"T*{j}"] = _at_position(
            r, s, r + j - 1, from_generator(over_cross((DOWN, 1), (DOWN, 1)))
        )
        gens[f"T*{j}inv"] = _at_position(
            r, s, r + j - 1, from_generator(under_cross((DOWN, 1), (DOWN, 1)))
        )
    for i in range(1, r + 1):
        gens[f"C{i}"] = _at_position(r, s, i - 1, from_generator(dot(1)))
    for j in range(1, s + 1):
        gens[f"C*{j}"] = _at_position(r, s, r + j - 1, down_dot(1))
    if r >= 1 and s >= 1:
        up_ids = [
            identity_diagram(WebObject(((UP, 1),))) for _ in range(r - 1)
        ]
        down_ids = [
            identity_diagram(WebObject(((DOWN, 1),))) for _ in range(s - 1)
        ]
        bottom = tensor_all(up_ids + [from_generator(rcap(1))] + down_ids)
        top = tensor_all(up_ids + [from_generator(lcup(1))] + down_ids)
        gens["E"] = compose(top, bottom)
    return gens


def _bc_relation_cases(r, s):
    """All applicable defining relations as (name, lhs-words, rhs-terms).

    Words are lists of generator names composed left-to-right (leftmost
    factor applied last); rhs terms are (coefficient, word) pairs.
    """
    cases = []

    def rel(name, lhs, rhs):
        cases.append((name, lhs, rhs))

    for i in range(1, r):
        rel(
            f"(a) T{i}^2",
            [f"T{i}", f"T{i}"],
            [(QTILDE, [f"T{i}"]), (ONE, [])],
        )
    for j in range(1, s):
        rel(
            f"(a) T*{j}^2",
            [f"T*{j}", f"T*{j}"],
            [(QTILDE, [f"T*{j}"]), (ONE, [])],
        )
    for i in range(1, r - 1):
        rel(
            f"(b) braid T{i}",
            [f"T{i}", f"T{i + 1}", f"T{i}"],
            [(ONE, [f"T{i + 1}", f"T{i}", f"T{i + 1}"])],
        )
    for j in range(1, s - 1):
        rel(
            f"(b) braid T*{j}",
            [f"T*{j}", f"T*{j + 1}", f"T*{j}"],
            [(ONE, [f"T*{j + 1}", f"T*{j}", f"T*{j + 1}"])],
        )
    for i in range(1, r):
        for i2 in range(i + 2, r):
            rel(
                f"(c) T{i} T{i2}",
                [f"T{i}", f"T{i2}"],
                [(ONE, [f"T{i2}", f"T{i}"])],
            )
    for j in range(1, s):
        for j2 in range(j + 2, s):
            rel(
                f"(c) T*{j} T*{j2}",
                [f"T*{j}", f"T*{j2}"],
                [(ONE, [f"T*{j2}", f"T*{j}"])],
            )
    if r >= 1 and s >= 1:
        if r >= 2:
            rel(
                "(d) E T(r-1) E",
                ["E", f"T{r - 1}", "E"],
                [(ONE, ["E"])],
            )
        if s >= 2:
            rel("(d) E T*1 E", ["E", "T*1", "E"], [(ONE, ["E"])])
        for i in range(1, r):
            if i != r - 1:
                rel(
                    f"(e) E T{i}",
                    ["E", f"T{i}"],
                    [(ONE, [f"T{i}", "E"])],
                )
        for j in range(2, s):
            rel(
                f"(e) E T*{j}",
                ["E", f"T*{j}"],
                [(ONE, [f"T*{j}", "E"])],
            )
        rel("(f) E^2", ["E", "E"], [])
        if r >= 2 and s >= 2:
            rel(
                "(g) mixed braid",
                ["E", f"T{r - 1}inv", "T*1", f"T{r - 1}inv"],
                [
                    (
                        ONE,
                        [
                            f"T{r - 1}inv",
                            "T*1",
                            "E",
                            "T*1",
                            f"T{r - 1}inv",
                            "E",
                        ],
                    )
                ],
            )
    for i in range(1, r + 1):
        rel(f"(h) C{i}^2", [f"C{i}", f"C{i}"], [(ONE, [])])
    for j in range(1, s + 1):
        rel(f"(h) C*{j}^2", [f"C*{j}", f"C*{j}"], [(-ONE, [])])
    for i in range(1, r + 1):
        for i2 in range(i + 1, r + 1):
            rel(
                f"(i) C{i} C{i2}",
                [f"C{i}", f"C{i2}"],
                [(-ONE, [f"C{i2}", f"C{i}"])],
            )
    for j in range(1, s + 1):
        for j2 in range(j + 1, s + 1):
            rel(
                f"(i) C*{j} C*{j2}",
                [f"C*{j}", f"C*{j2}"],
                [(-ONE, [f"C*{j2}", f"C*{j}"])],
            )
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            # mixed dots anticommute like same-side dots: both are odd
            # morphisms on distant strands, so the interchange law applies
            rel(
                f"(j) C{i} C*{j}",
                [f"C{i}", f"C*{j}"],
                [(-ONE, [f"C*{j}", f"C{i}"])],
            )
    for i in range(1, r):
        rel(
            f"(k) C{i} T{i}",
            [f"C{i}", f"T{i}"],
            [
                (ONE, [f"T{i}", f"C{i + 1}"]),
                (QTILDE, [f"C{i}"]),
                (-QTILDE, [f"C{i + 1}"]),
            ],
        )
    for j in range(1, s):
        rel(
            f"(k) C*{j} T*{j}",
            [f"C*{j}", f"T*{j}"],
            [
                (ONE, [f"T*{j}", f"C*{j + 1}"]),
                (QTILDE, [f"C*{j}"]),
                (-QTILDE, [f"C*{j + 1}"]),
            ],
        )
    for i in range(1, r):
        for i2 in range(1, r + 1):
            if i2 not in (i, i + 1):
                rel(
                    f"(l) T{i} C{i2}",
                    [f"T{i}", f"C{i2}"],
                    [(ONE, [f"C{i2}", f"T{i}"])],
                )
    for j in range(1, s):
        for j2 in range(1, s + 1):
            if j2 not in (j, j + 1):
                rel(
                    f"(l) T*{j} C*{j2}",
                    [f"T*{j}", f"C*{j2}"],
                    [(ONE, [f"C*{j2}", f"T*{j}"])],
                )
    for i in range(1, r):
        for j in range(1, s + 1):
            rel(
                f"(m) T{i} C*{j}",
                [f"T{i}", f"C*{j}"],
                [(ONE, [f"C*{j}", f"T{i}"])],
            )
    for j in range(1, s):
        for i in range(1, r + 1):
            rel(
                f"(m) T*{j} C{i}",
                [f"T*{j}", f"C{i}"],
                [(ONE, [f"C{i}", f"T*{j}"])],
            )
    if r >= 1 and s >= 1:
        rel("(n) C(r) E", [f"C{r}", "E"], [(ONE, ["C*1", "E"])])
        rel("(n) E C(r)", ["E", f"C{r}"], [(ONE, ["E", "C*1"])])
        for i in range(1, r):
            rel(
                f"(o) C{i} E",
                [f"C{i}", "E"],
                [(ONE, ["E", f"C{i}"])],
            )
        for j in range(2, s + 1):
            rel(
                f"(o) C*{j} E",
                [f"C*{j}", "E"],
                [(ONE, ["E", f"C*{j}"])],
            )
        rel("(p) E C(r) E", ["E", f"C{r}", "E"], [])
    return cases


def verify_bc_relations(r, s, ctx, specializations=None):
    """Check every applicable defining relation under evaluation.

    Returns a report dict with per-relation booleans and a "failures"
    list; words compose with the leftmost factor applied last.  The
    check is symbolic when the boundary dimension is at most 256 and
    ``specializations`` is not given; otherwise each relation is
    compared at the provided rational values of q (default 7/5, 3/2).
    """
    gens = bc_generators(r, s)
    obj = _mixed_object(r, s)
    boundary_dim = len(eval_object(obj, ctx).labels)

    def word_matrix(word):
        if not word:
            diagram = identity_diagram(obj)
        else:
            diagram = compose_all([gens[name] for name in reversed(word)])
        return eval_diagram(diagram, ctx)

    if specializations is None and boundary_dim > 256:
        specializations = (Fraction(7, 5), Fraction(3, 2))

    def same(left, right):
        if not specializations:
            return left == right
        return all(
            left.specialized_entries(q0) == right.specialized_entries(q0)
            for q0 in specializations
        )

    report = {"r": r, "s": s, "n": ctx.n, "results": {}, "failures": []}
    zero = eval_diagram(identity_diagram(obj), ctx).scale(ZERO)
    for name, lhs, rhs in _bc_relation_cases(r, s):
        left = word_matrix(lhs)
        right = zero
        for coeff, word in rhs:
            right = right + word_matrix(word).scale(coeff)
        ok = same(left, right)
        report["results"][name] = ok
        if not ok:
            report["failures"].append(name)
    return report


# --- defining-relation suite -------------------------------------------


def hc_relation_cases(k):
    """All instances of the seven defining-relation families in HC_k.

    Returns (name, lhs, rhs) triples of symbolic elements.
    """
    cases = []
    T = lambda i: hc_braid(k, i)
    c = lambda i: hc_clifford(k, i)
    one = hc_unit(k)
    for i in range(1, k):
        cases.append((f"quadratic-T{i}",
                      T(i) * T(i), T(i).scale(QTILDE) + one))
    for i in range(1, k - 1):
        cases.append((f"braid-T{i}",
                      T(i) * T(i + 1) * T(i),
                      T(i + 1) * T(i) * T(i + 1)))
    for i in range(1, k):
        for j in range(i + 2, k):
            cases.append((f"distant-T{i}-T{j}",
                          T(i) * T(j), T(j) * T(i)))
    for i in range(1, k + 1):
        cases.append((f"clifford-square-c{i}", c(i) * c(i), one))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            cases.append((f"clifford-anticommute-c{i}-c{j}",
                          c(i) * c(j), (c(j) * c(i)).scale(-ONE)))
    for i in range(1, k):
        cases.append((f"dot-slide-T{i}",
                      T(i) * c(i), c(i + 1) * T(i)))
        cases.append((f"dot-skein-T{i}",
                      c(i) * T(i),
                      T(i) * c(i + 1)
                      + (c(i) - c(i + 1)).scale(QTILDE)))
    for j in range(1, k):
        for i in range(1, k + 1):
            if i not in (j, j + 1):
                cases.append((f"distant-c{i}-T{j}",
                              c(i) * T(j), T(j) * c(i)))
    return cases


def verify_hc_relations(k, n=None):
    """Check the defining relations, symbolically or as matrices.

    With ``n`` given, both sides are pushed through psi and compared as
    endomorphisms of the n-th supermodule's k-fold tensor power.
    """
    report = {"k": k, "n": n, "results": {}, "failures": []}
    for name, lhs, rhs in hc_relation_cases(k):
        ok = (lhs == rhs) if n is None else (psi(lhs, n) == psi(rhs, n))
        report["results"][name] = ok
        if not ok:
            report["failures"].append(name)
    return report
