"""The Howe-duality coordinate algebra A_q(V_m * V_n) and its two actions.

Generators t_{a,b} with a in {1..m} (rows; negative rows are folded away
by t_{a,b} = t_{-a,-b}) and b in I_{n|n} (columns).  The parity of t_{a,b}
is the parity of b; odd generators square to zero.  The ordered basis
consists of lexicographically nondecreasing products with square-free odd
factors.

Both U_q(q_m) (row side) and U_q(q_n) (column side) act; single-generator
tables are extended to products through the coproduct

    Delta(E) = E (x) K_i^{-1} K_{i+1} + 1 (x) E
    Delta(F) = F (x) 1 + K_i K_{i+1}^{-1} (x) F
    Delta(K^{+-1}) = K^{+-1} (x) K^{+-1}
    Delta(Kbar_1) = Kbar_1 (x) K_1 + K_1^{-1} (x) Kbar_1

with the super product rule x.(fg) = sum (-1)^{p(x_(2)) p(f)} (x_(1).f)(x_(2).g).
"""

from functools import lru_cache

from .scalars import (
    ScalarQ, ZERO, ONE, QTILDE, SQRT_MINUS_ONE, qfact,
)
from .superlinear import SuperSpace, SuperMap, identity
from .qsym import parity, sym_basis, monomial_parity, FuelExhausted

__all__ = [
    "fold",
    "factor_parity",
    "aq_normalize",
    "aq_basis",
    "weight_space",
    "split_rows",
    "from_rows",
    "act",
    "act_matrix",
    "divided_power_act",
    "divided_power_matrix",
    "sym_space",
    "dual_sym_space",
    "sym_action_matrix",
    "dual_action_matrix",
    "dot_on_sym",
    "udot_operator",
    "generator_parity",
]

_Q = ScalarQ.q_power


def fold(factor):
    a, b = factor
    if a < 0:
        return (-a, -b)
    return (a, b)


def factor_parity(factor):
    return parity(factor[1])


def _add(acc, key, val):
    s = acc.get(key, ZERO) + val
    if s:
        acc[key] = s
    elif key in acc:
        del acc[key]


_pair_cache = {}


def _pair_expand(p1, p2):
    """Straighten the 2-letter product t_{p1} t_{p2} into the ordered basis.

    Input factors are row-folded.  Returns a dict mapping ordered 2-letter
    words (or nothing, when the product dies) to coefficients.
    """
    key = (p1, p2)
    hit = _pair_cache.get(key)
    if hit is not None:
        if hit == "busy":
            raise FuelExhausted("cyclic pair straightening")
        return hit
    if p1 < p2 or (p1 == p2 and not factor_parity(p1)):
        result = {(p1, p2): ONE}
        _pair_cache[key] = result
        return result
    if p1 == p2:
        _pair_cache[key] = {}
        return {}
    _pair_cache[key] = "busy"
    (c, x), (a, y) = p1, p2
    # relations are stated for rows a <= c; here (c,x) > (a,y) lexicographically
    d_ac = ONE if a == c else ZERO
    lead_q = _Q(1) if a == c else ONE  # q^{delta_{a,c}}
    d, b = abs(x), abs(y)
    corrections = []  # (pair, coefficient) subtracted before dividing by lead
    if x > 0 and y > 0:
        lead = _Q(1 if b == d else 0)
        if b < d:
            corrections.append((((c, b), (a, d)), QTILDE))
        corrections.append((((c, -b), (a, -d)), QTILDE))
    elif x < 0 and y > 0:
        lead = _Q(-1 if b == d else 0)
        if d < b:
            corrections.append((((c, -b), (a, d)), -QTILDE))
    elif x > 0 and y < 0:
        lead = _Q(1 if b == d else 0)
        corrections.append((((c, -b), (a, d)), QTILDE))
        if b < d:
            corrections.append((((c, b), (a, -d)), QTILDE))
    else:
        lead = -_Q(-1 if b == d else 0)
        if d < b:
            corrections.append((((c, -b), (a, -d)), QTILDE))
    result = {}
    _add(result, ((a, y), (c, x)), lead_q / lead)
    for (g1, g2), coeff in corrections:
        for pair, inner in _pair_expand(g1, g2).items():
            _add(result, pair, -(coeff / lead) * inner)
    _pair_cache[key] = result
    return result


def aq_normalize(word, fuel=None):
    """Expand a product of generators in the ordered basis.

    Returns dict monomial-tuple -> ScalarQ.  Rows are folded first; then
    the leftmost descending adjacent pair is replaced by its straightened
    expansion until every term is ordered.
    """
    word = tuple(fold(f) for f in word)
    d = len(word)
    if fuel is None:
        fuel = 1000 * (d + 1) * (d + 1) + 40 ** min(d, 6)
    pending = [(word, ONE)]
    result = {}
    while pending:
        if fuel <= 0:
            raise FuelExhausted("fuel exhausted")
        fuel -= 1
        w, coeff = pending.pop()
        for j in range(len(w) - 1):
            f1, f2 = w[j], w[j + 1]
            if f1 < f2 or (f1 == f2 and not factor_parity(f1)):
                continue
            expansion = _pair_expand(f1, f2)
            head, tail = w[:j], w[j + 2:]
            for pair, c in expansion.items():
                pending.append((head + pair + tail, coeff * c))
            break
        else:
            _add(result, w, coeff)
    return result


@lru_cache(maxsize=None)
def aq_basis(m, n, lam):
    """Ordered monomials with lam[i] factors in row i+1."""
    if len(lam) != m:
        raise ValueError("weight length mismatch")
    monos = [()]
    for i, k in enumerate(lam):
        row = i + 1
        monos = [pre + tuple((row, b) for b in s)
                 for pre in monos for s in sym_basis(k, n)]
    return tuple(monos)


@lru_cache(maxsize=None)
def weight_space(m, n, lam):
    """The weight space A_{q,lam} as a rank-1 SuperSpace."""
    atoms = []
    for mono in aq_basis(m, n, lam):
        p = sum(factor_parity(f) for f in mono) & 1
        atoms.append((mono, p))
    space = SuperSpace(tuple((a,) for a, _ in atoms),
                       {(a,): p for a, p in atoms}, 1)
    return space


def split_rows(mono, m):
    """Row blocks of a monomial as a tuple of column monomials."""
    rows = [[] for _ in range(m)]
    for a, b in mono:
        rows[a - 1].append(b)
    return tuple(tuple(r) for r in rows)


def from_rows(rows):
    out = []
    for i, r in enumerate(rows):
        out.extend((i + 1, b) for b in r)
    return tuple(out)


# --- generator actions -------------------------------------------------

_ODD_KINDS = frozenset(("Kbar", "Ebar", "Fbar"))


def generator_parity(kind):
    return 1 if kind in _ODD_KINDS else 0


def _table(side, kind, r, factor):
    """Action on a single generator; returns list of (factor, coeff)."""
    a, b = factor
    i_sign = SQRT_MINUS_ONE * (-ONE if parity(b) else ONE)
    if side == "m":
        if kind == "E":
            return [((r, b), ONE)] if a == r + 1 else []
        if kind == "F":
            return [((r + 1, b), ONE)] if a == r else []
        if kind == "K":
            return [((a, b), _Q(1 if a == r else 0))]
        if kind == "Kinv":
            return [((a, b), _Q(-1 if a == r else 0))]
        if kind == "Kbar":
            return [((r, -b), i_sign)] if a == r else []
        if kind == "Ebar":
            return [((r, -b), i_sign)] if a == r + 1 else []
        if kind == "Fbar":
            return [((r + 1, -b), i_sign)] if a == r else []
    else:
        if kind == "E":
            if b == r + 1:
                return [((a, r), ONE)]
            if b == -(r + 1):
                return [((a, -r), ONE)]
            return []
        if kind == "F":
            if b == r:
                return [((a, r + 1), ONE)]
            if b == -r:
                return [((a, -(r + 1)), ONE)]
            return []
        if kind == "K":
            # v_b and v_{-b} carry the same weight
            return [((a, b), _Q(1 if abs(b) == r else 0))]
        if kind == "Kinv":
            return [((a, b), _Q(-1 if abs(b) == r else 0))]
        if kind == "Kbar":
            if b == r:
                return [((a, -r), ONE)]
            if b == -r:
                return [((a, r), ONE)]
            return []
        if kind == "Ebar":
            if b == r + 1:
                return [((a, -r), ONE)]
            if b == -(r + 1):
                return [((a, r), ONE)]
            return []
        if kind == "Fbar":
            if b == r:
                return [((a, -(r + 1)), ONE)]
            if b == -r:
                return [((a, r + 1), ONE)]
            return []
    raise ValueError("unsupported generator {}".format((side, kind, r)))


def _coproduct(kind, r):
    """Delta as a list of (left-word, right-word); words are (kind, idx) tuples."""
    if kind == "E":
        return [((("E", r),), (("Kinv", r), ("K", r + 1))),
                ((), (("E", r),))]
    if kind == "F":
        return [((("F", r),), ()),
                ((("K", r), ("Kinv", r + 1)), (("F", r),))]
    if kind == "K":
        return [((("K", r),), (("K", r),))]
    if kind == "Kinv":
        return [((("Kinv", r),), (("Kinv", r),))]
    if kind == "Kbar" and r == 1:
        return [((("Kbar", 1),), (("K", 1),)),
                ((("Kinv", 1),), (("Kbar", 1),))]
    raise ValueError("unsupported generator ({}, {}) on products".format(kind, r))


def _word_parity(gword):
    return sum(generator_parity(k) for k, _ in gword) & 1


def _act_sym(side, kind, r, word):
    """One generator acting on a formal word; dict word -> coeff."""
    if not word:
        return {(): ONE} if kind in ("K", "Kinv") else {}
    if len(word) == 1:
        return {(f,): c for f, c in _table(side, kind, r, word[0])}
    out = {}
    first, rest = word[:1], word[1:]
    p_first = factor_parity(word[0])
    for left, right in _coproduct(kind, r):
        sign = -ONE if (_word_parity(right) and p_first) else ONE
        for w1, c1 in _act_gword(side, left, first).items():
            for w2, c2 in _act_gword(side, right, rest).items():
                _add(out, w1 + w2, sign * c1 * c2)
    return out


def _act_gword(side, gword, word):
    terms = {word: ONE}
    for kind, r in reversed(gword):
        new = {}
        for w, c in terms.items():
            for w2, c2 in _act_sym(side, kind, r, w).items():
                _add(new, w2, c * c2)
        terms = new
        if not terms:
            break
    return terms


def act(side, kind, r, elem):
    """Action on a normalized element (dict monomial -> ScalarQ)."""
    out = {}
    for mono, coeff in elem.items():
        for w, c in _act_sym(side, kind, r, mono).items():
            for mono2, c2 in aq_normalize(w).items():
                _add(out, mono2, coeff * c * c2)
    return out


def _target_weight(side, kind, r, m, lam):
    lam = list(lam)
    if side == "m":
        if kind in ("E", "Ebar"):
            lam[r - 1] += 1
            lam[r] -= 1
        elif kind in ("F", "Fbar"):
            lam[r - 1] -= 1
            lam[r] += 1
    return tuple(lam)


def _maybe_space(m, n, lam):
    if any(x < 0 for x in lam):
        return SuperSpace((), {}, 1)
    return weight_space(m, n, lam)


def act_matrix(side, kind, r, m, n, lam):
    """Matrix of a generator between weight spaces of A_q(V_m * V_n)."""
    src = weight_space(m, n, lam)
    tgt = _maybe_space(m, n, _target_weight(side, kind, r, m, lam))
    entries = {}
    for (mono,) in src.labels:
        for mono2, c in act(side, kind, r, {mono: ONE}).items():
            entries[((mono2,), (mono,))] = c
    return SuperMap(src, tgt, generator_parity(kind), entries)


def divided_power_act(side, kind, r, a, elem, was_laurent_check=True):
    """E_r^{(a)} (or F_r^{(a)}): act a times and divide by [a]_q!."""
    if a < 0:
        raise ValueError("negative divided power")
    laurent_in = all(c.is_laurent() for c in elem.values())
    out = dict(elem)
    for _ in range(a):
        out = act(side, kind, r, out)
    denom = qfact(a)
    out = {k: v / denom for k, v in out.items()}
    if was_laurent_check and laurent_in:
        for v in out.values():
            if not v.is_laurent():
                raise ArithmeticError("divisibility violated")
    return out


def divided_power_matrix(side, kind, r, a, m, n, lam):
    src = weight_space(m, n, lam)
    tgt = lam
    for _ in range(a):
        tgt = _target_weight(side, kind, r, m, tgt)
    tgt_space = _maybe_space(m, n, tgt)
    entries = {}
    for (mono,) in src.labels:
        for mono2, c in divided_power_act(side, kind, r, a, {mono: ONE}).items():
            entries[((mono2,), (mono,))] = c
    return SuperMap(src, tgt_space, 0, entries)


# --- S^k(V_n) as a rank-1 space with column-monomial labels ------------


@lru_cache(maxsize=None)
def sym_space(k, n):
    return SuperSpace.from_atoms(
        [(mono, monomial_parity(mono)) for mono in sym_basis(k, n)])


@lru_cache(maxsize=None)
def dual_sym_space(k, n):
    return SuperSpace.from_atoms(
        [(("*", mono), monomial_parity(mono)) for mono in sym_basis(k, n)])


def _row1(mono):
    """Column monomial -> m=1 A_q monomial."""
    return tuple((1, b) for b in mono)


def _uncol(mono):
    return tuple(b for _, b in mono)


@lru_cache(maxsize=None)
def sym_action_matrix(kind, r, k, n):
    """The n-side generator action on S^k(V_n) with column-monomial labels."""
    src = sym_space(k, n)
    entries = {}
    for (mono,) in src.labels:
        for mono2, c in act("n", kind, r, {_row1(mono): ONE}).items():
            entries[((_uncol(mono2),), (mono,))] = c
    return SuperMap(src, src, generator_parity(kind), entries)


@lru_cache(maxsize=None)
def dot_on_sym(k, n):
    """The m-side Kbar_1 action on S^k: the thickness-k dot."""
    src = sym_space(k, n)
    entries = {}
    for (mono,) in src.labels:
        for mono2, c in act("m", "Kbar", 1, {_row1(mono): ONE}).items():
            entries[((_uncol(mono2),), (mono,))] = c
    return SuperMap(src, src, 1, entries)


_ANTIPODE = {
    "E": (-1, (("E", None), ("K", None), ("Kinv", "+1"))),
    "F": (-1, (("Kinv", None), ("K", "+1"), ("F", None))),
    "K": (1, (("Kinv", None),)),
    "Kinv": (1, (("K", None),)),
    "Kbar": (-1, (("Kbar", None),)),
}


def _antipode_word(kind, r):
    sign, spec = _ANTIPODE[kind]
    word = tuple((k2, r + 1 if shift == "+1" else r) for k2, shift in spec)
    return sign, word


@lru_cache(maxsize=None)
def dual_action_matrix(kind, r, k, n):
    """n-side action on the dual of S^k: (x f)(v) = (-1)^{p(x)p(f)} f(S(x) v)."""
    sign, word = _antipode_word(kind, r)
    mat = None
    for kind2, r2 in word:
        step = sym_action_matrix(kind2, r2, k, n)
        mat = step if mat is None else mat @ step
    gp = generator_parity(kind)
    space = dual_sym_space(k, n)
    entries = {}
    for ((row,), (col,)), val in mat.entries.items():
        # row/col are S^k labels; transpose and twist by the parity of the
        # functional (the dual basis vector indexed by the matrix row)
        fsign = -ONE if (gp and monomial_parity(row)) else ONE
        entries[((("*", col),), (("*", row),))] = fsign * val * sign
    return SuperMap(space, space, gp, entries)


# --- operators for the idempotented presentation -----------------------


def _factorwise_dot(i, m, n, lam):
    """Kbar_i as the dot on the i-th tensor factor of the weight space."""
    src = weight_space(m, n, lam)
    dot = dot_on_sym(lam[i - 1], n)
    entries = {}
    for (mono,) in src.labels:
        rows = split_rows(mono, m)
        presign = sum(monomial_parity(rows[j]) for j in range(i - 1)) & 1
        for ((img,), (col,)), val in dot.entries.items():
            if col != rows[i - 1]:
                continue
            new_rows = rows[:i - 1] + (img,) + rows[i:]
            coeff = -val if presign else val
            entries[((from_rows(new_rows),), (mono,))] = coeff
    return SuperMap(src, src, 1, entries)


def udot_operator(word, lam, m, n):
    """Operator on A_{q,lam} for a word of idempotented generators.

    The word is applied right-to-left.  Symbols: ("E", i, j) and
    ("F", i, j) are divided powers, ("K", i, e) with e = +-1, ("Kbar", i).
    """
    lam = tuple(lam)
    weights = [lam]
    cur = lam
    for sym in reversed(word):
        if sym[0] in ("E", "F"):
            _, i, j = sym
            for _ in range(j):
                cur = _target_weight("m", sym[0], i, m, cur)
        weights.append(cur)
    if any(x < 0 for w in weights for x in w):
        return SuperMap.zero(weight_space(m, n, lam),
                             _maybe_space(m, n, weights[-1]))
    mat = identity(weight_space(m, n, lam))
    cur = lam
    for sym in reversed(word):
        name = sym[0]
        if name in ("E", "F"):
            _, i, j = sym
            step = divided_power_matrix("m", name, i, j, m, n, cur)
            for _ in range(j):
                cur = _target_weight("m", name, i, m, cur)
        elif name == "K":
            _, i, e = sym
            step = act_matrix("m", "K" if e == 1 else "Kinv", i, m, n, cur)
        elif name == "Kbar":
            _, i = sym
            step = _factorwise_dot(i, m, n, cur)
        else:
            raise ValueError("unsupported symbol {!r}".format(sym))
        mat = step @ mat
    return mat
