"""The natural module V_n, the braiding operator T, and S_q(V_n).

Basis indices live in I = {-n, ..., -1, 1, ..., n} with the integer order;
v_i is even when i > 0 and odd when i < 0.  S_q(V_n) is the quotient of the
tensor algebra by  q v_a v_b = T(v_a v_b); its monomial basis consists of
the nondecreasing words in which odd (negative) indices never repeat.
"""

from functools import lru_cache
from math import comb

from .scalars import ScalarQ, ZERO, ONE, Q, QINV, QTILDE, qint
from .superlinear import SuperSpace, SuperMap, tensor_space

__all__ = [
    "index_set",
    "parity",
    "phi",
    "natural_space",
    "t_matrix",
    "sym_basis",
    "sym_dim",
    "sym_normalize",
    "sym_multiply",
    "monomial_parity",
    "FuelExhausted",
]


class FuelExhausted(RuntimeError):
    """The straightening bound was exceeded; signals a strategy bug."""


def index_set(n):
    return list(range(-n, 0)) + list(range(1, n + 1))


def parity(i):
    if i == 0:
        raise ValueError("0 is not a basis index")
    return 0 if i > 0 else 1


def phi(a, b):
    """phi(a, b) = (-1)^{p(b)} when a = b or a = -b, else 0."""
    if a == b or a == -b:
        return -1 if parity(b) else 1
    return 0


@lru_cache(maxsize=None)
def natural_space(n):
    return SuperSpace.from_atoms([(i, parity(i)) for i in index_set(n)])


@lru_cache(maxsize=None)
def t_matrix(n):
    """The endomorphism T of V_n (x) V_n; satisfies T^2 = qtilde T + 1."""
    v = natural_space(n)
    vv = tensor_space(v, v)
    entries = {}

    def put(row, col, val):
        key = (row, col)
        s = entries.get(key, ZERO) + val
        if s:
            entries[key] = s
        elif key in entries:
            del entries[key]

    for a in index_set(n):
        for b in index_set(n):
            col = (a, b)
            sign = -ONE if parity(a) and parity(b) else ONE
            put((b, a), col, ScalarQ.q_power(phi(a, b)) * sign)
            if a < b:
                put((a, b), col, QTILDE)
            if -a < b:
                dsign = -ONE if parity(b) else ONE
                put((-a, -b), col, QTILDE * dsign)
    return SuperMap(vv, vv, 0, entries)


def monomial_parity(mono):
    return sum(1 for i in mono if i < 0) & 1


@lru_cache(maxsize=None)
def sym_basis(d, n):
    """Ordered monomials of degree d: nondecreasing, odd indices square-free."""
    idx = index_set(n)
    out = []

    def build(prefix, pos):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for j in range(pos, len(idx)):
            i = idx[j]
            if i < 0 and prefix and prefix[-1] == i:
                continue
            build(prefix + [i], j)

    build([], 0)
    return tuple(out)


def sym_dim(d, n):
    """dim S_q^d(V_n) = sum_k C(n, k) C(n + d - k - 1, d - k)."""
    total = 0
    for k in range(d + 1):
        total += comb(n, k) * comb(n + d - k - 1, d - k)
    return total


def _add_term(acc, word, coeff):
    s = acc.get(word, ZERO) + coeff
    if s:
        acc[word] = s
    elif word in acc:
        del acc[word]


def sym_normalize(word, n, fuel=None):
    """Express v_{a1} ... v_{ad} in the ordered monomial basis.

    Returns a dict monomial-tuple -> ScalarQ.  Straightening rewrites the
    leftmost out-of-order (or repeated-odd) adjacent pair via the defining
    relation solved for the descending product; a fuel bound guards
    against non-termination.
    """
    word = tuple(word)
    d = len(word)
    if fuel is None:
        fuel = 10 * max(d, 1) * (2 * n) ** d + 100
    pending = [(word, ONE)]
    result = {}
    while pending:
        if fuel <= 0:
            raise FuelExhausted("fuel exhausted")
        fuel -= 1
        w, c = pending.pop()
        for j in range(len(w) - 1):
            x, y = w[j], w[j + 1]
            if x == y and x < 0:
                break  # odd square: the term dies
            if x > y:
                head, tail = w[:j], w[j + 2:]
                sign = -ONE if parity(x) and parity(y) else ONE
                main = c * QINV * ScalarQ.q_power(phi(x, y)) * sign
                pending.append((head + (y, x) + tail, main))
                if -x < y:
                    dsign = -ONE if parity(y) else ONE
                    pending.append(
                        (head + (-x, -y) + tail, c * QINV * QTILDE * dsign))
                break
        else:
            _add_term(result, w, c)
    return result


def sym_multiply(m1, m2, n, fuel=None):
    """Product of two basis monomials, expanded in the basis."""
    return sym_normalize(tuple(m1) + tuple(m2), n, fuel=fuel)
