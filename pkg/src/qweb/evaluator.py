"""Evaluation of web diagrams as exact supermodule maps.

Objects go to tensor products of quantum symmetric powers and their
duals; generators go to explicit matrices over the scalar field.  Thick
merges, splits, and dots are realized through divided-power actions on
coordinate-algebra weight spaces, with relabelling isomorphisms between
those weight spaces and the symmetric-power tensor factors.  Thin
rightward crossings are the matrix inverses of the leftward composites.

The module also hosts the semantic relation-verification suites: a
catalog of diagrammatic identities checked as exact matrix equalities,
and the equivariance checker against the quantum-group generators.
"""

from fractions import Fraction

from .scalars import ScalarQ, ZERO, ONE, QTILDE, qint, qfact, qbinom
from .superlinear import (
    SuperSpace, SuperMap, tensor_space, identity, tensor_map, invert,
)
from .qsym import t_matrix, sym_basis
from .aqhowe import (
    sym_space, dual_sym_space, dot_on_sym, sym_action_matrix,
    dual_action_matrix, udot_operator, weight_space, from_rows, split_rows,
    generator_parity, _coproduct,
)
from .webir import (
    UP, DOWN, WebObject, UNIT_OBJECT, WebDiagram, WebGenerator,
    iden, dot, merge, split, lcup, lcap, rcup, rcap, over_cross, under_cross,
    clasp, identity_diagram, from_generator, compose, tensor, tensor_all,
    compose_all, down_dot, down_merge, down_split, expand_macros, parse_web,
    under_cross as _xu, over_cross as _xo,
)
from .webir import _expand_generator


class DimensionCapError(RuntimeError):
    pass


class EvalContext:
    """Evaluation parameters: rank n, dimension cap, and a matrix cache."""

    def __init__(self, n, cap=4096, screen_q0=None):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.cap = cap
        self.screen_q0 = screen_q0
        self.cache = {}


def eval_object(obj, ctx):
    """The tensor product of symmetric powers and duals for an object."""
    dim = 1
    space = SuperSpace.unit()
    for orient, k in obj.word:
        factor = (sym_space(k, ctx.n) if orient == UP
                  else dual_sym_space(k, ctx.n))
        dim *= factor.dim
        if dim > ctx.cap:
            raise DimensionCapError("dimension cap exceeded")
        space = tensor_space(space, factor)
    return space


def _relabel(f, source, target, row_map, col_map):
    """Copy a map onto new spaces through label bijections."""
    entries = {}
    for (row, col), val in f.entries.items():
        entries[(row_map(row), col_map(col))] = val
    return SuperMap(source, target, f.par, entries)


def _weight_iso_in(lams, n):
    """S^{l1} (x) ... (x) S^{lm} -> the coordinate-algebra weight space.

    Zero entries of the weight contribute no tensor factor on the left.
    """
    m = len(lams)
    rows = [i for i, l in enumerate(lams) if l > 0]
    src = SuperSpace.unit()
    for i in rows:
        src = tensor_space(src, sym_space(lams[i], n))
    tgt = weight_space(m, n, tuple(lams))
    entries = {}
    for label in src.labels:
        full = [()] * m
        for i, part in zip(rows, label):
            full[i] = part
        mono = from_rows(full)
        entries[((mono,), label)] = ONE
    return SuperMap(src, tgt, 0, entries)


def _weight_iso_out(lams, n):
    m = len(lams)
    f = _weight_iso_in(lams, n)
    entries = {(col, row): val for (row, col), val in f.entries.items()}
    return SuperMap(f.target, f.source, 0, entries)


def _merge_map(k, l, n):
    op = udot_operator((("E", 1, l),), (k, l), 2, n)
    return _weight_iso_out((k + l, 0), n) @ op @ _weight_iso_in((k, l), n)


def _split_map(k, l, n):
    op = udot_operator((("E", 1, k),), (0, k + l), 2, n)
    return _weight_iso_out((k, l), n) @ op @ _weight_iso_in((0, k + l), n)


def _thin_crossing(kind, n):
    """The upward crossing on two thin strands; xo is the Hecke operator."""
    t = t_matrix(n)
    v1 = sym_space(1, n)
    space = tensor_space(v1, v1)
    f = _relabel(t, space, space,
                 lambda row: tuple((b,) for b in row),
                 lambda col: tuple((b,) for b in col))
    if kind == "xo":
        return f
    return f + identity(space).scale(-QTILDE)


def _coevaluation(k, n):
    s = sym_space(k, n)
    d = dual_sym_space(k, n)
    target = tensor_space(s, d)
    entries = {}
    for (mono,) in s.labels:
        entries[((mono, ("*", mono)), ())] = ONE
    return SuperMap(SuperSpace.unit(), target, 0, entries)


def _evaluation(k, n):
    s = sym_space(k, n)
    d = dual_sym_space(k, n)
    source = tensor_space(d, s)
    entries = {}
    for (mono,) in s.labels:
        entries[((), (("*", mono), mono))] = ONE
    return SuperMap(source, SuperSpace.unit(), 0, entries)


def eval_generator(g, ctx):
    """The matrix of a primitive (or directly supported) generator."""
    key = (g.kind, g.params, ctx.n)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    n = ctx.n
    kind = g.kind
    if kind == "id":
        out = identity(eval_object(g.source, ctx))
    elif kind == "dot":
        out = dot_on_sym(g.params[0], n)
    elif kind == "merge":
        out = _merge_map(g.params[0], g.params[1], n)
    elif kind == "split":
        out = _split_map(g.params[0], g.params[1], n)
    elif kind == "lcup":
        out = _coevaluation(g.params[0], n)
    elif kind == "lcap":
        out = _evaluation(g.params[0], n)
    elif kind in ("xo", "xu"):
        (o1, k1), (o2, k2) = g.params
        if (o1, o2) == (UP, UP) and k1 == k2 == 1:
            out = _thin_crossing(kind, n)
        elif (o1, o2) == (UP, DOWN) and k1 == k2 == 1:
            # rightward crossings are two-sided inverses of the leftward ones
            partner = "xu" if kind == "xo" else "xo"
            left = eval_generator(
                _crossing_gen(partner, (DOWN, 1), (UP, 1)), ctx)
            out = invert(left)
        else:
            out = eval_diagram(_expand_generator(g), ctx)
    else:
        out = eval_diagram(_expand_generator(g), ctx)
    for space in (out.source, out.target):
        if space.dim > ctx.cap:
            raise DimensionCapError("dimension cap exceeded")
    ctx.cache[key] = out
    return out


def _crossing_gen(kind, item1, item2):
    if kind == "xo":
        return over_cross(item1, item2)
    return under_cross(item1, item2)


def eval_diagram(d, ctx):
    """Evaluate a diagram slicewise: tensor within a slice, then stack.

    Non-primitive generators are evaluated standalone (and cached) rather
    than macro-expanded in place, so spectator strands never inflate the
    intermediate dimensions of a macro's internal slices.
    """
    out = identity(eval_object(d.source, ctx))
    for layer in d.slices:
        layer_map = None
        for g in layer:
            m = eval_generator(g, ctx)
            layer_map = m if layer_map is None else tensor_map(layer_map, m)
        if layer_map is None:
            layer_map = identity(SuperSpace.unit())
        if layer_map.target.dim > ctx.cap:
            raise DimensionCapError("dimension cap exceeded")
        out = layer_map @ out
    if d.prefactor != ONE:
        out = out.scale(d.prefactor)
    return out


# --- quantum-group equivariance ---------------------------------------


def standard_generators(n):
    """The column-side generators acted against in equivariance checks."""
    gens = []
    for i in range(1, n):
        gens.append(("E", i))
        gens.append(("F", i))
    for i in range(1, n + 1):
        gens.append(("K", i))
    gens.append(("Kbar", 1))
    return tuple(gens)


def rep_generator(kind, r, obj, ctx):
    """The action of one generator on the evaluation of an object."""
    key = ("rep", kind, r, obj.word, ctx.n)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    n = ctx.n
    par = generator_parity(kind)
    if len(obj) == 0:
        unit = SuperSpace.unit()
        if kind in ("K", "Kinv"):
            out = identity(unit)
        else:
            out = SuperMap.zero(unit, unit, par)
    elif len(obj) == 1:
        orient, k = obj.word[0]
        if orient == UP:
            out = sym_action_matrix(kind, r, k, n)
        else:
            out = dual_action_matrix(kind, r, k, n)
    else:
        head = WebObject(obj.word[:1])
        rest = WebObject(obj.word[1:])
        out = None
        for left_word, right_word in _coproduct(kind, r):
            term = tensor_map(_rep_word(left_word, head, ctx),
                              _rep_word(right_word, rest, ctx))
            out = term if out is None else out + term
    ctx.cache[key] = out
    return out


def _rep_word(word, obj, ctx):
    """A coproduct word acting on an object; the last factor acts first."""
    out = identity(eval_object(obj, ctx))
    for kind, r in reversed(word):
        out = rep_generator(kind, r, obj, ctx) @ out
    return out


def verify_equivariance(d, ctx, matrix=None):
    """Check the evaluation supercommutes with the quantum group.

    Returns (ok, witness); the witness names the offending generator and
    the first differing matrix entry.
    """
    f = eval_diagram(d, ctx) if matrix is None else matrix
    for kind, r in standard_generators(ctx.n):
        rho_src = rep_generator(kind, r, d.source, ctx)
        rho_tgt = rep_generator(kind, r, d.target, ctx)
        sign = -ONE if (f.par & generator_parity(kind)) else ONE
        lhs = f @ rho_src
        rhs = (rho_tgt @ f).scale(sign)
        if lhs != rhs:
            witness = _first_difference(lhs, rhs)
            return False, ("{}_{}".format(kind, r),) + witness
    return True, None


def _first_difference(lhs, rhs):
    keys = sorted(set(lhs.entries) | set(rhs.entries))
    for key in keys:
        a = lhs.entries.get(key, ZERO)
        b = rhs.entries.get(key, ZERO)
        if a != b:
            return (key, a, b)
    return ((), ZERO, ZERO)


# --- relation catalog --------------------------------------------------


class RelationEntry:
    """A named diagrammatic identity with parameter bounds.

    ``build(params)`` returns a list of (lhs, rhs) pairs, where each side
    is a list of (coefficient, diagram) terms.
    """

    def __init__(self, name, params, build, note):
        self.name = name
        self.params = params
        self.build = build
        self.note = note


def _terms_matrix(terms, ctx):
    out = None
    for coeff, diagram in terms:
        m = eval_diagram(diagram, ctx)
        if coeff != ONE:
            m = m.scale(coeff)
        out = m if out is None else out + m
    return out


def verify_relation(name, params, ctx):
    """Evaluate both sides of a catalog entry; returns (ok, witness)."""
    entry = RELATION_CATALOG[name]
    for lhs_terms, rhs_terms in entry.build(*params):
        lhs = _terms_matrix(lhs_terms, ctx)
        rhs = _terms_matrix(rhs_terms, ctx)
        if rhs is None:  # an empty side asserts the other side vanishes
            rhs = SuperMap.zero(lhs.source, lhs.target)
        if lhs is None:
            lhs = SuperMap.zero(rhs.source, rhs.target)
        if ctx.screen_q0 is not None:
            if lhs.specialized_entries(ctx.screen_q0) == \
                    rhs.specialized_entries(ctx.screen_q0) and lhs == rhs:
                continue
        elif lhs == rhs:
            continue
        return False, _first_difference(lhs, rhs)
    return True, None


def _d(text):
    return parse_web(text)


def _one(diagram):
    return [(ONE, diagram)]


def _ids(*items):
    return identity_diagram(WebObject(items))


def _maybe_ids(k):
    return _ids((UP, k)) if k else identity_diagram(UNIT_OBJECT)


def _up_rung(k, l, j):
    """Move j strands from the right leg to the left: (k,l) -> (k+j,l-j)."""
    first = tensor(_maybe_ids(k), from_generator(split(j, l - j)) if l - j
                   else _ids((UP, j)))
    second = tensor(from_generator(merge(k, j)) if k else _ids((UP, j)),
                    _maybe_ids(l - j))
    return compose(second, first)


def _down_rung(k, l, j):
    """Move j strands from the left leg to the right: (k,l) -> (k-j,l+j)."""
    first = tensor(from_generator(split(k - j, j)) if k - j
                   else _ids((UP, j)), _maybe_ids(l))
    second = tensor(_maybe_ids(k - j),
                    from_generator(merge(j, l)) if l else _ids((UP, j)))
    return compose(second, first)


def _dotted_up_rung(k, l):
    """A one-strand rung toward the left leg carrying a dot."""
    return compose_all([
        tensor(_maybe_ids(k), from_generator(split(1, l - 1)) if l > 1
               else _ids((UP, 1))),
        tensor_all([_maybe_ids(k), from_generator(dot(1)),
                    _maybe_ids(l - 1)]),
        tensor(from_generator(merge(k, 1)) if k else _ids((UP, 1)),
               _maybe_ids(l - 1)),
    ])


def _dotted_down_rung(k, l):
    return compose_all([
        tensor(from_generator(split(k - 1, 1)) if k > 1
               else _ids((UP, 1)), _maybe_ids(l)),
        tensor_all([_maybe_ids(k - 1), from_generator(dot(1)),
                    _maybe_ids(l)]),
        tensor(_maybe_ids(k - 1),
               from_generator(merge(1, l)) if l else _ids((UP, 1))),
    ])


RELATION_CATALOG = {}


def _register(name, params, note):
    def wrap(fn):
        RELATION_CATALOG[name] = RelationEntry(name, params, fn, note)
        return fn
    return wrap


def _thin_ids(count):
    return _ids(*(((UP, 1),) * count)) if count else identity_diagram(
        UNIT_OBJECT)


def _at_strand(gen, i, total, width=2):
    """Embed a web of ``width`` thin upward strands at position i of
    ``total`` thin upward strands (0-based)."""
    core = from_generator(gen) if isinstance(gen, WebGenerator) else gen
    return tensor_all([_thin_ids(i), core, _thin_ids(total - i - width)])


# -- upward suite: defining relations of the thick upward calculus ------


@_register("merge-associative", "k,l,m >= 1",
           "merging three legs is independent of bracketing")
def _rel_merge_assoc(k, l, m):
    lhs = compose(from_generator(merge(k + l, m)),
                  tensor(from_generator(merge(k, l)), _ids((UP, m))))
    rhs = compose(from_generator(merge(k, l + m)),
                  tensor(_ids((UP, k)), from_generator(merge(l, m))))
    return [(_one(lhs), _one(rhs))]


@_register("split-coassociative", "k,l,m >= 1",
           "splitting into three legs is independent of bracketing")
def _rel_split_coassoc(k, l, m):
    lhs = compose(tensor(from_generator(split(k, l)), _ids((UP, m))),
                  from_generator(split(k + l, m)))
    rhs = compose(tensor(_ids((UP, k)), from_generator(split(l, m))),
                  from_generator(split(k, l + m)))
    return [(_one(lhs), _one(rhs))]


@_register("digon", "k,l >= 1",
           "splitting then remerging scales by a quantum binomial")
def _rel_digon(k, l):
    lhs = compose(from_generator(merge(k, l)), from_generator(split(k, l)))
    rhs = identity_diagram(WebObject(((UP, k + l),)))
    return [(_one(lhs), [(qbinom(k + l, l), rhs)])]


@_register("dumbbell", "none",
           "merging two thin strands then splitting equals q^-1 plus the "
           "positive crossing")
def _rel_dumbbell():
    lhs = compose(from_generator(split(1, 1)), from_generator(merge(1, 1)))
    ident = _ids((UP, 1), (UP, 1))
    return [(_one(lhs),
             [(ScalarQ.q_power(-1), ident),
              (ONE, from_generator(over_cross((UP, 1), (UP, 1))))])]


@_register("dot-collision", "k >= 1",
           "two dots on an upward strand of thickness k give [k] at q^2")
def _rel_dot_collision(k):
    lhs = compose(from_generator(dot(k)), from_generator(dot(k)))
    return [(_one(lhs),
             [(qint(k, 2), identity_diagram(WebObject(((UP, k),))))])]


@_register("down-dot-collision", "k >= 1",
           "two dots on a downward strand give minus [k] at q^2")
def _rel_down_dot_collision(k):
    lhs = compose(down_dot(k), down_dot(k))
    return [(_one(lhs),
             [(-qint(k, 2), identity_diagram(WebObject(((DOWN, k),))))])]


@_register("dot-thin-leg", "k >= 2",
           "a dot on either thin leg of an exploded strand is the thick dot")
def _rel_dot_thin_leg(k):
    left = compose_all([
        from_generator(split(1, k - 1)),
        tensor(from_generator(dot(1)), _ids((UP, k - 1))),
        from_generator(merge(1, k - 1)),
    ])
    right = compose_all([
        from_generator(split(k - 1, 1)),
        tensor(_ids((UP, k - 1)), from_generator(dot(1))),
        from_generator(merge(k - 1, 1)),
    ])
    thick = from_generator(dot(k))
    return [(_one(left), _one(thick)), (_one(right), _one(thick))]


@_register("dots-past-merge", "k,l >= 1",
           "a dot below a merge expands into dotted legs with q-weights")
def _rel_dots_past_merge(k, l):
    lhs = compose(from_generator(dot(k + l)), from_generator(merge(k, l)))
    t1 = compose(from_generator(merge(k, l)),
                 tensor(from_generator(dot(k)), _ids((UP, l))))
    t2 = compose(from_generator(merge(k, l)),
                 tensor(_ids((UP, k)), from_generator(dot(l))))
    return [(_one(lhs), [(ScalarQ.q_power(l), t1),
                         (ScalarQ.q_power(-k), t2)])]


@_register("dots-past-split", "k,l >= 1",
           "a dot above a split expands into dotted legs with q-weights")
def _rel_dots_past_split(k, l):
    lhs = compose(from_generator(split(k, l)), from_generator(dot(k + l)))
    t1 = compose(tensor(from_generator(dot(k)), _ids((UP, l))),
                 from_generator(split(k, l)))
    t2 = compose(tensor(_ids((UP, k)), from_generator(dot(l))),
                 from_generator(split(k, l)))
    return [(_one(lhs), [(ScalarQ.q_power(-l), t1),
                         (ScalarQ.q_power(k), t2)])]


@_register("rung-collision", "k,l,r,s with r,s >= 1, r+s <= l",
           "stacked rungs in the same direction combine with a quantum "
           "binomial")
def _rel_rung_collision(k, l, r, s):
    c = qbinom(r + s, s)
    up = compose(_up_rung(k + r, l - r, s), _up_rung(k, l, r))
    out = [(_one(up), [(c, _up_rung(k, l, r + s))])]
    if r + s <= k:
        down = compose(_down_rung(k - r, l + r, s), _down_rung(k, l, r))
        out.append((_one(down), [(c, _down_rung(k, l, r + s))]))
    return out


@_register("square-switch", "k,l >= 1, 1 <= r <= k",
           "a single up rung and an r-fold down rung reorder up to a "
           "quantum-integer multiple of the (r-1)-fold down rung")
def _rel_square_switch(k, l, r):
    down_then_up = compose(_up_rung(k - r, l + r, 1), _down_rung(k, l, r))
    up_then_down = compose(_down_rung(k + 1, l - 1, r), _up_rung(k, l, 1))
    corr = _down_rung(k, l, r - 1) if r > 1 else \
        _ids((UP, k), (UP, l))
    return [([(ONE, down_then_up), (-ONE, up_then_down)],
             [(qint(k - l + 1 - r, 1), corr)])]


@_register("square-switch-dots", "k,l >= 1",
           "dotted rungs in both orders sum to a quantum integer plus a "
           "double dot")
def _rel_square_switch_dots(k, l):
    a = compose(_dotted_up_rung(k - 1, l + 1), _dotted_down_rung(k, l))
    b = compose(_dotted_down_rung(k + 1, l - 1), _dotted_up_rung(k, l))
    ident = _ids((UP, k), (UP, l))
    dd = tensor(from_generator(dot(k)), from_generator(dot(l)))
    return [([(ONE, a), (ONE, b)],
             [(qint(k + l, 1), ident), (QTILDE, dd)])]


@_register("untwist", "k >= 2, 1 <= i < k",
           "a clasp absorbs an adjacent positive crossing at the cost of q")
def _rel_untwist(k, i):
    cl = from_generator(clasp(k))
    xo_i = _at_strand(over_cross((UP, 1), (UP, 1)), i - 1, k)
    xu_i = _at_strand(under_cross((UP, 1), (UP, 1)), i - 1, k)
    return [
        (_one(compose(cl, xo_i)), [(ScalarQ.q_power(1), cl)]),
        (_one(compose(xo_i, cl)), [(ScalarQ.q_power(1), cl)]),
        (_one(compose(cl, xu_i)), [(ScalarQ.q_power(-1), cl)]),
        (_one(compose(xu_i, cl)), [(ScalarQ.q_power(-1), cl)]),
    ]


# -- braiding suite: upward crossings ------------------------------------


@_register("hecke", "none",
           "the thin upward crossing satisfies the quadratic skein and is "
           "invertible")
def _rel_hecke():
    xo = from_generator(over_cross((UP, 1), (UP, 1)))
    xu = from_generator(under_cross((UP, 1), (UP, 1)))
    ident = _ids((UP, 1), (UP, 1))
    return [
        ([(ONE, xo), (-ONE, xu)], [(QTILDE, ident)]),
        (_one(compose(xo, xu)), _one(ident)),
        (_one(compose(xu, xo)), _one(ident)),
    ]


@_register("braid", "none",
           "adjacent thin upward crossings satisfy the braid relation")
def _rel_braid():
    out = []
    for make in (over_cross, under_cross):
        x01 = _at_strand(make((UP, 1), (UP, 1)), 0, 3)
        x12 = _at_strand(make((UP, 1), (UP, 1)), 1, 3)
        lhs = compose_all([x01, x12, x01])
        rhs = compose_all([x12, x01, x12])
        out.append((_one(lhs), _one(rhs)))
    return out


@_register("pitchfork", "none",
           "merges and splits pass through crossings of thin strands")
def _rel_pitchfork():
    out = []
    for make in (over_cross, under_cross):
        x = from_generator(make((UP, 1), (UP, 1)))
        x01, x12 = _at_strand(x, 0, 3), _at_strand(x, 1, 3)
        m = from_generator(merge(1, 1))
        s = from_generator(split(1, 1))
        # thick strand crossing over/under a thin one, merge below
        lhs = compose(from_generator(make((UP, 2), (UP, 1))),
                      tensor(m, _ids((UP, 1))))
        rhs = compose_all([x12, x01, tensor(_ids((UP, 1)), m)])
        out.append((_one(lhs), _one(rhs)))
        # thin strand crossing a thick one, merge below on the right
        lhs = compose(from_generator(make((UP, 1), (UP, 2))),
                      tensor(_ids((UP, 1)), m))
        rhs = compose_all([x01, x12, tensor(m, _ids((UP, 1)))])
        out.append((_one(lhs), _one(rhs)))
        # splits above crossings
        lhs = compose(tensor(_ids((UP, 1)), s),
                      from_generator(make((UP, 2), (UP, 1))))
        rhs = compose_all([tensor(s, _ids((UP, 1))), x12, x01])
        out.append((_one(lhs), _one(rhs)))
        lhs = compose(tensor(s, _ids((UP, 1))),
                      from_generator(make((UP, 1), (UP, 2))))
        rhs = compose_all([tensor(_ids((UP, 1)), s), x01, x12])
        out.append((_one(lhs), _one(rhs)))
    return out


# -- oriented suite: thin strands of all four orientations ---------------


def _strand_dot(item):
    return from_generator(dot(1)) if item[0] == UP else down_dot(1)


def _left_smoothing():
    # turnback replacing a leftward crossing: cap below, cup above
    return compose(from_generator(lcup(1)), from_generator(lcap(1)))


def _right_smoothing():
    return compose(from_generator(rcup(1)), from_generator(rcap(1)))


@_register("skein", "orientation in {up, down, left, right}",
           "over minus under crossing is q-tilde times the identity "
           "(vertical) or minus q-tilde times the turnback (horizontal)")
def _rel_skein(orientation):
    pairs = {
        "up": ((UP, 1), (UP, 1)), "down": ((DOWN, 1), (DOWN, 1)),
        "left": ((DOWN, 1), (UP, 1)), "right": ((UP, 1), (DOWN, 1)),
    }
    i1, i2 = pairs[orientation]
    xo = from_generator(over_cross(i1, i2))
    xu = from_generator(under_cross(i1, i2))
    if orientation in ("up", "down"):
        rhs = [(QTILDE, _ids(i1, i2))]
    elif orientation == "left":
        rhs = [(-QTILDE, _left_smoothing())]
    else:
        rhs = [(-QTILDE, _right_smoothing())]
    return [([(ONE, xo), (-ONE, xu)], rhs)]


@_register("inverse-crossings", "none",
           "over and under crossings compose to the identity in both "
           "stacking orders, for every orientation")
def _rel_inverse_crossings():
    out = []
    for i1, i2 in (((UP, 1), (UP, 1)), ((DOWN, 1), (DOWN, 1))):
        xo = from_generator(over_cross(i1, i2))
        xu = from_generator(under_cross(i1, i2))
        ident = _ids(i1, i2)
        out.append((_one(compose(xo, xu)), _one(ident)))
        out.append((_one(compose(xu, xo)), _one(ident)))
    lo = from_generator(over_cross((DOWN, 1), (UP, 1)))
    lu = from_generator(under_cross((DOWN, 1), (UP, 1)))
    ro = from_generator(over_cross((UP, 1), (DOWN, 1)))
    ru = from_generator(under_cross((UP, 1), (DOWN, 1)))
    id_ud = _ids((UP, 1), (DOWN, 1))
    id_du = _ids((DOWN, 1), (UP, 1))
    out.append((_one(compose(lo, ru)), _one(id_ud)))
    out.append((_one(compose(lu, ro)), _one(id_ud)))
    out.append((_one(compose(ro, lu)), _one(id_du)))
    out.append((_one(compose(ru, lo)), _one(id_du)))
    return out


@_register("circles", "k >= 1",
           "closed circles of either orientation vanish, dotted or not")
def _rel_circles(k):
    zero = []
    ccw = compose(from_generator(rcap(k)), from_generator(lcup(k)))
    cw = compose(from_generator(lcap(k)), from_generator(rcup(k)))
    ccw_dot = compose_all([
        from_generator(lcup(k)),
        tensor(from_generator(dot(k)), _ids((DOWN, k))),
        from_generator(rcap(k)),
    ])
    cw_dot = compose_all([
        from_generator(rcup(k)),
        tensor(_ids((DOWN, k)), from_generator(dot(k))),
        from_generator(lcap(k)),
    ])
    return [(_one(d), zero) for d in (ccw, cw, ccw_dot, cw_dot)]


@_register("zigzags", "k >= 1",
           "cup-cap zigzags straighten to the identity strand")
def _rel_zigzags(k):
    id_u, id_d = _ids((UP, k)), _ids((DOWN, k))
    z1 = compose(tensor(id_u, from_generator(lcap(k))),
                 tensor(from_generator(lcup(k)), id_u))
    z2 = compose(tensor(from_generator(lcap(k)), id_d),
                 tensor(id_d, from_generator(lcup(k))))
    z3 = compose(tensor(from_generator(rcap(k)), id_u),
                 tensor(id_u, from_generator(rcup(k))))
    z4 = compose(tensor(id_d, from_generator(rcap(k))),
                 tensor(from_generator(rcup(k)), id_d))
    return [(_one(z1), _one(id_u)), (_one(z2), _one(id_d)),
            (_one(z3), _one(id_u)), (_one(z4), _one(id_d))]


@_register("rightward-thin", "none",
           "thin rightward cups and caps are leftward ones with a "
           "crossing attached, for either crossing kind")
def _rel_rightward_thin():
    out = []
    for make in (over_cross, under_cross):
        x = from_generator(make((UP, 1), (DOWN, 1)))
        out.append((_one(from_generator(rcup(1))),
                    _one(compose(x, from_generator(lcup(1))))))
        out.append((_one(from_generator(rcap(1))),
                    _one(compose(from_generator(lcap(1)), x))))
    return out


@_register("dot-through-crossing", "orientation in {up, down, left, right}",
           "dots slide along the over strand freely and along the under "
           "strand up to q-tilde correction terms")
def _rel_dot_through_crossing(orientation):
    pairs = {
        "up": ((UP, 1), (UP, 1)), "down": ((DOWN, 1), (DOWN, 1)),
        "left": ((DOWN, 1), (UP, 1)), "right": ((UP, 1), (DOWN, 1)),
    }
    i1, i2 = pairs[orientation]
    o1, o2 = i2, i1  # crossings swap the two strands
    out = []
    for make, is_over in ((over_cross, True), (under_cross, False)):
        x = from_generator(make(i1, i2))
        src0 = compose(x, tensor(_strand_dot(i1), _ids(i2)))
        src1 = compose(x, tensor(_ids(i1), _strand_dot(i2)))
        tgt0 = compose(tensor(_strand_dot(o1), _ids(o2)), x)
        tgt1 = compose(tensor(_ids(o1), _strand_dot(o2)), x)
        if orientation in ("up", "down"):
            d0 = tensor(_strand_dot(i1), _ids(i2))
            d1 = tensor(_ids(i1), _strand_dot(i2))
            if is_over:
                # dot entering on the right slides across; the left one
                # picks up correction terms
                out.append(([(ONE, tgt0)],
                            [(ONE, src1), (QTILDE, d0), (-QTILDE, d1)]))
                out.append((_one(tgt1), _one(src0)))
            else:
                out.append(([(ONE, tgt1)],
                            [(ONE, src0), (QTILDE, d0), (-QTILDE, d1)]))
                out.append((_one(tgt0), _one(src1)))
        else:
            smooth = _left_smoothing() if orientation == "left" \
                else _right_smoothing()
            cup_dot = compose(tensor(_strand_dot(o1), _ids(o2)), smooth)
            cap_dot = compose(smooth, tensor(_strand_dot(i1), _ids(i2)))
            if is_over:
                out.append((_one(src0), _one(tgt1)))
                out.append(([(ONE, src1)],
                            [(ONE, tgt0), (QTILDE, cup_dot),
                             (-QTILDE, cap_dot)]))
            else:
                out.append((_one(src1), _one(tgt0)))
                out.append(([(ONE, src0)],
                            [(ONE, tgt1), (QTILDE, cap_dot),
                             (-QTILDE, cup_dot)]))
    return out


@_register("dot-past-cup-cap", "none",
           "a dot slides across any cup or cap without a sign")
def _rel_dot_past_cup_cap():
    lc, lk = from_generator(lcup(1)), from_generator(lcap(1))
    rc, rk = from_generator(rcup(1)), from_generator(rcap(1))
    du, dd = from_generator(dot(1)), down_dot(1)
    id_u, id_d = _ids((UP, 1)), _ids((DOWN, 1))
    return [
        (_one(compose(lk, tensor(dd, id_u))),
         _one(compose(lk, tensor(id_d, du)))),
        (_one(compose(tensor(du, id_d), lc)),
         _one(compose(tensor(id_u, dd), lc))),
        (_one(compose(rk, tensor(du, id_d))),
         _one(compose(rk, tensor(id_u, dd)))),
        (_one(compose(tensor(dd, id_u), rc)),
         _one(compose(tensor(id_d, du), rc))),
    ]


# -- twists and closed webs ---------------------------------------------


def _curl(k, make):
    return compose_all([
        tensor(_ids((UP, k)), from_generator(rcup(k))),
        tensor(from_generator(make((UP, k), (DOWN, k))), _ids((UP, k))),
        tensor(from_generator(lcap(k)), _ids((UP, k))),
    ])


@_register("curl", "k >= 1",
           "a positive curl scales a thickness-k strand by q^(k(k-1)); "
           "a negative curl by its inverse")
def _rel_curl(k):
    ident = _ids((UP, k))
    return [
        (_one(_curl(k, over_cross)),
         [(ScalarQ.q_power(-k * (k - 1)), ident)]),
        (_one(_curl(k, under_cross)),
         [(ScalarQ.q_power(k * (k - 1)), ident)]),
    ]


@_register("closed-kink", "none",
           "a circle with a kink still vanishes")
def _rel_closed_kink():
    out = []
    for make in (over_cross, under_cross):
        d = compose_all([
            from_generator(lcup(1)),
            from_generator(make((UP, 1), (DOWN, 1))),
            from_generator(lcap(1)),
        ])
        out.append((_one(d), []))
    return out


# -- suites --------------------------------------------------------------

SUITES = {
    "upward": [
        ("merge-associative", (1, 1, 1)), ("merge-associative", (2, 1, 1)),
        ("merge-associative", (1, 2, 1)),
        ("split-coassociative", (1, 1, 1)), ("split-coassociative", (1, 1, 2)),
        ("digon", (1, 1)), ("digon", (2, 1)), ("digon", (1, 2)),
        ("dumbbell", ()),
        ("dot-collision", (1,)), ("dot-collision", (2,)),
        ("down-dot-collision", (1,)), ("down-dot-collision", (2,)),
        ("dot-thin-leg", (2,)), ("dot-thin-leg", (3,)),
        ("dots-past-merge", (1, 1)), ("dots-past-merge", (2, 1)),
        ("dots-past-merge", (1, 2)),
        ("dots-past-split", (1, 1)), ("dots-past-split", (2, 1)),
        ("dots-past-split", (1, 2)),
        ("rung-collision", (1, 2, 1, 1)), ("rung-collision", (2, 2, 1, 1)),
        ("square-switch", (2, 1, 1)), ("square-switch", (1, 2, 1)),
        ("square-switch", (2, 2, 2)),
        ("square-switch-dots", (1, 1)), ("square-switch-dots", (2, 1)),
        ("square-switch-dots", (1, 2)),
        ("untwist", (2, 1)), ("untwist", (3, 1)), ("untwist", (3, 2)),
    ],
    "hecke": [
        ("hecke", ()), ("braid", ()), ("pitchfork", ()),
    ],
    "oriented": [
        ("skein", ("up",)), ("skein", ("down",)), ("skein", ("left",)),
        ("skein", ("right",)),
        ("inverse-crossings", ()),
        ("circles", (1,)), ("circles", (2,)),
        ("zigzags", (1,)), ("zigzags", (2,)),
        ("rightward-thin", ()),
        ("dot-through-crossing", ("up",)), ("dot-through-crossing", ("down",)),
        ("dot-through-crossing", ("left",)),
        ("dot-through-crossing", ("right",)),
        ("dot-past-cup-cap", ()),
        ("closed-kink", ()),
    ],
    "twists": [
        ("curl", (1,)), ("curl", (2,)),
    ],
}


def verify_suite(suite, ctx):
    """Run every instantiated entry of a named suite.

    Returns a report dict with one (name, params, ok, witness) tuple per
    instantiation and an overall flag.
    """
    results = []
    ok_all = True
    for name, params in SUITES[suite]:
        ok, witness = verify_relation(name, params, ctx)
        ok_all = ok_all and ok
        results.append({"name": name, "params": params, "ok": ok,
                        "witness": None if ok else witness})
    return {"suite": suite, "n": ctx.n, "ok": ok_all, "results": results}
