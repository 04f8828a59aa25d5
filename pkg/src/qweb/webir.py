"""Intermediate representation for oriented web diagrams.

A web diagram is a stack of horizontal slices of generators, read bottom
to top: in the textual form ``d1 ; d2`` the piece ``d1`` is applied
first.  Objects are words of oriented, positively labelled strands.
Each diagram carries an exact scalar prefactor so that macro expansions
(clasps, thick crossings, rightward cups and caps) remain single
diagrams.

The textual DSL::

    object  := (("u" | "d") INT)+
    diagram := term (";" term)*
    term    := atom ("*" atom)*
    atom    := id(object) | dot(k) | merge(k,l) | split(k,l)
             | lcup(k) | lcap(k) | rcup(k) | rcap(k)
             | xo(item,item) | xu(item,item) | clasp(k)
    braid   := "braid" INT "[" INT ("," INT)* "]" ":" ("s" SIGNED_INT)+

Crossing handedness: in ``xo`` the strand entering at the bottom left
passes over; in ``xu`` it passes under.  This convention is uniform for
all orientations and is pinned semantically by the Hecke relation sign
in the evaluator tests.
"""

import re

from .scalars import ScalarQ, ONE, qfact

UP = "u"
DOWN = "d"


class WebSyntaxError(ValueError):
    """Syntax error with a character position."""

    def __init__(self, message, position):
        super().__init__("{} at position {}".format(message, position))
        self.message = message
        self.position = position


class WebObject:
    """A word of (orientation, label) strands.

    Labels are positive integers; an entry labelled zero is omitted and
    negative labels are rejected.
    """

    __slots__ = ("word",)

    def __init__(self, word):
        cleaned = []
        for orient, k in word:
            if orient not in (UP, DOWN):
                raise ValueError("bad orientation {!r}".format(orient))
            if k < 0:
                raise ValueError("negative label")
            if k == 0:
                continue
            cleaned.append((orient, int(k)))
        object.__setattr__(self, "word", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("WebObject is immutable")

    def __eq__(self, other):
        return isinstance(other, WebObject) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __len__(self):
        return len(self.word)

    def tensor(self, other):
        return WebObject(self.word + other.word)

    def pretty(self):
        if not self.word:
            return ""
        return " ".join(o + str(k) for o, k in self.word)

    def __repr__(self):
        return "WebObject({})".format(self.pretty() or "1")


UNIT_OBJECT = WebObject(())


def _obj(*items):
    return WebObject(items)


class WebGenerator:
    """A single vertex of the diagram calculus."""

    __slots__ = ("kind", "params", "source", "target", "parity")

    def __init__(self, kind, params, source, target, parity):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "parity", parity)

    def __setattr__(self, name, value):
        raise AttributeError("WebGenerator is immutable")

    def __eq__(self, other):
        return (isinstance(other, WebGenerator)
                and self.kind == other.kind and self.params == other.params)

    def __hash__(self):
        return hash((self.kind, self.params))

    def __repr__(self):
        return "WebGenerator({}, {})".format(self.kind, self.params)

    def pretty(self):
        k = self.kind
        if k == "id":
            return "id({})".format(self.source.pretty())
        if k in ("xo", "xu"):
            (o1, k1), (o2, k2) = self.params
            return "{}({}{},{}{})".format(k, o1, k1, o2, k2)
        return "{}({})".format(k, ",".join(str(p) for p in self.params))


def _check_label(k):
    if k < 1:
        raise ValueError("label must be positive, got {}".format(k))
    return int(k)


def iden(obj):
    return WebGenerator("id", (obj,), obj, obj, 0)


def dot(k):
    k = _check_label(k)
    return WebGenerator("dot", (k,), _obj((UP, k)), _obj((UP, k)), 1)


def merge(k, l):
    k, l = _check_label(k), _check_label(l)
    return WebGenerator("merge", (k, l),
                        _obj((UP, k), (UP, l)), _obj((UP, k + l)), 0)


def split(k, l):
    k, l = _check_label(k), _check_label(l)
    return WebGenerator("split", (k, l),
                        _obj((UP, k + l)), _obj((UP, k), (UP, l)), 0)


def lcup(k):
    k = _check_label(k)
    return WebGenerator("lcup", (k,), UNIT_OBJECT, _obj((UP, k), (DOWN, k)), 0)


def lcap(k):
    k = _check_label(k)
    return WebGenerator("lcap", (k,), _obj((DOWN, k), (UP, k)), UNIT_OBJECT, 0)


def rcup(k):
    k = _check_label(k)
    return WebGenerator("rcup", (k,), UNIT_OBJECT, _obj((DOWN, k), (UP, k)), 0)


def rcap(k):
    k = _check_label(k)
    return WebGenerator("rcap", (k,), _obj((UP, k), (DOWN, k)), UNIT_OBJECT, 0)


def _crossing(kind, item1, item2):
    (o1, k1), (o2, k2) = item1, item2
    if o1 not in (UP, DOWN) or o2 not in (UP, DOWN):
        raise ValueError("bad orientation in crossing")
    item1 = (o1, _check_label(k1))
    item2 = (o2, _check_label(k2))
    return WebGenerator(kind, (item1, item2),
                        _obj(item1, item2), _obj(item2, item1), 0)


def over_cross(item1, item2):
    """Crossing whose bottom-left strand passes over."""
    return _crossing("xo", item1, item2)


def under_cross(item1, item2):
    """Crossing whose bottom-left strand passes under."""
    return _crossing("xu", item1, item2)


def clasp(k):
    k = _check_label(k)
    obj = WebObject(((UP, 1),) * k)
    return WebGenerator("clasp", (k,), obj, obj, 0)


class WebDiagram:
    """A stack of slices with an exact scalar prefactor.

    Slices are ordered bottom first; each slice is a tuple of generators
    read left to right, and adjacent slices match on their boundary
    words.
    """

    __slots__ = ("source", "target", "slices", "prefactor", "parity")

    def __init__(self, source, slices, prefactor=ONE):
        boundary = source
        parity = 0
        norm = []
        for layer in slices:
            layer = tuple(layer)
            want = []
            for g in layer:
                want.extend(g.source.word)
                parity ^= g.parity
            if tuple(want) != boundary.word:
                raise ValueError("object mismatch: slice expects {}, have {}"
                                 .format(WebObject(want).pretty() or "1",
                                         boundary.pretty() or "1"))
            out = []
            for g in layer:
                out.extend(g.target.word)
            boundary = WebObject(out)
            if any(g.kind != "id" for g in layer):
                norm.append(layer)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", boundary)
        object.__setattr__(self, "slices", tuple(norm))
        object.__setattr__(self, "prefactor", prefactor)
        object.__setattr__(self, "parity", parity)

    def __setattr__(self, name, value):
        raise AttributeError("WebDiagram is immutable")

    def __eq__(self, other):
        return (isinstance(other, WebDiagram)
                and self.source == other.source
                and self.slices == other.slices
                and self.prefactor == other.prefactor)

    def __hash__(self):
        return hash((self.source, self.slices, self.prefactor))

    def __repr__(self):
        return "WebDiagram({} -> {}, {} slices)".format(
            self.source.pretty() or "1", self.target.pretty() or "1",
            len(self.slices))

    def scale(self, c):
        return WebDiagram(self.source, self.slices, self.prefactor * c)

    def then(self, other):
        """This diagram first, then ``other`` on top."""
        return compose(other, self)

    def pretty(self):
        if self.prefactor != ONE:
            raise ValueError("prefactor not printable")
        if not self.slices:
            return "id({})".format(self.source.pretty())
        return " ; ".join(" * ".join(g.pretty() for g in layer)
                          for layer in self.slices)


def identity_diagram(obj):
    return WebDiagram(obj, ())


def from_generator(g):
    if g.kind == "id":
        return identity_diagram(g.source)
    return WebDiagram(g.source, ((g,),))


def compose(top, bottom):
    """The diagram applying ``bottom`` first and ``top`` above it."""
    if bottom.target != top.source:
        raise ValueError("object mismatch: {} composed onto {}".format(
            top.source.pretty() or "1", bottom.target.pretty() or "1"))
    return WebDiagram(bottom.source, bottom.slices + top.slices,
                      bottom.prefactor * top.prefactor)


def tensor(left, right):
    """Horizontal juxtaposition.

    Normalized as (left x id) stacked on top of (id x right), so that the
    tensor of diagrams always evaluates to the graded tensor of the maps
    they evaluate to, regardless of the parities of the layers.
    """
    def pad(obj):
        return tuple(iden(WebObject((item,))) for item in obj.word)

    layers = []
    if len(left.slices) <= 1 and len(right.slices) <= 1:
        # a single joint layer is evaluated by one graded tensor product,
        # so no stacking is needed to get the sign right
        if left.slices or right.slices:
            l_layer = left.slices[0] if left.slices else pad(left.source)
            r_layer = right.slices[0] if right.slices else pad(right.source)
            layers.append(l_layer + r_layer)
    else:
        for layer in right.slices:
            layers.append(pad(left.source) + layer)
        for layer in left.slices:
            layers.append(layer + pad(right.target))
    return WebDiagram(left.source.tensor(right.source), layers,
                      left.prefactor * right.prefactor)


def tensor_all(parts):
    out = identity_diagram(UNIT_OBJECT)
    for p in parts:
        out = tensor(out, p)
    return out


def compose_all(parts):
    """Compose a list of diagrams, the first applied first."""
    out = parts[0]
    for p in parts[1:]:
        out = compose(p, out)
    return out


# --- derived (downward) generators ------------------------------------


def down_dot(k):
    """The dot on a downward strand, as a cup/cap conjugate."""
    dk, uk = _obj((DOWN, k)), _obj((UP, k))
    return WebDiagram(dk, (
        (iden(dk), lcup(k)),
        (iden(dk), dot(k), iden(dk)),
        (lcap(k), iden(dk)),
    ))


def down_merge(k, l):
    """The downward merge, of type  down(k+l) -> down(k) down(l)."""
    dkl = _obj((DOWN, k + l))
    dk, dl, uk, ul = (_obj((DOWN, k)), _obj((DOWN, l)),
                      _obj((UP, k)), _obj((UP, l)))
    return WebDiagram(dkl, (
        (iden(dkl), lcup(l)),
        (iden(dkl), iden(ul), lcup(k), iden(dl)),
        (iden(dkl), merge(l, k), iden(dk), iden(dl)),
        (lcap(k + l), iden(dk), iden(dl)),
    ))


def down_split(k, l):
    """The downward split, of type  down(k) down(l) -> down(k+l)."""
    dk, dl, uk = _obj((DOWN, k)), _obj((DOWN, l)), _obj((UP, k))
    dkl, ukl = _obj((DOWN, k + l)), _obj((UP, k + l))
    return WebDiagram(dk.tensor(dl), (
        (iden(dk), iden(dl), lcup(k + l)),
        (iden(dk), iden(dl), split(l, k), iden(dkl)),
        (iden(dk), lcap(l), iden(uk), iden(dkl)),
        (lcap(k), iden(dkl)),
    ))


def up_explode(k):
    """Split an upward k-strand into k thin strands."""
    out = identity_diagram(_obj((UP, k)))
    for j in range(k - 1):
        thin = identity_diagram(WebObject(((UP, 1),) * j))
        rest = from_generator(split(1, k - j - 1))
        out = compose(tensor(thin, rest), out)
    return out


def up_implode(k):
    """Merge k thin upward strands into one k-strand."""
    out = identity_diagram(WebObject(((UP, 1),) * k))
    for j in range(k - 1):
        rest = identity_diagram(WebObject(((UP, 1),) * (k - j - 2)))
        out = compose(tensor(from_generator(merge(j + 1, 1)), rest), out)
    return out


def down_explode(k):
    """Split a downward k-strand into k thin strands."""
    out = identity_diagram(_obj((DOWN, k)))
    for j in range(k - 1):
        thin = identity_diagram(WebObject(((DOWN, 1),) * j))
        out = compose(tensor(thin, down_merge(1, k - j - 1)), out)
    return out


def down_implode(k):
    """Merge k thin downward strands into one k-strand."""
    out = identity_diagram(WebObject(((DOWN, 1),) * k))
    for j in range(k - 1):
        rest = identity_diagram(WebObject(((DOWN, 1),) * (k - j - 2)))
        out = compose(tensor(down_split(j + 1, 1), rest), out)
    return out


# --- macro expansion ---------------------------------------------------

_PRIMITIVE_KINDS = frozenset(("id", "dot", "merge", "split", "lcup", "lcap"))


def is_primitive(g):
    """Primitive generators: the upward calculus, leftward cups/caps,
    and the thin upward and thin rightward crossings."""
    if g.kind in _PRIMITIVE_KINDS:
        return True
    if g.kind in ("xo", "xu"):
        (o1, k1), (o2, k2) = g.params
        return k1 == k2 == 1 and (o1, o2) in ((UP, UP), (UP, DOWN))
    return False


def _explode(item):
    o, k = item
    return up_explode(k) if o == UP else down_explode(k)


def _implode(item):
    o, k = item
    return up_implode(k) if o == UP else down_implode(k)


def _thin_block(kind, o1, k, o2, l):
    """Block of thin crossings moving k left strands past l right ones."""
    cur = [o1] * k + [o2] * l
    out = identity_diagram(WebObject(tuple((o, 1) for o in cur)))
    for step in range(k):
        for j in range(l):
            p = k - step + j - 1  # 0-based position of the moving strand
            gens = [iden(_obj((o, 1))) for o in cur[:p]]
            gens.append(_crossing(kind, (cur[p], 1), (cur[p + 1], 1)))
            gens.extend(iden(_obj((o, 1))) for o in cur[p + 2:])
            out = compose(WebDiagram(out.target, (tuple(gens),)), out)
            cur[p], cur[p + 1] = cur[p + 1], cur[p]
    return out


def _expand_crossing(g):
    (o1, k), (o2, l) = g.params
    if k == 1 and l == 1:
        if (o1, o2) == (DOWN, UP):
            # conjugate an upward crossing with a leftward cup and cap;
            # the up strand stays over exactly when the down strand is under
            inner = "xo" if g.kind == "xu" else "xu"
            d1, u1 = _obj((DOWN, 1)), _obj((UP, 1))
            return WebDiagram(g.source, (
                (iden(d1), iden(u1), lcup(1)),
                (iden(d1), _crossing(inner, (UP, 1), (UP, 1)), iden(d1)),
                (lcap(1), iden(u1), iden(d1)),
            ))
        if (o1, o2) == (DOWN, DOWN):
            # conjugate a leftward crossing; the left strand stays over
            inner = "xu" if g.kind == "xo" else "xo"
            d1 = _obj((DOWN, 1))
            return WebDiagram(g.source, (
                (iden(d1), iden(d1), lcup(1)),
                (iden(d1), _crossing(inner, (DOWN, 1), (UP, 1)), iden(d1)),
                (lcap(1), iden(d1), iden(d1)),
            ))
        raise ValueError("unexpected primitive crossing")
    # thick: explode both legs, cross thin strands, merge back
    legs = tensor(_explode((o1, k)), _explode((o2, l)))
    block = _thin_block(g.kind, o1, k, o2, l)
    back = tensor(_implode((o2, l)), _implode((o1, k)))
    d = compose_all([legs, block, back])
    return d.scale(ONE / (qfact(k) * qfact(l)))


def _expand_generator(g):
    """One expansion step for a non-primitive generator."""
    if g.kind == "clasp":
        k = g.params[0]
        return compose(up_explode(k), up_implode(k)).scale(ONE / qfact(k))
    if g.kind == "rcup":
        k = g.params[0]
        d = compose(from_generator(under_cross((UP, k), (DOWN, k))),
                    from_generator(lcup(k)))
        return d.scale(ScalarQ.q_power(-k * (k - 1)))
    if g.kind == "rcap":
        k = g.params[0]
        d = compose(from_generator(lcap(k)),
                    from_generator(over_cross((UP, k), (DOWN, k))))
        return d.scale(ScalarQ.q_power(k * (k - 1)))
    if g.kind in ("xo", "xu"):
        return _expand_crossing(g)
    raise ValueError("cannot expand generator {}".format(g.kind))


def expand_macros(d):
    """Rewrite a diagram over the primitive generator set."""
    while True:
        if all(is_primitive(g) for layer in d.slices for g in layer):
            return d
        out = identity_diagram(d.source).scale(d.prefactor)
        for layer in d.slices:
            parts = []
            for g in layer:
                if is_primitive(g):
                    parts.append(from_generator(g))
                else:
                    parts.append(_expand_generator(g))
            out = compose(tensor_all(parts), out)
        d = out


# --- braids ------------------------------------------------------------


class BraidWord:
    """A braid on labelled upward strands with signed letters."""

    __slots__ = ("strands", "labels", "letters")

    def __init__(self, strands, labels, letters):
        labels = tuple(int(x) for x in labels)
        letters = tuple(int(x) for x in letters)
        if strands < 1:
            raise ValueError("need at least one strand")
        if len(labels) != strands:
            raise ValueError("expected {} labels, got {}".format(
                strands, len(labels)))
        if any(x < 1 for x in labels):
            raise ValueError("negative label")
        for x in letters:
            if x == 0 or abs(x) >= strands:
                raise ValueError("crossing index {} out of range".format(x))
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and (self.strands, self.labels, self.letters)
                == (other.strands, other.labels, other.letters))

    def __hash__(self):
        return hash((self.strands, self.labels, self.letters))

    def pretty(self):
        return "braid {} [{}] : {}".format(
            self.strands, ",".join(str(x) for x in self.labels),
            " ".join("s{}".format(x) for x in self.letters))

    def __repr__(self):
        return "BraidWord({})".format(self.pretty())


def braid_diagram(word):
    """The braid as a diagram; positive letters are over-crossings."""
    labels = list(word.labels)
    out = identity_diagram(WebObject(tuple((UP, x) for x in labels)))
    for x in word.letters:
        i = abs(x) - 1
        kind = "xo" if x > 0 else "xu"
        gens = [iden(_obj((UP, labels[p]))) for p in range(i)]
        gens.append(_crossing(kind, (UP, labels[i]), (UP, labels[i + 1])))
        gens.extend(iden(_obj((UP, labels[p])))
                    for p in range(i + 2, len(labels)))
        out = compose(WebDiagram(out.target, (tuple(gens),)), out)
        labels[i], labels[i + 1] = labels[i + 1], labels[i]
    return out


# --- parsing -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z]+)|(?P<int>-?\d+)|(?P<sym>[();,*\[\]:]))")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise WebSyntaxError(
                    "unexpected character {!r}".format(text[at]), at)
            if m.lastgroup == "name":
                self.tokens.append(("name", m.group("name"), m.start("name")))
            elif m.lastgroup == "int":
                self.tokens.append(("int", int(m.group("int")), m.start("int")))
            else:
                self.tokens.append(("sym", m.group("sym"), m.start("sym")))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        if tok[0] != "end":
            self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise WebSyntaxError("expected {!r}".format(sym), pos)
        return pos

    def expect_int(self):
        kind, val, pos = self.next()
        if kind != "int":
            raise WebSyntaxError("expected an integer", pos)
        return val, pos

    def expect_label(self):
        val, pos = self.expect_int()
        if val < 0:
            raise WebSyntaxError("negative label", pos)
        if val == 0:
            raise WebSyntaxError("label must be positive", pos)
        return val


def _parse_item(sc):
    kind, val, pos = sc.next()
    if kind != "name" or val not in (UP, DOWN):
        raise WebSyntaxError("expected a strand item like u1 or d2", pos)
    k = sc.expect_label()
    return (val, k)


def _parse_object(sc):
    items = [_parse_item(sc)]
    while True:
        kind, val, _ = sc.peek()
        if kind == "name" and val in (UP, DOWN):
            items.append(_parse_item(sc))
        else:
            return WebObject(tuple(items))


_ATOM_ARITY = {
    "dot": 1, "merge": 2, "split": 2, "lcup": 1, "lcap": 1,
    "rcup": 1, "rcap": 1, "clasp": 1,
}

_ATOM_BUILDERS = {
    "dot": dot, "merge": merge, "split": split, "lcup": lcup,
    "lcap": lcap, "rcup": rcup, "rcap": rcap, "clasp": clasp,
}


def _parse_atom(sc):
    kind, val, pos = sc.next()
    if kind != "name":
        raise WebSyntaxError("expected a generator name", pos)
    if val == "id":
        sc.expect_sym("(")
        obj = _parse_object(sc)
        sc.expect_sym(")")
        return identity_diagram(obj)
    if val in ("xo", "xu"):
        sc.expect_sym("(")
        item1 = _parse_item(sc)
        sc.expect_sym(",")
        item2 = _parse_item(sc)
        sc.expect_sym(")")
        return from_generator(_crossing(val, item1, item2))
    if val in _ATOM_ARITY:
        sc.expect_sym("(")
        args = [sc.expect_label()]
        for _ in range(_ATOM_ARITY[val] - 1):
            sc.expect_sym(",")
            args.append(sc.expect_label())
        sc.expect_sym(")")
        return from_generator(_ATOM_BUILDERS[val](*args))
    raise WebSyntaxError("unknown generator {!r}".format(val), pos)


def _parse_term(sc):
    out = _parse_atom(sc)
    while True:
        kind, val, _ = sc.peek()
        if kind == "sym" and val == "*":
            sc.next()
            out = tensor(out, _parse_atom(sc))
        else:
            return out


def parse_web(text):
    """Parse the diagram DSL; ``d1 ; d2`` applies d1 first."""
    sc = _Scanner(text)
    pos = sc.peek()[2]
    out = _parse_term(sc)
    while True:
        kind, val, pos = sc.peek()
        if kind == "sym" and val == ";":
            sc.next()
            nxt_pos = sc.peek()[2]
            nxt = _parse_term(sc)
            if out.target != nxt.source:
                raise WebSyntaxError(
                    "object mismatch: have {}, next term expects {}".format(
                        out.target.pretty() or "1",
                        nxt.source.pretty() or "1"), nxt_pos)
            out = compose(nxt, out)
        elif kind == "end":
            return out
        else:
            raise WebSyntaxError("expected ';' or end of input", pos)


def parse_braid(text):
    """Parse the braid DSL, e.g. ``braid 2 [1,1] : s1 s1 s1``."""
    sc = _Scanner(text)
    kind, val, pos = sc.next()
    if kind != "name" or val != "braid":
        raise WebSyntaxError("expected 'braid'", pos)
    strands, pos = sc.expect_int()
    if strands < 1:
        raise WebSyntaxError("need at least one strand", pos)
    sc.expect_sym("[")
    labels = [sc.expect_label()]
    while True:
        kind, val, pos = sc.next()
        if kind == "sym" and val == ",":
            labels.append(sc.expect_label())
        elif kind == "sym" and val == "]":
            break
        else:
            raise WebSyntaxError("expected ',' or ']'", pos)
    sc.expect_sym(":")
    letters = []
    while True:
        kind, val, pos = sc.peek()
        if kind == "end":
            break
        if kind != "name" or val != "s":
            raise WebSyntaxError("expected a letter like s1 or s-2", pos)
        sc.next()
        x, pos = sc.expect_int()
        if x == 0 or abs(x) >= strands:
            raise WebSyntaxError("crossing index {} out of range".format(x),
                                 pos)
        letters.append(x)
    if len(labels) != strands:
        raise WebSyntaxError("expected {} labels, got {}".format(
            strands, len(labels)), 0)
    return BraidWord(strands, tuple(labels), tuple(letters))
