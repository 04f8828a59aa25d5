"""Z2-graded vector spaces and parity-homogeneous sparse linear maps.

Basis labels are flat tuples of atoms and every space carries a uniform
atom count (its rank), so the tensor product of spaces is label
concatenation and is strictly associative.  The unit object is the rank-0
space whose single label is the empty tuple.

All sign bookkeeping follows the super sign rule:

    (f (x) g)(v (x) w) = (-1)^{p(g) p(v)} f(v) (x) g(w)

and the graded flip carries (-1)^{p(v) p(w)}.
"""

from .scalars import ScalarQ, ZERO, ONE, GaussianRational, specialize

__all__ = [
    "SuperSpace",
    "SuperMap",
    "tensor_space",
    "tensor_map",
    "flip",
    "identity",
    "rank_at",
    "invert",
]


class SuperSpace:
    """An ordered basis of labels with a parity function."""

    __slots__ = ("labels", "parity", "rank")

    def __init__(self, labels, parity, rank):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        for lbl in labels:
            if len(lbl) != rank:
                raise ValueError("label rank mismatch")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "parity", dict(parity))
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("SuperSpace is immutable")

    @classmethod
    def unit(cls):
        return cls(((),), {(): 0}, 0)

    @classmethod
    def from_atoms(cls, atoms):
        """Rank-1 space from (atom, parity) pairs."""
        labels = tuple((a,) for a, _ in atoms)
        parity = {(a,): p & 1 for a, p in atoms}
        return cls(labels, parity, 1)

    @property
    def dim(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, SuperSpace):
            return NotImplemented
        return self.labels == other.labels and self.parity == other.parity

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "SuperSpace(dim={}, rank={})".format(self.dim, self.rank)


def tensor_space(a, b):
    if b.rank == 0 and b.dim == 1:
        return a
    if a.rank == 0 and a.dim == 1:
        return b
    labels = tuple(la + lb for la in a.labels for lb in b.labels)
    parity = {}
    for la in a.labels:
        pa = a.parity[la]
        for lb in b.labels:
            parity[la + lb] = (pa + b.parity[lb]) & 1
    return SuperSpace(labels, parity, a.rank + b.rank)


class SuperMap:
    """Sparse parity-homogeneous linear map between SuperSpaces."""

    __slots__ = ("source", "target", "par", "entries")

    def __init__(self, source, target, par, entries, check=True):
        par &= 1
        cleaned = {}
        for (row, col), val in entries.items():
            if not isinstance(val, ScalarQ):
                val = ScalarQ(val)
            if not val:
                continue
            cleaned[(row, col)] = val
            if check:
                if row not in target.parity or col not in source.parity:
                    raise ValueError("entry outside the declared bases")
                if (target.parity[row] + source.parity[col]) & 1 != par:
                    raise ValueError(
                        "entry parity violates map parity at {} <- {}".format(
                            row, col))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "par", par)
        object.__setattr__(self, "entries", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMap is immutable")

    @classmethod
    def zero(cls, source, target, par=0):
        return cls(source, target, par, {})

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SuperMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.entries == other.entries)

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("object mismatch in sum")
        entries = dict(self.entries)
        for key, val in other.entries.items():
            s = entries.get(key, ZERO) + val
            if s:
                entries[key] = s
            elif key in entries:
                del entries[key]
        par = self.par if self.entries else other.par
        return SuperMap(self.source, self.target, par, entries, check=False)

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, ScalarQ):
            c = ScalarQ(c)
        return SuperMap(self.source, self.target, self.par,
                        {k: c * v for k, v in self.entries.items()},
                        check=False)

    def __rmul__(self, c):
        return self.scale(c)

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ValueError("object mismatch in composition")
        by_row = {}
        for (row, col), val in other.entries.items():
            by_row.setdefault(row, []).append((col, val))
        entries = {}
        for (row, mid), fval in self.entries.items():
            for col, gval in by_row.get(mid, ()):
                key = (row, col)
                s = entries.get(key, ZERO) + fval * gval
                if s:
                    entries[key] = s
                elif key in entries:
                    del entries[key]
        return SuperMap(other.source, self.target,
                        self.par + other.par, entries, check=False)

    def __matmul__(self, other):
        return self.compose(other)

    def apply(self, vec):
        """Apply to a vector given as dict source-label -> ScalarQ."""
        out = {}
        for (row, col), val in self.entries.items():
            c = vec.get(col)
            if c is None:
                continue
            s = out.get(row, ZERO) + val * c
            if s:
                out[row] = s
            elif row in out:
                del out[row]
        return out

    def scalar_of(self):
        """The c with self = c * Id, or raise ValueError("not scalar")."""
        if self.source != self.target:
            raise ValueError("not an endomorphism")
        c = None
        for (row, col), val in self.entries.items():
            if row != col:
                raise ValueError("not scalar")
            if c is None:
                c = val
            elif c != val:
                raise ValueError("not scalar")
        if c is None:
            return ZERO
        if len(self.entries) != self.source.dim:
            raise ValueError("not scalar")
        return c

    def specialized_entries(self, q0):
        return {k: specialize(v, q0) for k, v in self.entries.items()}

    def __repr__(self):
        return "SuperMap({} -> {}, parity={}, nnz={})".format(
            self.source, self.target, self.par, len(self.entries))


def identity(space):
    return SuperMap(space, space, 0,
                    {(lbl, lbl): ONE for lbl in space.labels}, check=False)


def tensor_map(f, g):
    src = tensor_space(f.source, g.source)
    tgt = tensor_space(f.target, g.target)
    entries = {}
    gp = g.par
    for (rf, cf), vf in f.entries.items():
        sign = -ONE if gp and f.source.parity[cf] else ONE
        vfs = vf * sign
        for (rg, cg), vg in g.entries.items():
            entries[(rf + rg, cf + cg)] = vfs * vg
    return SuperMap(src, tgt, f.par + g.par, entries, check=False)


def flip(a, b):
    """The graded flip A (x) B -> B (x) A."""
    src = tensor_space(a, b)
    tgt = tensor_space(b, a)
    entries = {}
    for la in a.labels:
        pa = a.parity[la]
        for lb in b.labels:
            sign = -ONE if pa and b.parity[lb] else ONE
            entries[(lb + la, la + lb)] = sign
    return SuperMap(src, tgt, 0, entries, check=False)


def _rank_of_rows(rows):
    """Rank of a sparse row list (dicts col -> GaussianRational)."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            # reduce deterministically: smallest column first
            piv = min(row)
            if piv in pivots:
                factor = row[piv]
                for c, v in pivots[piv].items():
                    s = row.get(c, GaussianRational(0)) - factor * v
                    if s:
                        row[c] = s
                    elif c in row:
                        del row[c]
            else:
                inv = row[piv].inverse()
                pivots[piv] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
        # a row fully reduced to zero adds nothing
    return rank


def rank_at(f, q0):
    """Rank of the map after specializing every entry at q = q0."""
    cols = {}
    for (row, col), val in f.entries.items():
        v = specialize(val, q0)
        if v:
            cols.setdefault(col, {})[row] = v
    return _rank_of_rows(cols.values())


def rank_of_vectors(vectors, q0):
    """Rank at q = q0 of a family of vectors given as label -> ScalarQ dicts."""
    rows = []
    for vec in vectors:
        row = {}
        for lbl, val in vec.items():
            v = specialize(val, q0)
            if v:
                row[lbl] = v
        rows.append(row)
    return _rank_of_rows(rows)


def invert(f):
    """Exact inverse over Q(i)(q); raises ValueError("singular")."""
    if f.source.dim != f.target.dim:
        raise ValueError("singular")
    n = f.source.dim
    src_labels = list(f.source.labels)
    tgt_labels = list(f.target.labels)
    col_index = {lbl: j for j, lbl in enumerate(src_labels)}
    row_index = {lbl: i for i, lbl in enumerate(tgt_labels)}
    mat = [[ZERO] * n for _ in range(n)]
    for (row, col), val in f.entries.items():
        mat[row_index[row]][col_index[col]] = val
    aug = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        # pivot choice: the shortest nonzero scalar controls swell
        pivot = None
        best = None
        for i in range(col, n):
            v = mat[i][col]
            if v:
                size = len(v.num.coeffs) + len(v.den.coeffs)
                if best is None or size < best:
                    best = size
                    pivot = i
        if pivot is None:
            raise ValueError("singular")
        mat[col], mat[pivot] = mat[pivot], mat[col]
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ONE / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i == col:
                continue
            factor = mat[i][col]
            if not factor:
                continue
            mat[i] = [a - factor * b for a, b in zip(mat[i], mat[col])]
            aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    entries = {}
    for i in range(n):
        for j in range(n):
            if aug[i][j]:
                entries[(src_labels[i], tgt_labels[j])] = aug[i][j]
    return SuperMap(f.target, f.source, f.par, entries, check=False)
