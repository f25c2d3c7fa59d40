"""Exact rational sparse linear algebra: spans, ranks, memberships.

All public answers are `SliceBasis` objects: canonical reduced row-echelon
bases over a fixed ambient coordinate space, so equal subspaces compare
equal structurally.  Columns are opaque ordinals supplied by the caller
(word indices, form-term indices, ...).
"""

from fractions import Fraction

from .kernel import Reducer


class AmbientMismatch(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class SparseVector:
    """Immutable sparse rational vector: sorted (index, coefficient) pairs."""

    __slots__ = ("ambient", "items")

    def __init__(self, ambient, items):
        self.ambient = ambient
        self.items = tuple(items)

    @classmethod
    def from_dict(cls, ambient, d):
        items = []
        for c in sorted(d):
            if c < 0 or c >= ambient:
                raise IndexOutOfRange(f"index {c} outside ambient {ambient}")
            v = d[c]
            if v:
                items.append((c, v if type(v) is Fraction else Fraction(v)))
        return cls(ambient, items)

    def to_dict(self):
        return dict(self.items)

    def is_zero(self):
        return not self.items

    def __eq__(self, other):
        return (
            isinstance(other, SparseVector)
            and self.ambient == other.ambient
            and self.items == other.items
        )

    def __hash__(self):
        return hash((self.ambient, self.items))

    def __repr__(self):
        body = " + ".join(f"{v}*e{c}" for c, v in self.items) or "0"
        return f"<SparseVector dim={self.ambient}: {body}>"


class SliceBasis:
    """Canonical RREF basis of a subspace of Q^ambient.

    Rows are nonzero, pivots strictly increasing, each pivot entry is 1 and
    its column is zero in every other row.
    """

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, rows):
        self.ambient = ambient
        self.rows = tuple(rows)
        self.pivots = tuple(r.items[0][0] for r in self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, SliceBasis)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"<SliceBasis dim={self.ambient} rank={self.rank}>"

    def _reducer(self):
        red = Reducer(self.ambient)
        # Rows already satisfy the invariants; load them directly.
        for row in self.rows:
            d = dict(row.items)
            p = row.items[0][0]
            red.rows[p] = d
            for c in d:
                if c != p:
                    red.tail_index.setdefault(c, set()).add(p)
        return red

    def contains(self, v):
        if v.ambient != self.ambient:
            raise AmbientMismatch(f"{v.ambient} != {self.ambient}")
        return self._reducer().contains(v.to_dict())

    def reduce_mod(self, v):
        """Residual of v modulo this subspace (zero iff contained)."""
        if v.ambient != self.ambient:
            raise AmbientMismatch(f"{v.ambient} != {self.ambient}")
        vd = self._reducer().reduce_vector(v.to_dict())
        return SparseVector.from_dict(self.ambient, vd)


def _emit(red):
    return SliceBasis(
        red.ambient, [SparseVector(red.ambient, items) for items in red.emit()]
    )


def reducer_from_basis(basis):
    return basis._reducer()


def reduce(vectors, ambient):
    """Canonical RREF basis of the span of ``vectors`` inside Q^ambient."""
    red = Reducer(ambient)
    for v in vectors:
        if isinstance(v, SparseVector):
            if v.ambient != ambient:
                raise AmbientMismatch(f"{v.ambient} != {ambient}")
            red.insert(v.to_dict())
        else:
            for c in v:
                if c < 0 or c >= ambient:
                    raise IndexOutOfRange(f"index {c} outside ambient {ambient}")
            red.insert(v)
    return _emit(red)


def contains(basis, v):
    return basis.contains(v)


def sum_basis(a, b):
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} != {b.ambient}")
    if a.rank < b.rank:
        a, b = b, a
    red = a._reducer()
    for row in b.rows:
        red.insert(dict(row.items))
    return _emit(red)


def relative_dim(vectors, w):
    """dim(span(vectors) + W) - dim W."""
    red = w._reducer()
    n = 0
    for v in vectors:
        if isinstance(v, SparseVector):
            if v.ambient != w.ambient:
                raise AmbientMismatch(f"{v.ambient} != {w.ambient}")
            v = v.to_dict()
        if red.insert(v):
            n += 1
    return n


def relations(vectors, ambient):
    """Basis of {c : sum_i c_i * vectors[i] = 0} (the linear relations).

    Implemented by augmenting each vector with a marker coordinate past the
    ambient range and reading off the reduced rows whose pivot lies in the
    marker block.
    """
    n = len(vectors)
    red = Reducer(ambient + n)
    for i, v in enumerate(vectors):
        d = v.to_dict() if isinstance(v, SparseVector) else dict(v)
        d[ambient + i] = 1
        red.insert(d)
    out = []
    for items in red.emit():
        if items[0][0] >= ambient:
            out.append(
                SparseVector(n, tuple((c - ambient, v) for c, v in items))
            )
    return out


def intersect_basis(a, b):
    """Canonical basis of span(a) ∩ span(b), via linear relations.

    Quadratic in the ranks; meant for oracles and small verifications, not
    for the production quotient-dimension path.
    """
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} != {b.ambient}")
    vectors = list(a.rows) + list(b.rows)
    rels = relations(vectors, a.ambient)
    members = []
    for rel in rels:
        acc = {}
        for idx, coef in rel.items:
            if idx >= a.rank:
                continue
            for c, v in a.rows[idx].items:
                newv = acc.get(c, 0) + coef * v
                if newv:
                    acc[c] = newv
                else:
                    del acc[c]
        members.append(acc)
    red = Reducer(a.ambient)
    for m in members:
        red.insert(m)
    return _emit(red)


def identity_basis(ambient):
    rows = [SparseVector(ambient, ((i, Fraction(1)),)) for i in range(ambient)]
    return SliceBasis(ambient, rows)


def empty_basis(ambient):
    return SliceBasis(ambient, ())
