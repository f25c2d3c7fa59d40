"""Incremental exact Gauss-Jordan over the rationals (pure-Python kernel).

This is the hot loop of the whole workbench: every span, rank, membership
and quotient dimension reduces to feeding sparse rational vectors into a
`Reducer`.  The compiled twin in ``_rowred_c.pyx`` implements the identical
algorithm; both must produce bit-identical states for the same insertion
sequence.

Rows are dicts ``{column: coefficient}`` with int or Fraction values (ints
are kept as ints for speed; they compare and combine exactly with
Fraction).  Invariants maintained after every insertion:

  * each stored row has its pivot (smallest column) scaled to 1,
  * no stored row contains any other row's pivot column,
  * the stored rows are exactly the canonical reduced-row-echelon basis of
    the span of everything inserted so far (hence insertion order cannot
    change the final state).
"""

from fractions import Fraction


def _scaled_div(values_dict, pivot_val):
    """Divide a row in place by its pivot value, exactly."""
    if pivot_val == 1:
        return
    if pivot_val == -1:
        for c in values_dict:
            values_dict[c] = -values_dict[c]
        return
    for c in values_dict:
        v = values_dict[c]
        if type(v) is int and type(pivot_val) is int:
            values_dict[c] = Fraction(v, pivot_val)
        else:
            values_dict[c] = v / pivot_val


class Reducer:
    """Maintains the canonical RREF of a growing span inside Q^ambient."""

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = {}       # pivot column -> row dict (pivot entry == 1)
        self.tail_index = {} # column -> set of pivot columns whose row hits it

    def rank(self):
        return len(self.rows)

    def reduce_vector(self, vec):
        """Return a residual copy of ``vec`` reduced against the basis.

        The residual is ``vec`` minus its projection onto the span; it is
        empty iff ``vec`` lies in the span.
        """
        rows = self.rows
        v = dict(vec)
        if not v:
            return v
        # Stored tails contain no pivot columns, so eliminating pivots can
        # never introduce new pivot columns into v: one pass suffices.
        for c in sorted(v.keys()):
            row = rows.get(c)
            if row is None:
                continue
            s = v.get(c)
            if not s:
                continue
            for rc, rv in row.items():
                newv = v.get(rc, 0) - s * rv
                if newv:
                    v[rc] = newv
                else:
                    v.pop(rc, None)
        return v

    def insert(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        v = self.reduce_vector(vec)
        if not v:
            return False
        p = min(v)
        _scaled_div(v, v[p])
        rows = self.rows
        tails = self.tail_index
        # Back-eliminate the new pivot column from every stored row.
        hitters = tails.pop(p, None)
        if hitters:
            for q in hitters:
                row = rows[q]
                s = row.pop(p)
                for vc, vv in v.items():
                    if vc == p:
                        continue
                    newv = row.get(vc, 0) - s * vv
                    if newv:
                        if vc not in row:
                            tails.setdefault(vc, set()).add(q)
                        row[vc] = newv
                    elif vc in row:
                        del row[vc]
                        tails[vc].discard(q)
        rows[p] = v
        for vc in v:
            if vc != p:
                tails.setdefault(vc, set()).add(p)
        return True

    def insert_many(self, vecs):
        n = 0
        for vec in vecs:
            if self.insert(vec):
                n += 1
        return n

    def contains(self, vec):
        return not self.reduce_vector(vec)

    def emit(self):
        """Canonical RREF rows: sorted by pivot, entries as Fractions."""
        out = []
        for p in sorted(self.rows):
            row = self.rows[p]
            items = []
            for c in sorted(row):
                v = row[c]
                items.append((c, v if type(v) is Fraction else Fraction(v)))
            out.append(tuple(items))
        return tuple(out)
