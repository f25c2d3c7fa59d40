# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_rowred_py``.

Same algorithm, same arithmetic (Python int / Fraction objects), so the
emitted bases are bit-identical to the pure-Python kernel; Cython removes
the interpreter overhead of the dict-merge inner loops.
"""

from fractions import Fraction


cdef object _FRACTION = Fraction


cdef void _scaled_div(dict values_dict, object pivot_val):
    cdef object c, v
    if pivot_val == 1:
        return
    if pivot_val == -1:
        for c in values_dict:
            values_dict[c] = -values_dict[c]
        return
    for c in values_dict:
        v = values_dict[c]
        if type(v) is int and type(pivot_val) is int:
            values_dict[c] = _FRACTION(v, pivot_val)
        else:
            values_dict[c] = v / pivot_val


cdef class Reducer:
    """Maintains the canonical RREF of a growing span inside Q^ambient."""

    cdef public Py_ssize_t ambient
    cdef public dict rows
    cdef public dict tail_index

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = {}
        self.tail_index = {}

    def rank(self):
        return len(self.rows)

    def reduce_vector(self, vec):
        cdef dict rows = self.rows
        cdef dict v = dict(vec)
        cdef dict row
        cdef object c, s, rc, rv, newv
        if not v:
            return v
        for c in sorted(v.keys()):
            row = <dict> rows.get(c)
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
        cdef dict v = self.reduce_vector(vec)
        cdef dict rows, tails, row
        cdef set hitters
        cdef object p, q, s, vc, vv, newv
        if not v:
            return False
        p = min(v)
        _scaled_div(v, v[p])
        rows = self.rows
        tails = self.tail_index
        hitters = <set> tails.pop(p, None)
        if hitters is not None:
            for q in hitters:
                row = <dict> rows[q]
                s = row.pop(p)
                for vc, vv in v.items():
                    if vc == p:
                        continue
                    newv = row.get(vc, 0) - s * vv
                    if newv:
                        if vc not in row:
                            (<set> tails.setdefault(vc, set())).add(q)
                        row[vc] = newv
                    elif vc in row:
                        del row[vc]
                        (<set> tails[vc]).discard(q)
        rows[p] = v
        for vc in v:
            if vc != p:
                (<set> tails.setdefault(vc, set())).add(p)
        return True

    def insert_many(self, vecs):
        cdef Py_ssize_t n = 0
        for vec in vecs:
            if self.insert(vec):
                n += 1
        return n

    def contains(self, vec):
        return not self.reduce_vector(vec)

    def emit(self):
        cdef list out = []
        cdef dict row
        cdef list items
        cdef object p, c, v
        for p in sorted(self.rows):
            row = <dict> self.rows[p]
            items = []
            for c in sorted(row):
                v = row[c]
                items.append((c, v if type(v) is Fraction else _FRACTION(v)))
            out.append(tuple(items))
        return tuple(out)
