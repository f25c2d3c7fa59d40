import random
from fractions import Fraction

import pytest

from lcsq import linalg
from lcsq.kernel import PY_REDUCER, Reducer
from lcsq.linalg import SliceBasis, SparseVector


def dense_rref(rows, ambient):
    """Naive dense Gauss-Jordan oracle over Fraction."""
    m = [[Fraction(r.get(c, 0)) for c in range(ambient)] for r in rows]
    pivots = []
    r = 0
    for c in range(ambient):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                s = m[i][c]
                m[i] = [a - s * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = []
    for i in range(r):
        out.append(tuple((c, v) for c, v in enumerate(m[i]) if v != 0))
    return tuple(out), tuple(pivots)


def rand_rows(rng, nrows, ambient, density=0.4):
    rows = []
    for _ in range(nrows):
        d = {}
        for c in range(ambient):
            if rng.random() < density:
                d[c] = rng.randint(-4, 4)
        d = {c: v for c, v in d.items() if v}
        rows.append(d)
    return rows


def test_reduce_rank_one():
    b = linalg.reduce([{0: 1, 1: 2}, {0: 2, 1: 4}], 2)
    assert b.rank == 1
    assert b.pivots == (0,)
    assert b.rows[0].items == ((0, Fraction(1)), (1, Fraction(2)))


def test_reduce_empty():
    b = linalg.reduce([], 5)
    assert b.rank == 0
    assert b.rows == ()


def test_reduce_full_rank_identity():
    b = linalg.reduce([{0: 1, 1: 1}, {1: 1}], 2)
    assert b.rank == 2
    assert b == linalg.identity_basis(2)


def test_contains():
    b = linalg.reduce([{0: 1, 1: 1}, {1: 1}], 2)
    assert b.contains(SparseVector.from_dict(2, {0: 1}))
    b2 = linalg.reduce([{0: 1}], 2)
    assert not b2.contains(SparseVector.from_dict(2, {1: 1}))
    assert linalg.reduce([], 2).contains(SparseVector.from_dict(2, {}))


def test_relative_dim():
    w1 = linalg.reduce([{0: 1}], 2)
    assert linalg.relative_dim([{0: 1}], w1) == 0
    w2 = linalg.reduce([{1: 1}], 2)
    assert linalg.relative_dim([{0: 1}], w2) == 1
    # U = {e1+e2, e1-e2}, W = span{e1} -> dim(U+W)-dim(W) = 1
    assert linalg.relative_dim([{0: 1, 1: 1}, {0: 1, 1: -1}], w1) == 1


def test_sum_basis():
    assert linalg.sum_basis(linalg.reduce([{0: 1}], 2), linalg.reduce([{1: 1}], 2)).rank == 2
    assert linalg.sum_basis(linalg.reduce([{0: 1}], 2), linalg.reduce([{0: 1}], 2)).rank == 1
    s = linalg.sum_basis(
        linalg.reduce([{0: 1, 1: 1}], 2), linalg.reduce([{0: 1, 1: -1}], 2)
    )
    assert s.rank == 2


def test_index_out_of_range():
    with pytest.raises(linalg.IndexOutOfRange):
        linalg.reduce([{7: 1}], 3)


def test_ambient_mismatch():
    b = linalg.reduce([{0: 1}], 2)
    with pytest.raises(linalg.AmbientMismatch):
        b.contains(SparseVector.from_dict(3, {0: 1}))


def test_reduce_idempotent():
    rng = random.Random(7)
    for _ in range(20):
        rows = rand_rows(rng, rng.randint(0, 8), 10)
        b = linalg.reduce(rows, 10)
        b2 = linalg.reduce([r.to_dict() for r in b.rows], 10)
        assert b == b2


def test_oracle_equivalence_dense():
    rng = random.Random(13)
    for trial in range(30):
        ambient = rng.randint(1, 16)
        rows = rand_rows(rng, rng.randint(0, 12), ambient)
        b = linalg.reduce(rows, ambient)
        expected_rows, expected_pivots = dense_rref(rows, ambient)
        got = tuple(r.items for r in b.rows)
        assert got == expected_rows
        assert b.pivots == expected_pivots
        # membership agrees with the dense oracle on fresh vectors
        for _ in range(5):
            v = rand_rows(rng, 1, ambient)[0]
            rows2, _ = dense_rref(rows + [v], ambient)
            in_span = len(rows2) == b.rank
            assert b.contains(SparseVector.from_dict(ambient, v)) == in_span


def test_dimension_formula_vs_intersection():
    # dim(A+B) + dim(A∩B) == dim A + dim B, intersection by brute force
    rng = random.Random(23)
    for _ in range(25):
        ambient = rng.randint(2, 12)
        A = linalg.reduce(rand_rows(rng, rng.randint(1, 6), ambient), ambient)
        B = linalg.reduce(rand_rows(rng, rng.randint(1, 6), ambient), ambient)
        s = linalg.sum_basis(A, B)
        inter = linalg.intersect_basis(A, B)
        assert s.rank + inter.rank == A.rank + B.rank
        # every intersection row really lies in both spans
        for row in inter.rows:
            assert A.contains(row) and B.contains(row)
        # relative_dim route gives the same intersection dimension
        rel = linalg.relative_dim([r.to_dict() for r in A.rows], B)
        assert A.rank - rel == inter.rank


def test_insertion_order_invariance():
    rng = random.Random(41)
    for _ in range(10):
        ambient = rng.randint(2, 10)
        rows = rand_rows(rng, 8, ambient)
        b1 = linalg.reduce(rows, ambient)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert linalg.reduce(shuffled, ambient) == b1


def test_kernels_bit_identical():
    rng = random.Random(97)
    for _ in range(10):
        ambient = rng.randint(2, 14)
        rows = rand_rows(rng, 10, ambient)
        r1 = Reducer(ambient)
        r2 = PY_REDUCER(ambient)
        for row in rows:
            assert r1.insert(dict(row)) == r2.insert(dict(row))
        assert r1.emit() == r2.emit()


def test_relations_and_empty_relations():
    v1 = SparseVector.from_dict(2, {0: 1})
    v2 = SparseVector.from_dict(2, {1: 1})
    v3 = SparseVector.from_dict(2, {0: 1, 1: 1})
    rels = linalg.relations([v1, v2, v3], 2)
    assert len(rels) == 1
    assert rels[0].items == ((0, Fraction(1)), (1, Fraction(1)), (2, Fraction(-1)))
    assert linalg.relations([v1, v2], 2) == []
