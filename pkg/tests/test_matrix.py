"""Characteristic matrices: worked fixtures, roundtrips, the distinct-rows law."""

import itertools

import pytest

from sepfam import (
    Bipartition,
    BipartitionFamily,
    BipartitionTuple,
    CharMatrix,
    all_bipartitions,
    cut_vector,
    encode_family,
)


def test_cut_vector_fixtures(ex):
    assert cut_vector(ex.p1) == (0, 0, 1, 1)
    assert cut_vector(ex.p2) == (0, 1, 0, 1)
    assert cut_vector(ex.q1) == (0, 1, 1, 1)
    assert cut_vector(Bipartition(4)) == (0, 0, 0, 0)


def test_encode_worked_examples(ex):
    m = CharMatrix.encode(BipartitionTuple(4, (ex.p1, ex.p2)))
    assert (m.n, m.k) == (4, 2)
    assert m.to_lists() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    mq = CharMatrix.encode(BipartitionTuple(4, (ex.q1, ex.q2, ex.q3)))
    assert mq.to_lists() == [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 1]]
    assert m.has_distinct_rows() and mq.has_distinct_rows()


def test_columns_are_cut_vectors(ex):
    m = CharMatrix.encode(BipartitionTuple(4, (ex.q1, ex.q2, ex.q3)))
    cols = [tuple(col) for col in zip(*m.to_lists())]
    assert cols == [cut_vector(ex.q1), cut_vector(ex.q2), cut_vector(ex.q3)]


def test_first_row_zero_enforced():
    with pytest.raises(ValueError):
        CharMatrix.from_rows([[1], [0]])
    with pytest.raises(ValueError):
        CharMatrix(2, 1, (1, 0))


def test_from_rows_validation():
    with pytest.raises(ValueError):
        CharMatrix.from_rows([])
    with pytest.raises(ValueError):
        CharMatrix.from_rows([[0, 0], [1]])
    with pytest.raises(ValueError):
        CharMatrix.from_rows([[0], [2]])
    with pytest.raises(ValueError):
        CharMatrix(2, 1, (0,))  # row count != n


def test_encode_decode_inverse_exhaustive():
    for n in (2, 3):
        pool = all_bipartitions(n)
        for k in range(4):
            for entries in itertools.product(pool, repeat=k):
                t = BipartitionTuple(n, entries)
                assert CharMatrix.encode(t).decode() == t
    for entries in itertools.product(all_bipartitions(4), repeat=2):
        t = BipartitionTuple(4, entries)
        assert CharMatrix.encode(t).decode() == t


def test_decode_encode_inverse_exhaustive():
    # every valid 3 x k matrix for k <= 3 comes back unchanged
    for k in range(4):
        for masks in itertools.product(range(1 << k), repeat=2):
            m = CharMatrix(3, k, (0, *masks))
            assert CharMatrix.encode(m.decode()) == m


def test_empty_tuple_encodes_to_zero_width_matrix():
    m = CharMatrix.encode(BipartitionTuple(3))
    assert (m.n, m.k) == (3, 0)
    assert m.decode() == BipartitionTuple(3)
    assert not m.has_distinct_rows()  # three equal empty rows


def test_distinct_rows_iff_separating():
    for n in (2, 3, 4):
        pool = all_bipartitions(n)
        for r in range(4):
            for combo in itertools.combinations(pool, r):
                fam = BipartitionFamily(n, combo)
                assert encode_family(fam).has_distinct_rows() == fam.is_separating()


def test_transpose_dual_fixture(ex):
    t = BipartitionTuple(4, (Bipartition(4), ex.p1, ex.p2))
    mt = CharMatrix.encode(t).transpose_dual()
    assert (mt.n, mt.k) == (3, 4)
    assert mt.to_lists() == [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]
    # its columns are four bipartitions of a 3-set
    assert [b.coblock for b in mt.decode()] == [0b000, 0b100, 0b010, 0b110]


def test_transpose_requires_zero_first_column(ex):
    m = CharMatrix.encode(BipartitionTuple(4, (ex.p1, ex.p2)))
    with pytest.raises(ValueError):
        m.transpose_dual()
    with pytest.raises(ValueError):
        CharMatrix(3, 0, (0, 0, 0)).transpose_dual()  # no first column at all


def test_transpose_is_involution():
    # every valid 3 x 2 matrix whose first column is zero
    for a, b in itertools.product((0, 2), repeat=2):
        m = CharMatrix(3, 2, (0, a, b))
        assert m.transpose_dual().transpose_dual() == m
