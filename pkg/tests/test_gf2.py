"""GF(2) linear algebra: examples, invariants, and a naive reference."""
import pytest
from hypothesis import given, settings, strategies as hst

from stabtherm.errors import InputError
from stabtherm.gf2 import BitMatrix, BitVector


# -- naive unpacked reference ---------------------------------------------


def naive_rank(dense):
    """Row reduction on plain lists of 0/1 ints."""
    rows = [list(r) for r in dense]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    for c in range(n_cols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def naive_mul_vec(dense, vec):
    return [sum(a * b for a, b in zip(row, vec)) % 2 for row in dense]


# -- BitVector ------------------------------------------------------------


def test_bitvector_basics():
    v = BitVector.from_ints([1, 0, 1, 1])
    assert v.length == 4
    assert v.weight() == 3
    assert v.support() == [0, 2, 3]
    assert v.to_ints() == [1, 0, 1, 1]


def test_bitvector_xor_requires_equal_length():
    with pytest.raises(InputError):
        BitVector(3, 0b101) ^ BitVector(4, 0b1)


def test_bitvector_rejects_overflow_bits():
    with pytest.raises(InputError):
        BitVector(2, 0b100)


def test_dot_product_mod_2():
    a = BitVector.from_ints([1, 1, 0])
    b = BitVector.from_ints([1, 1, 1])
    assert a.dot(b) == 0
    assert a.dot(BitVector.from_ints([1, 0, 1])) == 1


# -- rank -----------------------------------------------------------------


def test_rank_identity():
    assert BitMatrix.identity(3).rank() == 3


def test_rank_all_ones_2x2():
    assert BitMatrix.from_dense([[1, 1], [1, 1]]).rank() == 1


def test_rank_zero_matrix():
    assert BitMatrix(3, 5).rank() == 0


# -- kernel ---------------------------------------------------------------

def test_kernel_symmetric_case():
    m = BitMatrix.from_dense([[1, 1], [1, 1]])
    basis = m.kernel_basis()
    assert len(basis) == 1
    assert basis[0].to_ints() == [1, 1]


def test_kernel_full_rank_is_empty():
    assert BitMatrix.identity(2).kernel_basis() == []


def test_kernel_vectors_annihilate():
    m = BitMatrix.from_dense([[1, 0, 1, 1], [0, 1, 1, 0]])
    for v in m.kernel_basis():
        assert m.mul_vec(v).is_zero()


# -- solve ----------------------------------------------------------------


def test_solve_identity():
    b = BitVector.from_ints([1, 0, 1])
    x = BitMatrix.identity(3).solve(b)
    assert x.bits == b.bits


def test_solve_underdetermined():
    m = BitMatrix.from_dense([[1, 1]])
    x = m.solve(BitVector.from_ints([1]))
    assert x is not None and m.mul_vec(x).to_ints() == [1]


def test_solve_inconsistent():
    m = BitMatrix.from_dense([[1, 1], [1, 1]])
    assert m.solve(BitVector.from_ints([1, 0])) is None


def test_solve_length_mismatch():
    with pytest.raises(InputError):
        BitMatrix.identity(2).solve(BitVector.from_ints([1]))


# -- structural operations ------------------------------------------------


def test_transpose_roundtrip():
    m = BitMatrix.from_dense([[1, 0, 1], [0, 1, 1]])
    t = m.transpose()
    assert (t.n_rows, t.n_cols) == (3, 2)
    assert t.transpose().rows == m.rows


def test_matrix_product():
    m = BitMatrix.from_dense([[1, 1], [0, 1]])
    assert m.mul(m).rows == BitMatrix.from_dense([[1, 0], [0, 1]]).rows


# -- randomized agreement with the naive reference ------------------------

dense_matrices = hst.integers(1, 12).flatmap(
    lambda n_cols: hst.lists(
        hst.lists(hst.integers(0, 1), min_size=n_cols, max_size=n_cols),
        min_size=1,
        max_size=12,
    )
)


@settings(max_examples=200, deadline=None)
@given(dense_matrices)
def test_rank_matches_naive(dense):
    assert BitMatrix.from_dense(dense).rank() == naive_rank(dense)


@settings(max_examples=200, deadline=None)
@given(dense_matrices)
def test_rank_nullity(dense):
    m = BitMatrix.from_dense(dense)
    basis = m.kernel_basis()
    assert m.rank() + len(basis) == m.n_cols
    for v in basis:
        assert naive_mul_vec(dense, v.to_ints()) == [0] * m.n_rows
    # basis vectors are linearly independent
    assert BitMatrix.from_bitvectors(basis, m.n_cols).rank() == len(basis) if basis else True


@settings(max_examples=200, deadline=None)
@given(dense_matrices, hst.data())
def test_solve_agrees_with_consistency(dense, data):
    m = BitMatrix.from_dense(dense)
    b_ints = data.draw(
        hst.lists(hst.integers(0, 1), min_size=m.n_rows, max_size=m.n_rows)
    )
    b = BitVector.from_ints(b_ints)
    x = m.solve(b)
    if x is not None:
        assert m.mul_vec(x).bits == b.bits
    else:
        # b lies outside the column space
        augmented = [row + [bi] for row, bi in zip(dense, b_ints)]
        assert naive_rank(augmented) == naive_rank(dense) + 1
