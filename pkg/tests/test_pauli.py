"""Pauli operator algebra: commutation, products, weights."""
import pytest
from hypothesis import given, settings, strategies as hst

from stabtherm.errors import InputError
from stabtherm.homology import HypercubicComplex
from stabtherm.models import build_haah, build_toric_4d
from stabtherm.pauli import PauliOp


def test_single_qubit_anticommutation():
    x1 = PauliOp.single(2, 0, "x")
    z1 = PauliOp.single(2, 0, "z")
    z2 = PauliOp.single(2, 1, "z")
    assert not x1.commutes(z1)
    assert x1.commutes(z2)


def test_y_anticommutes_with_x_and_z():
    y = PauliOp.single(1, 0, "y")
    assert not y.commutes(PauliOp.single(1, 0, "x"))
    assert not y.commutes(PauliOp.single(1, 0, "z"))


def test_size_mismatch_rejected():
    with pytest.raises(InputError):
        PauliOp.single(2, 0, "x").commutes(PauliOp.single(3, 0, "z"))
    with pytest.raises(InputError):
        PauliOp.single(2, 0, "x").multiply(PauliOp.single(3, 0, "z"))


def test_multiply_involution_and_identity():
    p = PauliOp.from_supports(4, x_support=[0, 2], z_support=[1, 2])
    assert (p * p).is_identity()
    assert (p * PauliOp.identity(4)) == p


def test_weight():
    assert PauliOp.identity(5).weight() == 0
    assert PauliOp.from_supports(5, x_support=[0, 1], z_support=[1, 3]).weight() == 3


def test_str_rendering():
    p = PauliOp.from_supports(13, x_support=[3, 12], z_support=[7, 12])
    assert str(p) == "X3 Z7 Y12"
    assert str(PauliOp.identity(2)) == "I"


def test_haah_generators_all_commute():
    m = build_haah(3)
    a_ops = m.a_ops()
    b_ops = m.b_ops()
    assert all(a.commutes(b) for a in a_ops for b in b_ops)


def test_haah_generator_weights():
    m = build_haah(3)
    assert all(op.weight() == 8 for op in m.a_ops())
    assert all(op.weight() == 8 for op in m.b_ops())


def test_4dtc_link_operator_weight():
    m = build_toric_4d(2)
    assert all(op.weight() == 6 for op in m.a_ops())


def test_4dtc_vertex_product_is_identity():
    # the eight link operators meeting at a vertex multiply to the identity
    L = 3
    m = build_toric_4d(L)
    cx = HypercubicComplex(4, L)
    a_ops = m.a_ops()
    v = (0, 0, 0, 0)
    prod = PauliOp.identity(m.n_qubits)
    for d in range(4):
        prod = prod * a_ops[cx.cell_index(v, (d,))]
        behind = list(v)
        behind[d] = (behind[d] - 1) % L
        prod = prod * a_ops[cx.cell_index(behind, (d,))]
    assert prod.is_identity()


# -- properties -----------------------------------------------------------

pauli_ops = hst.builds(
    PauliOp,
    n_qubits=hst.just(8),
    x_mask=hst.integers(0, 255),
    z_mask=hst.integers(0, 255),
)


@settings(max_examples=100, deadline=None)
@given(pauli_ops, pauli_ops)
def test_commutation_is_symmetric(p, q):
    assert p.commutes(q) == q.commutes(p)


@settings(max_examples=100, deadline=None)
@given(pauli_ops, pauli_ops)
def test_multiply_cancels(p, q):
    assert (p * q) * q == p


@settings(max_examples=100, deadline=None)
@given(hst.integers(0, 255), hst.integers(0, 255))
def test_css_commutation_is_even_overlap(x_mask, z_mask):
    p = PauliOp(8, x_mask=x_mask)
    q = PauliOp(8, z_mask=z_mask)
    assert p.commutes(q) == ((x_mask & z_mask).bit_count() % 2 == 0)
