"""Brute-force oracles: dense traces, exhaustive Ising sums, closed forms."""
import math

import pytest

from stabtherm.errors import InputError, ResourceLimit
from stabtherm.gf2 import BitMatrix
from stabtherm.models import CssModel, build_ising, build_toric_2d
from stabtherm.oracle import (
    dense_log_trace,
    dense_spectrum,
    ising_brute_log_z,
    ising_chain_closed,
    ising_broken_bond_histogram,
)


def test_one_qubit_field():
    m = CssModel(1, BitMatrix(1, 1, [1]), BitMatrix(0, 1), coupling_a=1.3)
    for beta in (0.4, 1.0):
        assert dense_log_trace(m, beta) == pytest.approx(
            math.log(2 * math.cosh(1.3 * beta)), rel=1e-12
        )


def test_two_commuting_generators():
    m = CssModel(2, BitMatrix(1, 2, [0b01]), BitMatrix(1, 2, [0b10]))
    beta = 0.6
    assert dense_log_trace(m, beta) == pytest.approx(
        math.log(4 * math.cosh(beta) ** 2), rel=1e-12
    )


def test_spectrum_is_traceless():
    m = build_toric_2d(2)
    assert sum(dense_spectrum(m)) == pytest.approx(0.0, abs=1e-8)


def test_infinite_temperature_dimension():
    m = build_toric_2d(2)
    assert dense_log_trace(m, 1e-9) == pytest.approx(8 * math.log(2), rel=1e-9)


def test_dense_invariant_under_relabeling():
    # reverse the qubit order of the 2DTC
    m = build_toric_2d(2)
    n = m.n_qubits

    def reverse_bits(r):
        out = 0
        for q in range(n):
            if (r >> q) & 1:
                out |= 1 << (n - 1 - q)
        return out

    relabeled = CssModel(
        n,
        BitMatrix(m.n_a, n, [reverse_bits(r) for r in m.a_gens.rows]),
        BitMatrix(m.n_b, n, [reverse_bits(r) for r in m.b_gens.rows]),
    )
    beta = 0.8
    assert dense_log_trace(relabeled, beta) == pytest.approx(
        dense_log_trace(m, beta), rel=1e-12
    )


def test_dense_qubit_cap():
    big = CssModel(13, BitMatrix(1, 13, [1]), BitMatrix(0, 13))
    with pytest.raises(ResourceLimit):
        dense_log_trace(big, 1.0)


def test_beta_validation():
    m = CssModel(1, BitMatrix(1, 1, [1]), BitMatrix(0, 1))
    with pytest.raises(InputError):
        dense_log_trace(m, -1.0)


# -- Ising sums -----------------------------------------------------------


def test_free_single_spin():
    from stabtherm.models import IsingModel

    lone = IsingModel(1, ())
    assert ising_brute_log_z(lone, 0.7) == pytest.approx(math.log(2), rel=1e-14)


def test_chain_brute_vs_closed():
    chain = build_ising(1, 4)
    for beta in (0.3, 1.0):
        assert ising_brute_log_z(chain, beta) == pytest.approx(
            ising_chain_closed(4, 1.0, beta), rel=1e-12
        )


def test_brute_vs_low_t_expansion_4d():
    # the same sum, once over configurations and once over broken-bond classes
    from stabtherm.duality import ising_low_t_coeffs

    ising = build_ising(4, 2)
    beta = 0.2
    coeffs = ising_low_t_coeffs(ising, n_max=ising.n_bonds)
    expansion = math.log(2) + 64 * beta + math.log(
        sum(c * math.exp(-2 * beta * n) for n, c in coeffs.items())
    )
    assert ising_brute_log_z(ising, beta) == pytest.approx(expansion, rel=1e-12)


def test_brute_spin_cap():
    with pytest.raises(ResourceLimit):
        ising_brute_log_z(build_ising(1, 25), 0.5)


def test_histogram_total():
    hist = ising_broken_bond_histogram(build_ising(2, 3))
    assert hist.sum() == 1 << 9


# -- closed form ----------------------------------------------------------


def test_chain_closed_l1():
    beta, J = 0.9, 1.0
    assert ising_chain_closed(1, J, beta) == pytest.approx(beta * J + math.log(2), rel=1e-12)


def test_chain_closed_low_temperature_asymptote():
    L, J, beta = 10, 1.0, 30.0
    assert ising_chain_closed(L, J, beta) == pytest.approx(
        L * beta * J + math.log(2), abs=1e-9
    )


def test_chain_closed_validation():
    with pytest.raises(InputError):
        ising_chain_closed(0, 1.0, 0.5)
    with pytest.raises(InputError):
        ising_chain_closed(4, 1.0, 0.0)
