"""Duality claims: series matching, homology, bond algebras, GSD, logicals."""
import pytest

from stabtherm.duality import (
    BondMap,
    bond_algebra_isomorphic,
    build_2dtc_bath_mapping,
    check_coefficient_bound,
    check_homology_identity,
    check_series_duality_4dtc,
    gsd,
    ising_low_t_coeffs,
    logical_operators_4dtc,
    logical_operators_haah,
)
from stabtherm.enumerators import constraint_kernel, weight_enumerator_full
from stabtherm.errors import InputError, ResourceLimit
from stabtherm.gf2 import BitMatrix
from stabtherm.homology import HypercubicComplex
from stabtherm.models import (
    CssModel,
    build_haah,
    build_ising,
    build_toric_2d,
    build_toric_3d,
    build_toric_4d,
)
from stabtherm.pauli import PauliOp


# -- Ising low-temperature expansion --------------------------------------


def test_chain_low_t_classes():
    coeffs = ising_low_t_coeffs(build_ising(1, 4), n_max=4)
    assert coeffs == {0: 1, 2: 6, 4: 1}


def test_uniform_class_is_unique():
    for model in (build_ising(2, 3), build_ising(3, 2)):
        assert ising_low_t_coeffs(model, n_max=0)[0] == 1


def test_4d_l2_single_flip_classes():
    coeffs = ising_low_t_coeffs(build_ising(4, 2), n_max=8)
    # each of the 16 single-site flips breaks all 8 incident (doubled) bonds
    assert coeffs[8] == 16
    assert all(coeffs.get(n, 0) == 0 for n in range(1, 8))


def test_low_t_spin_cap():
    with pytest.raises(ResourceLimit):
        ising_low_t_coeffs(build_ising(1, 25), n_max=2)


# -- series duality -------------------------------------------------------


def test_4dtc_series_duality_l2():
    cmp = check_series_duality_4dtc(2)
    assert cmp.cutoff == 8
    assert cmp.matched and cmp.first_mismatch is None


def test_4dtc_series_code_side_dominates_at_cutoff():
    cmp = check_series_duality_4dtc(2)
    n = cmp.cutoff
    assert cmp.lhs_coeffs.get(n, 0) >= cmp.rhs_coeffs.get(n, 0)


def test_series_comparison_reflexive():
    m = build_toric_4d(2)
    w = weight_enumerator_full(constraint_kernel(m, "A"))
    from stabtherm.duality import _compare_series

    cmp = _compare_series("self", w.coeffs, w.coeffs, cutoff=100)
    assert cmp.matched


def test_series_l3_refused():
    # the L=3 kernel dimension (84) is far beyond any full enumeration
    with pytest.raises(ResourceLimit):
        check_series_duality_4dtc(3)


# -- homology identity ----------------------------------------------------


def test_homology_identity_l2():
    cmp = check_homology_identity(2)
    assert cmp.matched
    assert cmp.lhs_coeffs[0] == 1 and cmp.rhs_coeffs[0] == 1
    assert sum(cmp.lhs_coeffs.values()) == 1 << 19
    assert sum(cmp.rhs_coeffs.values()) == 1 << 15


def test_coefficient_bound_l2():
    assert check_coefficient_bound(2)
    assert (1 << 19) == 16 * (1 << 15)


def test_b_kernel_equals_cycle_space():
    # the Z-side constraint kernel and the 3-cycle space are the same
    # subspace of the cube-index space
    m = build_toric_4d(2)
    kernel = constraint_kernel(m, "B")
    cx = HypercubicComplex(4, 2)
    cycles = cx.cycle_space(3)
    assert len(cycles) == kernel.dim
    cycle_mat = BitMatrix.from_bitvectors(cycles).transpose()
    for v in kernel.basis:
        assert cycle_mat.solve(v) is not None


# -- bond algebras --------------------------------------------------------


def test_identity_map_is_isomorphic():
    ops = tuple(PauliOp.single(3, i, k) for i in range(3) for k in "xz")
    assert bond_algebra_isomorphic(BondMap(ops, ops))


def test_length_mismatch_rejected():
    with pytest.raises(InputError):
        BondMap((PauliOp.identity(2),), ())


@pytest.mark.parametrize("L", [2, 3, 4])
@pytest.mark.parametrize("bath", ["Vx", "Vy"])
def test_bath_mappings_isomorphic(L, bath):
    assert bond_algebra_isomorphic(build_2dtc_bath_mapping(L, bath))


def test_bath_mapping_counts():
    bond_map = build_2dtc_bath_mapping(2, "Vx")
    L = 2
    assert len(bond_map.source_ops) == (L - 1) ** 2 + L**2 + L * (L + 1)


def test_vx_stars_commute_with_fields():
    bond_map = build_2dtc_bath_mapping(3, "Vx")
    stars = [op for lbl, op in zip(bond_map.labels, bond_map.source_ops) if lbl[0] == "A"]
    fields = [op for lbl, op in zip(bond_map.labels, bond_map.source_ops) if lbl[0] == "V"]
    assert all(a.commutes(v) for a in stars for v in fields)


def test_vx_plaquettes_hit_two_fields():
    bond_map = build_2dtc_bath_mapping(3, "Vx")
    plaquettes = [op for lbl, op in zip(bond_map.labels, bond_map.source_ops) if lbl[0] == "B"]
    fields = [op for lbl, op in zip(bond_map.labels, bond_map.source_ops) if lbl[0] == "V"]
    for p in plaquettes:
        assert sum(not p.commutes(v) for v in fields) == 2


@pytest.mark.parametrize("bath", ["Vx", "Vy"])
def test_mutated_mapping_fails(bath):
    bond_map = build_2dtc_bath_mapping(3, bath)
    target = list(bond_map.target_ops)
    # swap two target operators with different commutation environments
    target[0], target[-1] = target[-1], target[0]
    assert not bond_algebra_isomorphic(BondMap(bond_map.source_ops, tuple(target)))


# -- ground state degeneracy ----------------------------------------------


@pytest.mark.parametrize("L", [2, 3, 4])
def test_2dtc_gsd(L):
    assert gsd(build_toric_2d(L)) == 4


def test_3dtc_gsd():
    assert gsd(build_toric_3d(2)) == 8


def test_4dtc_gsd():
    assert gsd(build_toric_4d(2)) == 64


@pytest.mark.parametrize("L", [3, 5, 7])
def test_haah_gsd_is_4(L):
    assert gsd(build_haah(L)) == 4


def test_gsd_invariant_under_row_operations():
    m = build_toric_2d(2)
    rows = list(m.a_gens.rows)
    rows[0] ^= rows[1]
    altered = CssModel(m.n_qubits, BitMatrix(m.n_a, m.n_qubits, rows), m.b_gens)
    assert gsd(altered) == gsd(m)


# -- logical operators ----------------------------------------------------


def test_4dtc_logicals():
    report = logical_operators_4dtc(2)
    assert report.all_hold
    assert report.n_operators == 2 * 6 * 4  # six orientations, 2x2 positions, P and Q


def test_haah_logicals():
    report = logical_operators_haah(3)
    assert report.all_hold
    assert report.n_operators == 18


def test_4dtc_logical_count_matches_gsd():
    # six independent plane-logical classes <-> GSD 2^6
    assert gsd(build_toric_4d(2)) == 2**6
