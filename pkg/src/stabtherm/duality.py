"""Verification engines for the duality and symmetry claims.

Series-coefficient matching between code-side constraint enumerators and
classical Ising expansions, homology identities on the 4-torus, bond
algebra isomorphisms for the 2D toric code with local heat baths, ground
state degeneracy, and logical-operator commutation patterns.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from itertools import combinations

from .enumerators import (
    ConstraintKernel,
    WeightEnumerator,
    constraint_kernel,
    weight_enumerator_full,
)
from .errors import InputError, ResourceLimit
from .gf2 import BitMatrix, BitVector
from .homology import HypercubicComplex
from .models import CssModel, IsingModel, build_ising, build_toric_4d, build_haah
from .pauli import PauliOp

__all__ = [
    "SeriesComparison",
    "BondMap",
    "LogicalReport",
    "ising_low_t_coeffs",
    "check_series_duality_4dtc",
    "check_homology_identity",
    "check_coefficient_bound",
    "bond_algebra_isomorphic",
    "build_2dtc_bath_mapping",
    "gsd",
    "logical_operators_4dtc",
    "logical_operators_haah",
]


@dataclass(frozen=True)
class SeriesComparison:
    """Result of a coefficient-by-coefficient series comparison below a cutoff."""

    label: str
    cutoff: int
    matched: bool
    first_mismatch: tuple | None  # (weight, lhs count, rhs count)
    lhs_coeffs: dict = field(default_factory=dict)
    rhs_coeffs: dict = field(default_factory=dict)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["weight", "lhs", "rhs"])
            weights = sorted(set(self.lhs_coeffs) | set(self.rhs_coeffs))
            for n in weights:
                writer.writerow([n, self.lhs_coeffs.get(n, 0), self.rhs_coeffs.get(n, 0)])


@dataclass(frozen=True)
class BondMap:
    """Positionally paired interaction terms of two Pauli systems."""

    source_ops: tuple
    target_ops: tuple
    labels: tuple = ()

    def __post_init__(self):
        if len(self.source_ops) != len(self.target_ops):
            raise InputError("source and target operator lists must pair up")


def _compare_series(label, lhs, rhs, cutoff) -> SeriesComparison:
    first_mismatch = None
    for n in range(cutoff):
        lc = lhs.get(n, 0)
        rc = rhs.get(n, 0)
        if lc != rc:
            first_mismatch = (n, lc, rc)
            break
    return SeriesComparison(
        label=label,
        cutoff=cutoff,
        matched=first_mismatch is None,
        first_mismatch=first_mismatch,
        lhs_coeffs=dict(lhs),
        rhs_coeffs=dict(rhs),
    )


# -- classical Ising low-temperature expansion ---------------------------


def ising_low_t_coeffs(ising: IsingModel, n_max: int) -> dict:
    """Spin-flip classes {C, complement} counted by broken-bond number.

    Brute force over all 2^n subsets of flipped spins, pairing each subset
    with its complement (which has the same bond structure), so the class
    at zero broken bonds counts exactly once.
    """
    if ising.n_spins > 24:
        raise ResourceLimit(
            f"low-temperature brute force capped at 24 spins, got {ising.n_spins}"
        )
    n = ising.n_spins
    counts: dict[int, int] = {}
    for config in range(1 << n):
        broken = 0
        for i, j in ising.bonds:
            broken += ((config >> i) ^ (config >> j)) & 1
        if broken <= n_max:
            counts[broken] = counts.get(broken, 0) + 1
    # each class {C, complement} was visited twice; C == complement is impossible
    return {k: v // 2 for k, v in sorted(counts.items())}


# -- 4DTC series and homology checks -------------------------------------


def check_series_duality_4dtc(L: int, side: str = "A") -> SeriesComparison:
    """Compare the 4DTC constraint enumerator against Ising spin-flip classes.

    Coefficients must agree for all n < L^3; at n = L^3 and beyond,
    topologically nontrivial cycles may make the code side larger.
    """
    model = build_toric_4d(L)
    kernel = constraint_kernel(model, side)
    code_side = weight_enumerator_full(kernel)
    ising = build_ising(4, L)
    cutoff = L**3
    ising_side = ising_low_t_coeffs(ising, n_max=max(code_side.max_weight(), cutoff))
    return _compare_series(
        f"4DTC {side}-side enumerator vs 4D Ising broken-bond classes (L={L})",
        code_side.coeffs,
        ising_side,
        cutoff,
    )


def _distribution_of_span(basis: list[BitVector], side: str, n: int) -> WeightEnumerator:
    kernel = ConstraintKernel(side, n, tuple(basis))
    return weight_enumerator_full(kernel)


def check_homology_identity(L: int) -> SeriesComparison:
    """Weight distributions of 3-cycles vs contractible 3-cycles on the 4-torus.

    The two must agree for all n < L^3; the cycle side is larger by the
    four nontrivial homology classes overall.
    """
    cx = HypercubicComplex(4, L)
    n3 = cx.n_cells(3)
    cycles = _distribution_of_span(cx.cycle_space(3), "B", n3)
    boundaries = _distribution_of_span(cx.boundary_space(3), "B", n3)
    return _compare_series(
        f"4-torus 3-cycle vs contractible 3-cycle distributions (L={L})",
        cycles.coeffs,
        boundaries.coeffs,
        L**3,
    )


def check_coefficient_bound(L: int = 2) -> bool:
    """Finite-L surrogate of the enumerator upper bound.

    Checks that every cycle count dominates the contractible count and
    that the total cycle count is at most 16x the contractible total
    (the 15 extra terms of the homology-class expansion).
    """
    cmp = check_homology_identity(L)
    b = cmp.lhs_coeffs
    b_star = cmp.rhs_coeffs
    for n in set(b) | set(b_star):
        if b.get(n, 0) < b_star.get(n, 0):
            return False
    return sum(b.values()) <= 16 * sum(b_star.values())


# -- bond algebras --------------------------------------------------------


def bond_algebra_isomorphic(bond_map: BondMap) -> bool:
    """True iff every operator pair has matching (anti)commutation on both sides."""
    src = bond_map.source_ops
    tgt = bond_map.target_ops
    for i in range(len(src)):
        for j in range(i + 1, len(src)):
            if src[i].commutes(src[j]) != tgt[i].commutes(tgt[j]):
                return False
    return True


def build_2dtc_bath_mapping(L: int, bath: str) -> BondMap:
    """The open-boundary 2D toric code with a local field, and its dual.

    bath="Vx": a magnetic field on every x-link; plaquette columns map to
    open Ising chains of tau spins, fields to transverse fields, and each
    interior star to its own auxiliary tau spin.
    bath="Vy": sigma-y fields on x-links; star rows additionally map to
    open Ising chains of rho spins and each field to a tau-x rho-x pair.
    Boundary stars are excluded on both sides.
    """
    if L < 2:
        raise InputError("bath mapping requires L >= 2")
    if bath not in ("Vx", "Vy"):
        raise InputError("bath must be 'Vx' or 'Vy'")

    # source: open LxL patch; x-links (i+1/2, j) 0<=i<=L-1, 0<=j<=L,
    # y-links (i, j+1/2) 0<=i<=L, 0<=j<=L-1
    n_x_links = L * (L + 1)
    x_link = {}
    y_link = {}
    q = 0
    for i in range(L):
        for j in range(L + 1):
            x_link[(i, j)] = q
            q += 1
    for i in range(L + 1):
        for j in range(L):
            y_link[(i, j)] = q
            q += 1
    n_src = q

    def star(i, j):
        links = [x_link[(i - 1, j)], x_link[(i, j)], y_link[(i, j - 1)], y_link[(i, j)]]
        return PauliOp.from_supports(n_src, x_support=links)

    def plaq(i, j):
        links = [x_link[(i, j)], x_link[(i, j + 1)], y_link[(i, j)], y_link[(i + 1, j)]]
        return PauliOp.from_supports(n_src, z_support=links)

    stars = [((i, j), star(i, j)) for i in range(1, L) for j in range(1, L)]
    plaquettes = [((i, j), plaq(i, j)) for i in range(L) for j in range(L)]
    field_kind = "x" if bath == "Vx" else "y"
    fields = [
        ((i, j), PauliOp.single(n_src, x_link[(i, j)], field_kind))
        for i in range(L)
        for j in range(L + 1)
    ]

    # target: tau spins (i, j) on the plaquette chains, then either one
    # auxiliary spin per star (Vx) or rho spins on the star chains (Vy)
    tau = {}
    q = 0
    for i in range(L):
        for j in range(L + 1):
            tau[(i, j)] = q
            q += 1
    if bath == "Vx":
        aux = {}
        for key, _ in stars:
            aux[key] = q
            q += 1
        n_tgt = q
        target = (
            [PauliOp.single(n_tgt, aux[key], "z") for key, _ in stars]
            + [
                PauliOp.from_supports(n_tgt, z_support=[tau[(i, j)], tau[(i, j + 1)]])
                for (i, j), _ in plaquettes
            ]
            + [PauliOp.single(n_tgt, tau[(i, j)], "x") for (i, j), _ in fields]
        )
    else:
        rho = {}
        for i in range(L):
            for j in range(L + 1):
                rho[(i, j)] = q
                q += 1
        n_tgt = q
        # star (i,j) couples the rho chain at row j between columns i-1 and i,
        # so it anticommutes with exactly the two horizontally adjacent fields
        target = (
            [
                PauliOp.from_supports(n_tgt, z_support=[rho[(i - 1, j)], rho[(i, j)]])
                for (i, j), _ in stars
            ]
            + [
                PauliOp.from_supports(n_tgt, z_support=[tau[(i, j)], tau[(i, j + 1)]])
                for (i, j), _ in plaquettes
            ]
            + [
                PauliOp.from_supports(
                    n_tgt, x_support=[tau[(i, j)], rho[(i, j)]]
                )
                for (i, j), _ in fields
            ]
        )

    source = [op for _, op in stars] + [op for _, op in plaquettes] + [op for _, op in fields]
    labels = (
        [f"A{key}" for key, _ in stars]
        + [f"B{key}" for key, _ in plaquettes]
        + [f"V{key}" for key, _ in fields]
    )
    return BondMap(tuple(source), tuple(target), tuple(labels))


# -- degeneracy and logical operators -------------------------------------


def gsd(m: CssModel) -> int:
    """Ground state degeneracy 2^(n - rank A - rank B)."""
    k = m.n_qubits - m.a_gens.rank() - m.b_gens.rank()
    return 1 << k


@dataclass(frozen=True)
class LogicalReport:
    """Outcome of verifying a family of claimed logical operators."""

    label: str
    n_operators: int
    commute_with_stabilizers: bool
    pattern_holds: bool
    outside_stabilizer_group: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.commute_with_stabilizers
            and self.pattern_holds
            and self.outside_stabilizer_group
        )


def _membership_matrix(gens: BitMatrix) -> BitMatrix:
    # columns are generator supports: solving M.y = v asks whether v is a
    # product of generators
    return gens.transpose()


def logical_operators_4dtc(L: int) -> LogicalReport:
    """Build and verify the plane logical operators of the 4D toric code.

    P^{mu nu}_{ij}: sigma-z over the plane of mu-nu plaquettes with the
    two transverse coordinates fixed.  Q^{mu nu}_{ij}: sigma-x over all
    mu-nu plaquettes with fixed mu and nu coordinates.  P and Q of the
    same orientation share exactly one plaquette and anticommute; all
    other pairs commute.
    """
    model = build_toric_4d(L)
    cx = HypercubicComplex(4, L)
    n = model.n_qubits

    p_ops = {}
    q_ops = {}
    for mu, nu in combinations(range(4), 2):
        others = [d for d in range(4) if d not in (mu, nu)]
        for ci in range(L):
            for cj in range(L):
                support_p = []
                support_q = []
                for s in range(L):
                    for t in range(L):
                        # P: transverse coords fixed, plane coords free
                        coords = [0, 0, 0, 0]
                        coords[others[0]] = ci
                        coords[others[1]] = cj
                        coords[mu] = s
                        coords[nu] = t
                        support_p.append(cx.cell_index(coords, (mu, nu)))
                        # Q: mu/nu coords fixed, transverse coords free
                        coords = [0, 0, 0, 0]
                        coords[mu] = ci
                        coords[nu] = cj
                        coords[others[0]] = s
                        coords[others[1]] = t
                        support_q.append(cx.cell_index(coords, (mu, nu)))
                p_ops[(mu, nu, ci, cj)] = PauliOp.from_supports(n, z_support=support_p)
                q_ops[(mu, nu, ci, cj)] = PauliOp.from_supports(n, x_support=support_q)

    stabilizers = model.a_ops() + model.b_ops()
    commute_ok = all(
        op.commutes(s) for ops in (p_ops, q_ops) for op in ops.values() for s in stabilizers
    )

    pattern_ok = True
    for (pmu, pnu, _, _), p in p_ops.items():
        for (qmu, qnu, _, _), qop in q_ops.items():
            expected = not (pmu == qmu and pnu == qnu)
            if p.commutes(qop) != expected:
                pattern_ok = False

    member_b = _membership_matrix(model.b_gens)
    member_a = _membership_matrix(model.a_gens)
    outside_ok = all(
        member_b.solve(p.z_vector()) is None for p in p_ops.values()
    ) and all(member_a.solve(qop.x_vector()) is None for qop in q_ops.values())

    return LogicalReport(
        label=f"4DTC plane logicals (L={L})",
        n_operators=len(p_ops) + len(q_ops),
        commute_with_stabilizers=commute_ok,
        pattern_holds=pattern_ok,
        outside_stabilizer_group=outside_ok,
    )


def logical_operators_haah(L: int) -> LogicalReport:
    """Build and verify the planar logical operators of Haah's code.

    P^{mu}_i: sigma-z over the plane of vertices with mu-coordinate i.
    Q^{mu}_i: tau-x over the same plane.  All of them commute with every
    stabilizer generator and mutually commute.
    """
    model = build_haah(L)
    cx = HypercubicComplex(3, L)
    n = model.n_qubits

    def plane(mu, i):
        verts = [v for v in range(L**3) if cx.vertex_coords(v)[mu] == i]
        return verts

    p_ops = {}
    q_ops = {}
    for mu in range(3):
        for i in range(L):
            verts = plane(mu, i)
            p_ops[(mu, i)] = PauliOp.from_supports(n, z_support=[2 * v for v in verts])
            q_ops[(mu, i)] = PauliOp.from_supports(n, x_support=[2 * v + 1 for v in verts])

    stabilizers = model.a_ops() + model.b_ops()
    commute_ok = all(
        op.commutes(s) for ops in (p_ops, q_ops) for op in ops.values() for s in stabilizers
    )

    all_logicals = list(p_ops.values()) + list(q_ops.values())
    pattern_ok = all(
        a.commutes(b) for a, b in combinations(all_logicals, 2)
    )

    member_b = _membership_matrix(model.b_gens)
    member_a = _membership_matrix(model.a_gens)
    outside_ok = all(
        member_b.solve(p.z_vector()) is None for p in p_ops.values()
    ) and all(member_a.solve(qop.x_vector()) is None for qop in q_ops.values())

    return LogicalReport(
        label=f"Haah planar logicals (L={L})",
        n_operators=len(p_ops) + len(q_ops),
        commute_with_stabilizers=commute_ok,
        pattern_holds=pattern_ok,
        outside_stabilizer_group=outside_ok,
    )
