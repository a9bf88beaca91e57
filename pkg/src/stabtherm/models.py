"""Builders for the Hamiltonians in scope.

Toric codes in 2, 3, and 4 dimensions, Haah's cubic code, and classical
nearest-neighbor Ising models.  Generator supports are rows of GF(2)
matrices; vertex/cell indexing is shared with `homology` so that the 4D
toric code generators coincide with boundary-matrix rows and columns.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .gf2 import BitMatrix
from .homology import HypercubicComplex
from .pauli import PauliOp

__all__ = [
    "CssModel",
    "IsingModel",
    "build_toric_2d",
    "build_toric_3d",
    "build_toric_4d",
    "build_haah",
    "build_ising",
    "css_validate",
]


@dataclass(frozen=True)
class CssModel:
    """A CSS stabilizer Hamiltonian H = -a sum A_r - b sum B_s.

    Rows of `a_gens` are the X-type generator supports over qubits; rows
    of `b_gens` the Z-type supports.  `n_sites` is the lattice volume L^D
    used for free-energy normalization (defaults to n_qubits).
    """

    n_qubits: int
    a_gens: BitMatrix
    b_gens: BitMatrix
    coupling_a: float = 1.0
    coupling_b: float = 1.0
    label: str = ""
    n_sites: int = 0

    def __post_init__(self):
        if self.a_gens.n_cols != self.n_qubits or self.b_gens.n_cols != self.n_qubits:
            raise InputError("generator matrices must have n_qubits columns")
        if self.coupling_a <= 0 or self.coupling_b <= 0:
            raise InputError("couplings must be positive")
        if self.n_sites == 0:
            object.__setattr__(self, "n_sites", self.n_qubits)

    @property
    def n_a(self) -> int:
        return self.a_gens.n_rows

    @property
    def n_b(self) -> int:
        return self.b_gens.n_rows

    def a_ops(self) -> list[PauliOp]:
        return [PauliOp(self.n_qubits, x_mask=r) for r in self.a_gens.rows]

    def b_ops(self) -> list[PauliOp]:
        return [PauliOp(self.n_qubits, z_mask=r) for r in self.b_gens.rows]

    def with_couplings(self, a: float, b: float) -> "CssModel":
        return CssModel(self.n_qubits, self.a_gens, self.b_gens, a, b, self.label, self.n_sites)

    def describe(self) -> dict:
        return {
            "label": self.label,
            "n_qubits": self.n_qubits,
            "n_sites": self.n_sites,
            "n_a_generators": self.n_a,
            "n_b_generators": self.n_b,
            "coupling_a": self.coupling_a,
            "coupling_b": self.coupling_b,
        }


@dataclass(frozen=True)
class IsingModel:
    """Classical nearest-neighbor Ising model, H = -J sum s_i s_j.

    Bonds are (i, j) spin-index pairs, one per lattice link.  On an L=2
    torus each unordered pair appears twice: the two links between a pair
    of neighboring vertices are physically distinct and both carry energy.
    """

    n_spins: int
    bonds: tuple
    J: float = 1.0
    label: str = ""

    def __post_init__(self):
        if self.J <= 0:
            raise InputError("J must be positive")
        for i, j in self.bonds:
            if not (0 <= i < self.n_spins and 0 <= j < self.n_spins):
                raise InputError("bond index out of range")

    @property
    def n_bonds(self) -> int:
        return len(self.bonds)


def css_validate(m: CssModel) -> bool:
    """True iff every X-generator overlaps every Z-generator evenly."""
    for a in m.a_gens.rows:
        for b in m.b_gens.rows:
            if (a & b).bit_count() & 1:
                return False
    return True


def _check_no_trivial_generators(m: CssModel) -> CssModel:
    # a support cancelling entirely mod 2 would silently change the
    # generator count entering the partition function
    for i, r in enumerate(m.a_gens.rows):
        if r == 0:
            raise InputError(f"{m.label}: X generator {i} cancels to the identity")
    for i, r in enumerate(m.b_gens.rows):
        if r == 0:
            raise InputError(f"{m.label}: Z generator {i} cancels to the identity")
    return m


def build_toric_2d(L: int, a: float = 1.0, b: float = 1.0) -> CssModel:
    """2D toric code: qubits on links, stars on vertices, plaquettes on faces."""
    if L < 2:
        raise InputError("toric code requires L >= 2")
    cx = HypercubicComplex(2, L)
    stars = cx.boundary_matrix(1)              # vertices x links
    plaquettes = cx.boundary_matrix(2).transpose()  # faces x links
    return _check_no_trivial_generators(
        CssModel(cx.n_cells(1), stars, plaquettes, a, b, f"toric2d(L={L})", L**2)
    )


def build_toric_3d(L: int, a: float = 1.0, b: float = 1.0) -> CssModel:
    """3D toric code: qubits on links, stars on vertices, plaquettes on faces."""
    if L < 2:
        raise InputError("toric code requires L >= 2")
    cx = HypercubicComplex(3, L)
    stars = cx.boundary_matrix(1)
    plaquettes = cx.boundary_matrix(2).transpose()
    return _check_no_trivial_generators(
        CssModel(cx.n_cells(1), stars, plaquettes, a, b, f"toric3d(L={L})", L**3)
    )


def build_toric_4d(L: int, a: float = 1.0, b: float = 1.0) -> CssModel:
    """4D toric code: qubits on plaquettes, X on links, Z on cubes."""
    if L < 2:
        raise InputError("toric code requires L >= 2")
    cx = HypercubicComplex(4, L)
    links = cx.boundary_matrix(2)              # links x plaquettes
    cubes = cx.boundary_matrix(3).transpose()  # cubes x plaquettes
    return _check_no_trivial_generators(
        CssModel(cx.n_cells(2), links, cubes, a, b, f"toric4d(L={L})", L**4)
    )


def build_haah(L: int, a: float = 1.0, b: float = 1.0) -> CssModel:
    """Haah's cubic code: two qubits per vertex of (Z_L)^3.

    Qubit 2v is the sigma qubit at vertex v; qubit 2v+1 the tau qubit.
    """
    if L < 2:
        raise InputError("Haah's code requires L >= 2")
    cx = HypercubicComplex(3, L)
    n_v = L**3
    n_qubits = 2 * n_v

    def sig(coords, dx, dy, dz):
        x, y, z = coords
        return 2 * cx.vertex_index((x + dx, y + dy, z + dz))

    def tau(coords, dx, dy, dz):
        return sig(coords, dx, dy, dz) + 1

    a_rows = []
    b_rows = []
    for vidx in range(n_v):
        v = cx.vertex_coords(vidx)
        a_support = [
            sig(v, 0, 0, 0), tau(v, 0, 0, 0),
            tau(v, 1, 0, 0), tau(v, 0, 1, 0), tau(v, 0, 0, 1),
            sig(v, 1, 1, 0), sig(v, 1, 0, 1), sig(v, 0, 1, 1),
        ]
        b_support = [
            tau(v, 1, 0, 0), tau(v, 0, 1, 0), tau(v, 0, 0, 1),
            sig(v, 1, 1, 0), sig(v, 1, 0, 1), sig(v, 0, 1, 1),
            sig(v, 1, 1, 1), tau(v, 1, 1, 1),
        ]
        row_a = 0
        for q in a_support:
            row_a ^= 1 << q
        row_b = 0
        for q in b_support:
            row_b ^= 1 << q
        a_rows.append(row_a)
        b_rows.append(row_b)
    model = CssModel(
        n_qubits,
        BitMatrix(n_v, n_qubits, a_rows),
        BitMatrix(n_v, n_qubits, b_rows),
        a, b, f"haah(L={L})", n_v,
    )
    return _check_no_trivial_generators(model)


def build_ising(D: int, L: int, J: float = 1.0) -> IsingModel:
    """Nearest-neighbor Ising model on the torus (Z_L)^D: D*L^D bonds."""
    if D < 1:
        raise InputError("Ising dimension must be at least 1")
    if L < 2:
        raise InputError("Ising model requires L >= 2")
    cx = HypercubicComplex(D, L)
    bonds = []
    for vidx in range(L**D):
        coords = cx.vertex_coords(vidx)
        for d in range(D):
            shifted = list(coords)
            shifted[d] = (shifted[d] + 1) % L
            bonds.append((vidx, cx.vertex_index(shifted)))
    return IsingModel(L**D, tuple(bonds), J, f"ising(D={D},L={L})")
