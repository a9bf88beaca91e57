"""Hypercubic cell complexes on the D-torus with GF(2) boundary maps.

A k-cell is a (base vertex, sorted direction subset of size k) pair with
all coordinates periodic mod L.  Coefficients are in GF(2) throughout, so
no orientation bookkeeping is needed.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import InputError
from .gf2 import BitMatrix, BitVector

__all__ = ["HypercubicComplex"]


class HypercubicComplex:
    """The cell complex of the torus (Z_L)^D, L >= 2.

    Cell indexing is lexicographic over (direction subset rank, vertex),
    vertices row-major over coordinates, so all matrices are reproducible.
    """

    def __init__(self, D: int, L: int):
        if D < 1:
            raise InputError("dimension D must be at least 1")
        if L < 2:
            # at L=1 every cell borders itself and the complex degenerates
            raise InputError("linear size L must be at least 2")
        self.D = D
        self.L = L
        self.n_vertices = L**D
        self._subsets = {k: list(combinations(range(D), k)) for k in range(D + 1)}
        self._subset_rank = {
            k: {s: i for i, s in enumerate(subs)} for k, subs in self._subsets.items()
        }
        self._boundary_cache: dict[int, BitMatrix] = {}

    # -- indexing ---------------------------------------------------------

    def n_cells(self, k: int) -> int:
        if not 0 <= k <= self.D:
            raise InputError(f"k={k} out of range for D={self.D}")
        return comb(self.D, k) * self.n_vertices

    def vertex_index(self, coords) -> int:
        idx = 0
        for c in coords:
            idx = idx * self.L + (c % self.L)
        return idx

    def vertex_coords(self, index: int) -> tuple[int, ...]:
        coords = []
        for _ in range(self.D):
            coords.append(index % self.L)
            index //= self.L
        return tuple(reversed(coords))

    def cell_index(self, coords, directions) -> int:
        """Dense index of the k-cell at base vertex `coords` spanning `directions`."""
        dirs = tuple(sorted(directions))
        k = len(dirs)
        try:
            srank = self._subset_rank[k][dirs]
        except KeyError:
            raise InputError(f"invalid direction subset {directions}") from None
        return srank * self.n_vertices + self.vertex_index(coords)

    def cell_from_index(self, k: int, index: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        srank, vidx = divmod(index, self.n_vertices)
        return self.vertex_coords(vidx), self._subsets[k][srank]

    # -- boundary operators ----------------------------------------------

    def boundary_matrix(self, k: int) -> BitMatrix:
        """The map from k-chains to (k-1)-chains: one column per k-cell.

        Each column carries the 2k boundary faces of its cell, mod 2.
        """
        if not 1 <= k <= self.D:
            raise InputError(f"boundary operator defined for 1 <= k <= D, got k={k}")
        if k in self._boundary_cache:
            return self._boundary_cache[k]
        n_from = self.n_cells(k)
        n_to = self.n_cells(k - 1)
        rows = [0] * n_to
        for srank, dirs in enumerate(self._subsets[k]):
            for vidx in range(self.n_vertices):
                coords = self.vertex_coords(vidx)
                col = srank * self.n_vertices + vidx
                for d in dirs:
                    face_dirs = tuple(x for x in dirs if x != d)
                    near = self.cell_index(coords, face_dirs)
                    shifted = list(coords)
                    shifted[d] = (shifted[d] + 1) % self.L
                    far = self.cell_index(shifted, face_dirs)
                    rows[near] ^= 1 << col
                    rows[far] ^= 1 << col
        mat = BitMatrix(n_to, n_from, rows)
        self._boundary_cache[k] = mat
        return mat

    # -- homology ---------------------------------------------------------

    def _kernel_dim(self, k: int) -> int:
        if k == 0:
            return self.n_cells(0)
        return self.n_cells(k) - self.boundary_matrix(k).rank()

    def _image_rank(self, k: int) -> int:
        if k > self.D:
            return 0
        return self.boundary_matrix(k).rank()

    def homology_rank(self, k: int) -> int:
        """dim ker(boundary_k) - rank(boundary_{k+1})."""
        if not 0 <= k <= self.D:
            raise InputError(f"k={k} out of range for D={self.D}")
        return self._kernel_dim(k) - self._image_rank(k + 1)

    def cycle_space(self, k: int) -> list[BitVector]:
        """Basis of the k-cycles, ker(boundary_k)."""
        if not 0 <= k <= self.D:
            raise InputError(f"k={k} out of range for D={self.D}")
        if k == 0:
            n = self.n_cells(0)
            return [BitVector(n, 1 << i) for i in range(n)]
        return self.boundary_matrix(k).kernel_basis()

    def boundary_space(self, k: int) -> list[BitVector]:
        """Basis of the k-boundaries, image of boundary_{k+1}."""
        if not 0 <= k <= self.D:
            raise InputError(f"k={k} out of range for D={self.D}")
        if k == self.D:
            return []
        cols = self.boundary_matrix(k + 1).transpose()
        rref_rows, pivots = cols._rref()
        return [BitVector(self.n_cells(k), rref_rows[i]) for i in range(len(pivots))]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.n_cells(k) for k in range(self.D + 1))

    def __repr__(self):
        return f"HypercubicComplex(D={self.D}, L={self.L})"
