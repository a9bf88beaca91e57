"""Dense GF(2) linear algebra on bit-packed rows.

Rows are stored as arbitrary-precision Python integers (bit i = column i),
so row elimination is a single big-int XOR.  This is fast enough for the
largest instances we care about (a few thousand rows/columns).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

__all__ = ["BitVector", "BitMatrix"]


@dataclass(frozen=True)
class BitVector:
    """A fixed-length vector over GF(2), packed into one integer."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise InputError("BitVector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise InputError("bits outside of stated length")

    @classmethod
    def from_indices(cls, length: int, indices) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise InputError(f"index {i} out of range for length {length}")
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_ints(cls, values) -> "BitVector":
        values = list(values)
        bits = 0
        for i, v in enumerate(values):
            if v & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise InputError(f"index {i} out of range")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def dot(self, other: "BitVector") -> int:
        """Inner product mod 2."""
        if self.length != other.length:
            raise InputError("length mismatch in dot product")
        return (self.bits & other.bits).bit_count() & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise InputError("length mismatch in XOR")
        return BitVector(self.length, self.bits ^ other.bits)

    def to_ints(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def is_zero(self) -> bool:
        return self.bits == 0


class BitMatrix:
    """A rows x cols matrix over GF(2); each row is a packed integer."""

    __slots__ = ("n_rows", "n_cols", "rows")

    def __init__(self, n_rows: int, n_cols: int, rows: list[int] | None = None):
        if n_rows < 0 or n_cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if rows is None:
            rows = [0] * n_rows
        if len(rows) != n_rows:
            raise InputError("row count mismatch")
        mask = (1 << n_cols) - 1
        for r in rows:
            if r < 0 or r & ~mask:
                raise InputError("row has bits beyond n_cols")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows = list(rows)

    @classmethod
    def from_bitvectors(cls, vectors: list[BitVector], n_cols: int | None = None) -> "BitMatrix":
        if n_cols is None:
            if not vectors:
                raise InputError("cannot infer n_cols from an empty row list")
            n_cols = vectors[0].length
        for v in vectors:
            if v.length != n_cols:
                raise InputError("inconsistent row lengths")
        return cls(len(vectors), n_cols, [v.bits for v in vectors])

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        rows = [BitVector.from_ints(row).bits for row in dense]
        n_cols = len(dense[0]) if dense else 0
        return cls(len(rows), n_cols, rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def row(self, i: int) -> BitVector:
        return BitVector(self.n_cols, self.rows[i])

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.n_cols, self.n_rows, cols)

    def mul_vec(self, x: BitVector) -> BitVector:
        """Matrix-vector product M.x over GF(2)."""
        if x.length != self.n_cols:
            raise InputError("vector length must equal n_cols")
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x.bits).bit_count() & 1:
                out |= 1 << i
        return BitVector(self.n_rows, out)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.n_cols != other.n_rows:
            raise InputError("inner dimensions do not match")
        ot = other.transpose()
        rows = []
        for r in self.rows:
            acc = 0
            for j, c in enumerate(ot.rows):
                if (r & c).bit_count() & 1:
                    acc |= 1 << j
            rows.append(acc)
        return BitMatrix(self.n_rows, other.n_cols, rows)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    # -- elimination ------------------------------------------------------

    def _rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column list).

        Pivots are chosen leftmost-column first, scanning rows top down,
        so results are reproducible.
        """
        rows = list(self.rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.n_cols):
            if r >= self.n_rows:
                break
            mask = 1 << c
            p = next((i for i in range(r, self.n_rows) if rows[i] & mask), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r]
            for i in range(self.n_rows):
                if i != r and rows[i] & mask:
                    rows[i] ^= piv
            pivots.append(c)
            r += 1
        return rows, pivots

    def rank(self) -> int:
        """Dimension of the row space over GF(2)."""
        rows = list(self.rows)
        rank = 0
        for c in range(self.n_cols):
            if rank >= self.n_rows:
                break
            mask = 1 << c
            p = next((i for i in range(rank, self.n_rows) if rows[i] & mask), None)
            if p is None:
                continue
            rows[rank], rows[p] = rows[p], rows[rank]
            piv = rows[rank]
            for i in range(rank + 1, self.n_rows):
                if rows[i] & mask:
                    rows[i] ^= piv
            rank += 1
        return rank

    def kernel_basis(self) -> list[BitVector]:
        """Basis of {x : M.x = 0}; size is n_cols - rank."""
        rref_rows, pivots = self._rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.n_cols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            v = 1 << f
            for r, p in enumerate(pivots):
                if (rref_rows[r] >> f) & 1:
                    v |= 1 << p
            basis.append(BitVector(self.n_cols, v))
        return basis

    def solve(self, b: BitVector) -> BitVector | None:
        """Some x with M.x = b, or None if the system is inconsistent."""
        if b.length != self.n_rows:
            raise InputError("rhs length must equal n_rows")
        # augment each row with its rhs bit at position n_cols
        aug = BitMatrix(
            self.n_rows,
            self.n_cols + 1,
            [r | (b.get(i) << self.n_cols) for i, r in enumerate(self.rows)],
        )
        rows = list(aug.rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.n_cols):
            if r >= self.n_rows:
                break
            mask = 1 << c
            p = next((i for i in range(r, self.n_rows) if rows[i] & mask), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r]
            for i in range(self.n_rows):
                if i != r and rows[i] & mask:
                    rows[i] ^= piv
            pivots.append(c)
            r += 1
        # rows below the rank are zero in the main block; a leftover rhs bit
        # there means the system is inconsistent
        for i in range(r, self.n_rows):
            if rows[i] >> self.n_cols:
                return None
        x = 0
        for i, p in enumerate(pivots):
            if rows[i] >> self.n_cols:
                x |= 1 << p
        return BitVector(self.n_cols, x)

    def __repr__(self):
        return f"BitMatrix({self.n_rows}x{self.n_cols})"
