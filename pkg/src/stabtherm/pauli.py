"""Phase-free Pauli operators as (x-mask, z-mask) pairs.

Phases are deliberately not tracked: commutation structure and
products-to-identity are all the thermodynamics and bond-algebra checks
need, and both are phase-free for CSS generators.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .gf2 import BitVector

__all__ = ["PauliOp"]


@dataclass(frozen=True)
class PauliOp:
    """A Pauli operator on n qubits, up to phase.

    Y on a qubit is represented by setting both masks there.
    """

    n_qubits: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise InputError("n_qubits must be nonnegative")
        full = (1 << self.n_qubits) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise InputError("mask has bits beyond n_qubits")
        if self.x_mask < 0 or self.z_mask < 0:
            raise InputError("masks must be nonnegative")

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliOp":
        return cls(n_qubits)

    @classmethod
    def from_supports(cls, n_qubits: int, x_support=(), z_support=()) -> "PauliOp":
        x = BitVector.from_indices(n_qubits, x_support).bits
        z = BitVector.from_indices(n_qubits, z_support).bits
        return cls(n_qubits, x, z)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, kind: str) -> "PauliOp":
        """One-qubit X, Y, or Z embedded in an n-qubit register."""
        if not 0 <= qubit < n_qubits:
            raise InputError("qubit index out of range")
        bit = 1 << qubit
        if kind == "x":
            return cls(n_qubits, bit, 0)
        if kind == "z":
            return cls(n_qubits, 0, bit)
        if kind == "y":
            return cls(n_qubits, bit, bit)
        raise InputError(f"unknown Pauli kind {kind!r}")

    def commutes(self, other: "PauliOp") -> bool:
        """Symplectic-form commutation: <x,z'> + <z,x'> even."""
        if self.n_qubits != other.n_qubits:
            raise InputError("operators act on different qubit counts")
        sym = (self.x_mask & other.z_mask).bit_count() + (self.z_mask & other.x_mask).bit_count()
        return sym % 2 == 0

    def multiply(self, other: "PauliOp") -> "PauliOp":
        """Phase-free product: componentwise XOR of both masks."""
        if self.n_qubits != other.n_qubits:
            raise InputError("operators act on different qubit counts")
        return PauliOp(self.n_qubits, self.x_mask ^ other.x_mask, self.z_mask ^ other.z_mask)

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return self.multiply(other)

    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def x_vector(self) -> BitVector:
        return BitVector(self.n_qubits, self.x_mask)

    def z_vector(self) -> BitVector:
        return BitVector(self.n_qubits, self.z_mask)

    def __str__(self) -> str:
        """Render as e.g. "X3 Z7 Y12"; the identity renders as "I"."""
        parts = []
        both = self.x_mask | self.z_mask
        q = both
        while q:
            low = q & -q
            i = low.bit_length() - 1
            x = (self.x_mask >> i) & 1
            z = (self.z_mask >> i) & 1
            parts.append(("Y" if x and z else "X" if x else "Z") + str(i))
            q ^= low
        return " ".join(parts) if parts else "I"
