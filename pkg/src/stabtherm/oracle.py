"""Independent brute-force references.

Nothing here may call the enumerator or partition-function code: a bug
shared with the main pipeline would validate itself.  Models are read
through their generator matrices only.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import InputError, ResourceLimit
from .models import CssModel, IsingModel

__all__ = [
    "dense_log_trace",
    "dense_spectrum",
    "ising_brute_log_z",
    "ising_chain_closed",
]

DENSE_QUBIT_CAP = 12
ISING_SPIN_CAP = 24

_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_I = np.eye(2)


def _pauli_product_matrix(n_qubits: int, support: int, single: np.ndarray) -> np.ndarray:
    """Tensor product with `single` on the supported qubits, identity elsewhere."""
    out = np.array([[1.0]])
    # qubit 0 is the least significant bit; build with it as the fastest axis
    for q in range(n_qubits - 1, -1, -1):
        factor = single if (support >> q) & 1 else _I
        out = np.kron(out, factor)
    return out


def dense_hamiltonian(m: CssModel) -> np.ndarray:
    """The full 2^n x 2^n Hamiltonian matrix of the model."""
    if m.n_qubits > DENSE_QUBIT_CAP:
        raise ResourceLimit(
            f"dense oracle capped at {DENSE_QUBIT_CAP} qubits, got {m.n_qubits}"
        )
    dim = 1 << m.n_qubits
    H = np.zeros((dim, dim))
    for row in m.a_gens.rows:
        H -= m.coupling_a * _pauli_product_matrix(m.n_qubits, row, _X)
    for row in m.b_gens.rows:
        H -= m.coupling_b * _pauli_product_matrix(m.n_qubits, row, _Z)
    return H


def dense_spectrum(m: CssModel) -> np.ndarray:
    """All 2^n eigenvalues of the model Hamiltonian."""
    return np.linalg.eigvalsh(dense_hamiltonian(m))


def dense_log_trace(m: CssModel, beta: float) -> float:
    """log Tr exp(-beta H) by full diagonalization."""
    if beta <= 0:
        raise InputError("beta must be positive")
    eigs = dense_spectrum(m)
    return float(np.logaddexp.reduce(-beta * eigs))


def ising_broken_bond_histogram(ising: IsingModel) -> np.ndarray:
    """Number of spin configurations per broken-bond count, all 2^n of them."""
    if ising.n_spins > ISING_SPIN_CAP:
        raise ResourceLimit(
            f"brute-force Ising sum capped at {ISING_SPIN_CAP} spins, got {ising.n_spins}"
        )
    n = ising.n_spins
    total = 1 << n
    hist = np.zeros(ising.n_bonds + 1, dtype=np.int64)
    chunk = 1 << 20
    bonds_i = np.array([i for i, _ in ising.bonds], dtype=np.uint32)
    bonds_j = np.array([j for _, j in ising.bonds], dtype=np.uint32)
    for start in range(0, total, chunk):
        configs = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        broken = np.zeros(len(configs), dtype=np.int64)
        for bi, bj in zip(bonds_i, bonds_j):
            broken += ((configs >> np.uint64(bi)) ^ (configs >> np.uint64(bj))).astype(np.int64) & 1
        hist += np.bincount(broken, minlength=ising.n_bonds + 1)
    return hist


def ising_brute_log_z(ising: IsingModel, beta: float) -> float:
    """log Z by direct summation over all 2^n spin configurations."""
    if beta <= 0:
        raise InputError("beta must be positive")
    hist = ising_broken_bond_histogram(ising)
    # energy of a configuration with k broken bonds: -J(n_bonds - 2k)
    terms = [
        math.log(c) + beta * ising.J * (ising.n_bonds - 2 * k)
        for k, c in enumerate(hist)
        if c
    ]
    return float(np.logaddexp.reduce(np.array(terms)))


def ising_chain_closed(L: int, J: float, beta: float) -> float:
    """Closed-form log Z of the periodic Ising chain:
    log[(2 cosh beta J)^L + (2 sinh beta J)^L]."""
    if L < 1:
        raise InputError("chain length must be at least 1")
    if beta <= 0:
        raise InputError("beta must be positive")
    x = beta * J
    # log(2 cosh x) and log(2 sinh x), overflow-safe
    log_2cosh = x + math.log1p(math.exp(-2.0 * x))
    log_2sinh = x + math.log1p(-math.exp(-2.0 * x))
    return float(np.logaddexp(L * log_2cosh, L * log_2sinh))
