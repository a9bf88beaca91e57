"""Exact finite-temperature thermodynamics of CSS stabilizer code Hamiltonians.

Builds the constraint algebra of a model over GF(2), assembles its exact
partition function from constraint weight enumerators, and verifies the
duality structure (4D toric code vs 4D Ising, Haah's code vs decoupled
Ising chains) against independent brute-force oracles.
"""
from .errors import CheckFailed, InputError, ResourceLimit, TruncationError
from .gf2 import BitMatrix, BitVector
from .homology import HypercubicComplex
from .models import (
    CssModel,
    IsingModel,
    build_haah,
    build_ising,
    build_toric_2d,
    build_toric_3d,
    build_toric_4d,
    css_validate,
)
from .pauli import PauliOp
from .enumerators import (
    ConstraintKernel,
    WeightEnumerator,
    constraint_kernel,
    evaluate_log_T,
    weight_enumerator_full,
    weight_enumerator_mitm,
)
from .thermo import ThermoPoint, free_energy_density, log_partition, sweep

__version__ = "0.1.0"

__all__ = [
    "BitMatrix", "BitVector", "PauliOp", "HypercubicComplex",
    "CssModel", "IsingModel", "css_validate",
    "build_toric_2d", "build_toric_3d", "build_toric_4d", "build_haah", "build_ising",
    "ConstraintKernel", "WeightEnumerator", "constraint_kernel",
    "weight_enumerator_full", "weight_enumerator_mitm", "evaluate_log_T",
    "ThermoPoint", "log_partition", "free_energy_density", "sweep",
    "InputError", "ResourceLimit", "TruncationError", "CheckFailed",
]
