"""Constraint kernels and weight enumerators of generator subspaces.

A constraint is a subset of generators whose supports XOR to zero; the
constraints form a GF(2) subspace of the generator index space.  The
weight enumerator counts constraints by subset size, which is exactly
what the high-temperature factorization of the partition function needs.
"""
from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._graywalk import gray_walk_collect, gray_walk_range
from .errors import InputError, ResourceLimit
from .models import CssModel

__all__ = [
    "ConstraintKernel",
    "WeightEnumerator",
    "constraint_kernel",
    "weight_enumerator_full",
    "weight_enumerator_mitm",
    "evaluate_log_T",
    "write_enumerator_csv",
    "DEFAULT_DIM_CAP",
]

DEFAULT_DIM_CAP = 28


@dataclass(frozen=True)
class ConstraintKernel:
    """Basis of the generator subsets multiplying to the identity."""

    side: str                     # "A" or "B"
    n_generators: int
    basis: tuple

    def __post_init__(self):
        if self.side not in ("A", "B"):
            raise InputError("side must be 'A' or 'B'")
        for v in self.basis:
            if v.length != self.n_generators:
                raise InputError("basis vector length must equal n_generators")

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts c_n of constraint subsets of each size n.

    `complete` means every element of the subspace was counted; otherwise
    only weights up to `max_tracked` are exact.  Counts are Python ints,
    so they never overflow.  `dim` is the subspace dimension, kept for
    tail bounds on truncated evaluations.
    """

    coeffs: dict
    complete: bool
    dim: int
    max_tracked: int | None = None

    def __post_init__(self):
        if self.coeffs.get(0, 0) != 1:
            raise InputError("every enumerator must count the empty product once")
        if self.complete and sum(self.coeffs.values()) != 1 << self.dim:
            raise InputError("complete enumerator must count 2^dim subsets")

    def count(self, n: int) -> int:
        return self.coeffs.get(n, 0)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def max_weight(self) -> int:
        return max(self.coeffs)


def constraint_kernel(m: CssModel, side: str) -> ConstraintKernel:
    """Kernel of the transposed generator-support map for one side."""
    if side == "A":
        gens = m.a_gens
    elif side == "B":
        gens = m.b_gens
    else:
        raise InputError("side must be 'A' or 'B'")
    basis = gens.transpose().kernel_basis()
    return ConstraintKernel(side, gens.n_rows, tuple(basis))


def _pack_basis(kernel: ConstraintKernel) -> np.ndarray:
    n_words = max(1, (kernel.n_generators + 63) // 64)
    packed = np.zeros((kernel.dim, n_words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(kernel.basis):
        bits = v.bits
        for w in range(n_words):
            packed[i, w] = (bits >> (64 * w)) & mask
    return packed


def _n_threads(n_threads: int | None) -> int:
    if n_threads is None:
        n_threads = int(os.environ.get("STABTHERM_THREADS", "1"))
    if n_threads < 1:
        raise InputError("thread count must be positive")
    return n_threads


def weight_enumerator_full(
    kernel: ConstraintKernel,
    dim_cap: int = DEFAULT_DIM_CAP,
    n_threads: int | None = None,
) -> WeightEnumerator:
    """Exact weight distribution by a Gray-code walk over all 2^dim elements.

    The walk may be split into contiguous ranges across threads; partial
    histograms merge by addition, so the result is deterministic.
    """
    if kernel.dim > dim_cap:
        raise ResourceLimit(
            f"kernel dimension {kernel.dim} exceeds the full-walk cap {dim_cap}; "
            f"use weight_enumerator_mitm for truncated coefficients"
        )
    basis = _pack_basis(kernel)
    total = 1 << kernel.dim
    threads = min(_n_threads(n_threads), total)
    bounds = [total * i // threads for i in range(threads + 1)]
    hists = [np.zeros(kernel.n_generators + 1, dtype=np.int64) for _ in range(threads)]
    if threads == 1:
        gray_walk_range(basis, 0, total, hists[0])
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(gray_walk_range, basis, bounds[i], bounds[i + 1], hists[i])
                for i in range(threads)
            ]
            for f in futures:
                f.result()
    hist = np.zeros(kernel.n_generators + 1, dtype=np.int64)
    for h in hists:
        hist += h
    coeffs = {n: int(c) for n, c in enumerate(hist) if c}
    return WeightEnumerator(coeffs, complete=True, dim=kernel.dim)


def weight_enumerator_mitm(
    kernel: ConstraintKernel,
    max_weight: int,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> WeightEnumerator:
    """Exact coefficients up to max_weight by a half-basis join.

    Both half-subspaces are enumerated fully; the join only XORs pairs
    whose weight difference can still land at or below max_weight.
    """
    if max_weight < 0:
        raise InputError("max_weight must be nonnegative")
    if kernel.dim > 2 * dim_cap:
        raise ResourceLimit(
            f"kernel dimension {kernel.dim} exceeds the meet-in-the-middle cap {2 * dim_cap}"
        )
    if kernel.dim <= dim_cap and max_weight >= kernel.n_generators:
        full = weight_enumerator_full(kernel, dim_cap)
        return WeightEnumerator(full.coeffs, complete=False, dim=kernel.dim,
                                max_tracked=max_weight)

    half = kernel.dim // 2
    lo = ConstraintKernel(kernel.side, kernel.n_generators, kernel.basis[:half])
    hi = ConstraintKernel(kernel.side, kernel.n_generators, kernel.basis[half:])
    lo_vecs, lo_wts = _collect_span(lo)
    hi_vecs, hi_wts = _collect_span(hi)

    # bucket the high half by weight
    order = np.argsort(hi_wts, kind="stable")
    hi_vecs = hi_vecs[order]
    hi_wts = hi_wts[order]
    unique_w, starts = np.unique(hi_wts, return_index=True)
    starts = list(starts) + [len(hi_wts)]

    hist = np.zeros(max_weight + 1, dtype=object)
    hist[:] = 0
    for a_vec, a_wt in zip(lo_vecs, lo_wts):
        for ui, w in enumerate(unique_w):
            if abs(int(a_wt) - int(w)) > max_weight:
                continue
            block = hi_vecs[starts[ui]:starts[ui + 1]]
            joined = np.bitwise_xor(block, a_vec[None, :])
            weights = np.bitwise_count(joined).sum(axis=1, dtype=np.int64)
            keep = weights[weights <= max_weight]
            if keep.size:
                counts = np.bincount(keep, minlength=max_weight + 1)
                for n in np.nonzero(counts)[0]:
                    hist[n] += int(counts[n])
    coeffs = {int(n): int(c) for n, c in enumerate(hist) if c}
    return WeightEnumerator(coeffs, complete=False, dim=kernel.dim, max_tracked=max_weight)


def _collect_span(kernel: ConstraintKernel):
    n_words = max(1, (kernel.n_generators + 63) // 64)
    basis = _pack_basis(kernel)
    total = 1 << kernel.dim
    vectors = np.zeros((total, n_words), dtype=np.uint64)
    weights = np.zeros(total, dtype=np.int64)
    gray_walk_collect(basis, vectors, weights)
    return vectors, weights


def evaluate_log_T(w: WeightEnumerator, T: float) -> float:
    """log of sum_n c_n T^n, evaluated in log space.

    For a truncated enumerator the omitted tail is bounded by
    2^dim * T^(max_tracked+1); checking that bound is the caller's job
    (see thermo.log_partition).

    T == 1.0 is accepted as the low-temperature limit (tanh rounds to 1.0
    in double precision around beta ~ 19): the polynomial value is then
    simply the total count.
    """
    if not 0.0 <= T <= 1.0:
        raise InputError(f"T must lie in [0, 1], got {T}")
    if T == 0.0:
        return 0.0  # only the empty product survives; c_0 == 1
    log_t = math.log(T)
    terms = np.array([math.log(c) + n * log_t for n, c in sorted(w.coeffs.items())])
    return float(np.logaddexp.reduce(terms))


def log_tail_bound(w: WeightEnumerator, T: float) -> float:
    """log of the truncation tail bound 2^dim * T^(max_tracked+1)."""
    if w.complete:
        return -math.inf
    if T == 0.0:
        return -math.inf
    return w.dim * math.log(2.0) + (w.max_tracked + 1) * math.log(T)


def write_enumerator_csv(w: WeightEnumerator, path) -> None:
    """Serialize as (weight, count) rows for offline inspection."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["weight", "count"])
        for n, c in sorted(w.coeffs.items()):
            writer.writerow([n, c])
