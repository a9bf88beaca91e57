"""Compiled Gray-code walk over a GF(2) subspace.

The walk visits all 2^dim elements of the span of `basis` in reflected
binary order, XORing one basis vector per step into a packed running
accumulator and updating the Hamming weight incrementally from the
changed words only.  Contiguous ranges seed their own start codeword, so
the walk can be partitioned and the per-range histograms merged by
addition with a deterministic result.
"""
from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_TWO = np.uint64(2)
_FOUR = np.uint64(4)
_FIFTYSIX = np.uint64(56)


@njit(cache=True, nogil=True, inline="always")
def _popcount64(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> _TWO) & _M2)
    x = (x + (x >> _FOUR)) & _M4
    return np.int64((x * _H01) >> _FIFTYSIX)


@njit(cache=True, nogil=True)
def gray_walk_range(basis, start, stop, hist):
    """Accumulate weights of span elements with Gray ranks in [start, stop).

    basis: (dim, n_words) uint64, hist: int64 histogram indexed by weight.
    """
    dim, n_words = basis.shape
    state = np.zeros(n_words, np.uint64)
    g = start ^ (start >> 1)
    for j in range(dim):
        if (g >> j) & 1:
            for w in range(n_words):
                state[w] ^= basis[j, w]
    weight = np.int64(0)
    for w in range(n_words):
        weight += _popcount64(state[w])
    hist[weight] += 1
    for t in range(start + 1, stop):
        x = t
        j = 0
        while x & 1 == 0:
            x >>= 1
            j += 1
        for w in range(n_words):
            bw = basis[j, w]
            if bw != 0:
                s = state[w]
                weight -= _popcount64(s)
                s ^= bw
                weight += _popcount64(s)
                state[w] = s
        hist[weight] += 1


@njit(cache=True, nogil=True)
def gray_walk_collect(basis, out_vectors, out_weights):
    """Full walk that records every span element (packed) and its weight.

    out_vectors: (2^dim, n_words) uint64 in Gray-rank order.
    """
    dim, n_words = basis.shape
    state = np.zeros(n_words, np.uint64)
    weight = np.int64(0)
    for w in range(n_words):
        out_vectors[0, w] = state[w]
    out_weights[0] = weight
    total = np.int64(1) << dim
    for t in range(1, total):
        x = t
        j = 0
        while x & 1 == 0:
            x >>= 1
            j += 1
        for w in range(n_words):
            bw = basis[j, w]
            if bw != 0:
                s = state[w]
                weight -= _popcount64(s)
                s ^= bw
                weight += _popcount64(s)
                state[w] = s
        for w in range(n_words):
            out_vectors[t, w] = state[w]
        out_weights[t] = weight
