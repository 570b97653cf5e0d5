"""Gray-code codeword enumeration kernels.

The 2^k codewords of a k-row binary generator are visited in Gray-code
order of the information word, so each step XORs exactly one generator
row (the one indexed by the count of trailing zeros of the step index)
into the running codeword.  Weights feed a histogram via popcount.
Kernels are JIT-compiled and release the GIL; the driver can split the
information space on its top bits and hand disjoint cosets to threads,
each with a private histogram, merged by addition at the end.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _popcount64(typingctx, src):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        ctpop = builder.module.declare_intrinsic("llvm.ctpop", [ir.IntType(64)])
        return builder.call(ctpop, args)

    return sig, codegen


@intrinsic
def _cttz64(typingctx, src):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        i64 = ir.IntType(64)
        # llvm.cttz takes (value, is_zero_poison); pass zero explicitly.
        fnty = ir.FunctionType(i64, [i64, ir.IntType(1)])
        cttz = builder.module.declare_intrinsic("llvm.cttz", [i64], fnty)
        return builder.call(cttz, [args[0], ir.Constant(ir.IntType(1), 0)])

    return sig, codegen


@njit(
    "int64(uint64[::1], int64, uint64, int64[::1], int64)",
    nogil=True,
    cache=True,
)
def _hist_words1(rows, m, base, hist, abort_below):
    """One-word kernel (length <= 64). Returns 1 if the abort bound fired."""
    cur = base
    w = np.int64(_popcount64(cur))
    if 0 < w < abort_below:
        return 1
    hist[w] += 1
    total = np.uint64(1) << np.uint64(m)
    i = np.uint64(1)
    while i < total:
        cur ^= rows[np.int64(_cttz64(i))]
        w = np.int64(_popcount64(cur))
        if 0 < w < abort_below:
            return 1
        hist[w] += 1
        i += np.uint64(1)
    return 0


@njit(
    "int64(uint64[::1], uint64[::1], int64, uint64, uint64, int64[::1], int64)",
    nogil=True,
    cache=True,
)
def _hist_words2(rows0, rows1, m, base0, base1, hist, abort_below):
    """Two-word kernel (length <= 128)."""
    c0 = base0
    c1 = base1
    w = np.int64(_popcount64(c0)) + np.int64(_popcount64(c1))
    if 0 < w < abort_below:
        return 1
    hist[w] += 1
    total = np.uint64(1) << np.uint64(m)
    i = np.uint64(1)
    while i < total:
        j = np.int64(_cttz64(i))
        c0 ^= rows0[j]
        c1 ^= rows1[j]
        w = np.int64(_popcount64(c0)) + np.int64(_popcount64(c1))
        if 0 < w < abort_below:
            return 1
        hist[w] += 1
        i += np.uint64(1)
    return 0


@njit(
    "int64(uint64[:, ::1], int64, uint64[::1], int64[::1], int64)",
    nogil=True,
    cache=True,
)
def _hist_words_any(rows, m, base, hist, abort_below):
    """General kernel for any word count (lengths beyond 128)."""
    n_words = rows.shape[1]
    cur = base.copy()
    w = np.int64(0)
    for t in range(n_words):
        w += np.int64(_popcount64(cur[t]))
    if 0 < w < abort_below:
        return 1
    hist[w] += 1
    total = np.uint64(1) << np.uint64(m)
    i = np.uint64(1)
    while i < total:
        j = np.int64(_cttz64(i))
        w = np.int64(0)
        for t in range(n_words):
            cur[t] ^= rows[j, t]
            w += np.int64(_popcount64(cur[t]))
        if 0 < w < abort_below:
            return 1
        hist[w] += 1
        i += np.uint64(1)
    return 0


def _coset_bases(high: np.ndarray, p: int) -> np.ndarray:
    """XOR combinations of the p fixed rows, indexed by the chunk number."""
    n_words = high.shape[1]
    bases = np.zeros((1 << p, n_words), dtype=np.uint64)
    for c in range(1 << p):
        acc = np.zeros(n_words, dtype=np.uint64)
        for j in range(p):
            if (c >> j) & 1:
                acc ^= high[j]
        bases[c] = acc
    return bases


def _default_chunk_bits(k: int, workers: int) -> int:
    if workers <= 1:
        return 0
    p = max(workers * 2 - 1, 1).bit_length()
    return min(p, 6, k)


def gray_histogram(
    packed: np.ndarray,
    n: int,
    *,
    workers: int = 1,
    chunk_bits: int | None = None,
    abort_below: int = 0,
) -> np.ndarray | None:
    """Weight histogram of the row span of ``packed`` (k x n_words, uint64).

    Rows must be linearly independent; the caller guarantees k <= 40.
    Returns counts indexed by weight, or None when ``abort_below`` is
    positive and a nonzero codeword of smaller weight was found.
    """
    k, n_words = packed.shape
    p = _default_chunk_bits(k, workers) if chunk_bits is None else min(chunk_bits, k)
    m = k - p
    bases = _coset_bases(packed[m:], p)
    low = [np.ascontiguousarray(packed[:m, t]) for t in range(n_words)]
    low_any = np.ascontiguousarray(packed[:m])

    def run_chunk(c: int) -> np.ndarray | None:
        hist = np.zeros(n + 1, dtype=np.int64)
        if n_words == 1:
            aborted = _hist_words1(low[0], m, bases[c, 0], hist, abort_below)
        elif n_words == 2:
            aborted = _hist_words2(
                low[0], low[1], m, bases[c, 0], bases[c, 1], hist, abort_below
            )
        else:
            aborted = _hist_words_any(low_any, m, bases[c].copy(), hist, abort_below)
        return None if aborted else hist

    n_chunks = 1 << p
    if workers <= 1 or n_chunks == 1:
        total = np.zeros(n + 1, dtype=np.int64)
        for c in range(n_chunks):
            part = run_chunk(c)
            if part is None:
                return None
            total += part
        return total

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run_chunk, range(n_chunks)))
    if any(part is None for part in parts):
        return None
    total = np.zeros(n + 1, dtype=np.int64)
    for part in parts:
        total += part
    return total
