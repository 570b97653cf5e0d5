"""Bit-packed linear algebra over GF(2).

A vector's coordinates live in one Python integer: coordinate 0 is the
least significant bit, so the layout exposed by :meth:`BitVector.words`
is little-endian in 64-bit machine words.  Row operations are single
XORs and weights are popcounts, which is exactly what the codeword
enumeration engine consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import OddLength, NotSelfOrthogonal, RankDeficient

_WORD_MASK = (1 << 64) - 1


@dataclass(frozen=True, slots=True)
class BitVector:
    """Immutable vector over GF(2) packed into an integer payload."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("vector length must be non-negative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("payload has bits set beyond the vector length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            if b:
                value |= 1 << n
            n += 1
        return cls(n, value)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.length

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"coordinate {i} out of range for length {self.length}")
        return (self.value >> i) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch in xor")
        return BitVector(self.length, self.value ^ other.value)

    def dot(self, other: "BitVector") -> int:
        """Inner product over GF(2)."""
        if self.length != other.length:
            raise ValueError("length mismatch in dot")
        return (self.value & other.value).bit_count() & 1

    def words(self) -> tuple[int, ...]:
        """Little-endian 64-bit words; coordinate 0 is bit 0 of word 0."""
        n_words = max(1, (self.length + 63) // 64)
        return tuple((self.value >> (64 * w)) & _WORD_MASK for w in range(n_words))


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """Immutable matrix over GF(2): a non-empty tuple of equal-length rows."""

    rows: tuple[BitVector, ...]
    cols: int

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        if self.cols < 1:
            raise ValueError("matrix must have at least one column")
        for r in self.rows:
            if r.length != self.cols:
                raise ValueError("all rows must share the matrix width")

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        rows = tuple(rows)
        if not rows:
            raise ValueError("matrix must have at least one row")
        return cls(rows, rows[0].length)

    @classmethod
    def from_bit_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls.from_rows([BitVector.from_bits(r) for r in rows])

    @classmethod
    def from_row_values(cls, values: Sequence[int], cols: int) -> "BitMatrix":
        return cls(tuple(BitVector(cols, v) for v in values), cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(BitVector(n, 1 << i) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_values(self) -> tuple[int, ...]:
        return tuple(r.value for r in self.rows)

    def transpose(self) -> "BitMatrix":
        values = []
        for j in range(self.cols):
            v = 0
            for i, r in enumerate(self.rows):
                v |= ((r.value >> j) & 1) << i
            values.append(v)
        return BitMatrix.from_row_values(values, self.nrows)

    def packed(self) -> np.ndarray:
        """Rows as a C-contiguous (nrows, n_words) uint64 array."""
        n_words = max(1, (self.cols + 63) // 64)
        out = np.empty((self.nrows, n_words), dtype=np.uint64)
        for i, r in enumerate(self.rows):
            v = r.value
            for w in range(n_words):
                out[i, w] = (v >> (64 * w)) & _WORD_MASK
        return out


@dataclass(frozen=True, slots=True)
class RrefResult:
    reduced: BitMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(m: BitMatrix) -> RrefResult:
    """Reduced row echelon form.

    Returns a matrix of the same shape (zero rows sink to the bottom),
    the rank, and the pivot columns in increasing order.
    """
    values = list(m.row_values())
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        mask = 1 << col
        pivot_row = next((i for i in range(r, len(values)) if values[i] & mask), None)
        if pivot_row is None:
            continue
        values[r], values[pivot_row] = values[pivot_row], values[r]
        for i in range(len(values)):
            if i != r and values[i] & mask:
                values[i] ^= values[r]
        pivots.append(col)
        r += 1
        if r == len(values):
            break
    return RrefResult(BitMatrix.from_row_values(values, m.cols), r, tuple(pivots))


def rank(m: BitMatrix) -> int:
    return rref(m).rank


def is_self_orthogonal(g: BitMatrix) -> bool:
    rows = g.rows
    return all(
        rows[i].dot(rows[j]) == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_self_dual(g: BitMatrix) -> bool:
    """True iff the row span of ``g`` is a self-dual code.

    Raises:
        OddLength: the length is odd, so no self-dual code exists.
    """
    if g.cols % 2:
        raise OddLength(f"self-dual codes need even length, got {g.cols}")
    return is_self_orthogonal(g) and rank(g) == g.cols // 2


def is_doubly_even(g: BitMatrix) -> bool:
    """True iff every codeword weight is divisible by four.

    For a self-orthogonal span it suffices to check the generators.

    Raises:
        NotSelfOrthogonal: the rows are not pairwise orthogonal.
    """
    if not is_self_orthogonal(g):
        raise NotSelfOrthogonal("doubly-even test needs a self-orthogonal generator")
    return all(r.weight % 4 == 0 for r in g.rows)


def permute_columns(m: BitMatrix, perm: Sequence[int]) -> BitMatrix:
    """Column j of the result is column perm[j] of the input."""
    if sorted(perm) != list(range(m.cols)):
        raise ValueError("perm must be a permutation of the column indices")
    values = []
    for r in m.rows:
        v = 0
        for j, src in enumerate(perm):
            v |= ((r.value >> src) & 1) << j
        values.append(v)
    return BitMatrix.from_row_values(values, m.cols)


def standard_form(g: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Column-permute the RREF of ``g`` into ``[I_k | A]``.

    Returns the standard-form matrix together with the applied column
    permutation (entry j names the source column of new column j).

    Raises:
        RankDeficient: the rows of ``g`` are linearly dependent.
    """
    res = rref(g)
    if res.rank < g.nrows:
        raise RankDeficient(f"rank {res.rank} < {g.nrows} rows")
    pivot_set = set(res.pivot_cols)
    perm = tuple(res.pivot_cols) + tuple(
        c for c in range(g.cols) if c not in pivot_set
    )
    return permute_columns(res.reduced, perm), perm
