"""Twisted circulant and reverse-circulant matrices over the small rings.

A lambda-circulant pushes each row one step right and multiplies the
wrapped entry by lambda; a lambda-reverse-circulant pulls each row one
step left and multiplies the wrapped entry by lambda.  The two shifts
are mutually inverse once the twist is inverted, and conjugating a
circulant by the backdiagonal matrix yields a reverse-circulant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import AlphabetMismatch, LengthMismatch, NonUnitLambda
from .rings import MUL, Alphabet, RingElement, RingVector


class CirculantKind(enum.Enum):
    CIRCULANT = "circulant"
    REVERSE_CIRCULANT = "reverse-circulant"


def sigma_lambda(row: RingVector, lam: RingElement) -> RingVector:
    """Right rotation twisting the wrapped entry: (a1..an) -> (lam*an, a1..a(n-1))."""
    if lam.alphabet is not row.alphabet:
        raise AlphabetMismatch("twist constant alphabet differs from row alphabet")
    if not lam.is_unit:
        raise NonUnitLambda("twist constant must be a unit")
    v = row.values
    return RingVector(row.alphabet, (MUL[lam.value][v[-1]],) + v[:-1])


def rho_lambda(row: RingVector, lam: RingElement) -> RingVector:
    """Left rotation twisting the wrapped entry: (a1..an) -> (a2..an, lam*a1)."""
    if lam.alphabet is not row.alphabet:
        raise AlphabetMismatch("twist constant alphabet differs from row alphabet")
    if not lam.is_unit:
        raise NonUnitLambda("twist constant must be a unit")
    v = row.values
    return RingVector(row.alphabet, v[1:] + (MUL[lam.value][v[0]],))


@dataclass(frozen=True, slots=True)
class RingMatrix:
    """Immutable dense matrix with entries packed as small integers."""

    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must be non-empty")
        width = len(self.rows[0])
        mask = self.alphabet.mask
        for row in self.rows:
            if len(row) != width:
                raise ValueError("all rows must share the matrix width")
            for v in row:
                if not 0 <= v <= mask:
                    raise ValueError(f"entry {v} out of range")

    @classmethod
    def from_row_vectors(cls, rows: Sequence[RingVector]) -> "RingMatrix":
        if not rows:
            raise ValueError("matrix must be non-empty")
        alphabet = rows[0].alphabet
        for r in rows:
            if r.alphabet is not alphabet:
                raise AlphabetMismatch("mixed alphabets in matrix rows")
        return cls(alphabet, tuple(r.values for r in rows))

    @classmethod
    def identity(cls, alphabet: Alphabet, n: int) -> "RingMatrix":
        return cls(
            alphabet,
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        )

    @classmethod
    def all_ones(cls, alphabet: Alphabet, n: int) -> "RingMatrix":
        return cls(alphabet, tuple((1,) * n for _ in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row_vector(self, i: int) -> RingVector:
        return RingVector(self.alphabet, self.rows[i])

    def row_vectors(self) -> list[RingVector]:
        return [RingVector(self.alphabet, r) for r in self.rows]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            self.alphabet,
            tuple(
                tuple(self.rows[i][j] for i in range(self.nrows))
                for j in range(self.ncols)
            ),
        )

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot add matrices of different alphabets")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise LengthMismatch("cannot add matrices of different shapes")
        return RingMatrix(
            self.alphabet,
            tuple(
                tuple(a ^ b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot multiply matrices of different alphabets")
        if self.ncols != other.nrows:
            raise LengthMismatch("inner dimensions do not match")
        cols = other.ncols
        out = []
        for ra in self.rows:
            row = [0] * cols
            for k, a in enumerate(ra):
                if a == 0:
                    continue
                mul_a = MUL[a]
                rb = other.rows[k]
                for j in range(cols):
                    row[j] ^= mul_a[rb[j]]
            out.append(tuple(row))
        return RingMatrix(self.alphabet, tuple(out))

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)


@dataclass(frozen=True, slots=True)
class CirculantSpec:
    """First row, twist constant and orientation of a twisted circulant."""

    alphabet: Alphabet
    lam: RingElement
    first_row: RingVector
    kind: CirculantKind

    def __post_init__(self) -> None:
        if self.lam.alphabet is not self.alphabet:
            raise AlphabetMismatch("twist constant alphabet differs from spec alphabet")
        if self.first_row.alphabet is not self.alphabet:
            raise AlphabetMismatch("first row alphabet differs from spec alphabet")
        if not self.lam.is_unit:
            raise NonUnitLambda("twist constant must be a unit")
        if len(self.first_row) < 1:
            raise ValueError("first row must have at least one coordinate")


def build(spec: CirculantSpec) -> RingMatrix:
    """Stack the iterated shift of the first row into a square matrix."""
    shift = sigma_lambda if spec.kind is CirculantKind.CIRCULANT else rho_lambda
    rows = [spec.first_row]
    for _ in range(len(spec.first_row) - 1):
        rows.append(shift(rows[-1], spec.lam))
    return RingMatrix.from_row_vectors(rows)


def backdiagonal(alphabet: Alphabet, n: int) -> RingMatrix:
    """Ones on the antidiagonal; an involution that flips circulant orientation."""
    return RingMatrix(
        alphabet,
        tuple(tuple(1 if j == n - 1 - i else 0 for j in range(n)) for i in range(n)),
    )


def is_lambda_circulant(m: RingMatrix, lam: RingElement) -> bool:
    if not m.is_square:
        return False
    if lam.alphabet is not m.alphabet or not lam.is_unit:
        return False
    return all(
        m.row_vector(i + 1) == sigma_lambda(m.row_vector(i), lam)
        for i in range(m.nrows - 1)
    )


def is_lambda_reverse_circulant(m: RingMatrix, lam: RingElement) -> bool:
    if not m.is_square:
        return False
    if lam.alphabet is not m.alphabet or not lam.is_unit:
        return False
    return all(
        m.row_vector(i + 1) == rho_lambda(m.row_vector(i), lam)
        for i in range(m.nrows - 1)
    )
