"""Arithmetic over F2 and the characteristic-2 rings F2+uF2 and F2+uF2+vF2+uvF2.

Elements are packed into small integers: bit 0 holds the constant
coefficient, bit 1 the u coefficient, bit 2 the v coefficient and bit 3
the uv coefficient.  Under the ordered basis (uv, v, u, 1) this packing
coincides with the hexadecimal digit used in row text, e.g. value 5 is
1 + v.  Both indeterminates square to zero and commute, so addition is
XOR and an element is a unit exactly when its constant coefficient is 1.
Every unit squares to 1, hence units are their own inverses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bits import BitMatrix, BitVector, rref
from .errors import AlphabetMismatch, LengthMismatch, NonUnitLambda


class Alphabet(enum.Enum):
    F2 = "f2"
    R1 = "r1"
    R2 = "r2"

    @property
    def bits(self) -> int:
        return _ALPHABET_BITS[self]

    @property
    def size(self) -> int:
        return 1 << self.bits

    @property
    def mask(self) -> int:
        return self.size - 1


_ALPHABET_BITS = {Alphabet.F2: 1, Alphabet.R1: 2, Alphabet.R2: 4}


def _mul_values(x: int, y: int) -> int:
    a1, b1, c1, d1 = x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1
    a2, b2, c2, d2 = y & 1, (y >> 1) & 1, (y >> 2) & 1, (y >> 3) & 1
    a = a1 & a2
    b = (a1 & b2) ^ (b1 & a2)
    c = (a1 & c2) ^ (c1 & a2)
    d = (a1 & d2) ^ (b1 & c2) ^ (c1 & b2) ^ (d1 & a2)
    return a | (b << 1) | (c << 2) | (d << 3)


# u^2 = v^2 = 0 and uv = vu close R1 and R2 under this table; F2 uses the corner.
MUL = tuple(tuple(_mul_values(x, y) for y in range(16)) for x in range(16))


@dataclass(frozen=True, slots=True)
class RingElement:
    alphabet: Alphabet
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value <= self.alphabet.mask:
            raise ValueError(
                f"value {self.value} out of range for alphabet {self.alphabet.value}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot add elements of different alphabets")
        return RingElement(self.alphabet, self.value ^ other.value)

    def __mul__(self, other: "RingElement") -> "RingElement":
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot multiply elements of different alphabets")
        return RingElement(self.alphabet, MUL[self.value][other.value])

    @property
    def is_unit(self) -> bool:
        return bool(self.value & 1)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def inverse(self) -> "RingElement":
        """Units square to 1 in these rings, so a unit is its own inverse."""
        if not self.is_unit:
            raise NonUnitLambda(f"element {self.value} is not a unit")
        return self


def zero(alphabet: Alphabet) -> RingElement:
    return RingElement(alphabet, 0)


def one(alphabet: Alphabet) -> RingElement:
    return RingElement(alphabet, 1)


def elements(alphabet: Alphabet) -> tuple[RingElement, ...]:
    return tuple(RingElement(alphabet, v) for v in range(alphabet.size))


def units(alphabet: Alphabet) -> tuple[RingElement, ...]:
    return tuple(e for e in elements(alphabet) if e.is_unit)


def non_units(alphabet: Alphabet) -> tuple[RingElement, ...]:
    return tuple(e for e in elements(alphabet) if not e.is_unit)


def basis_scalars(alphabet: Alphabet) -> tuple[RingElement, ...]:
    """Module generators of the ring over F2, the unit first."""
    if alphabet is Alphabet.F2:
        values: tuple[int, ...] = (1,)
    elif alphabet is Alphabet.R1:
        values = (1, 2)
    else:
        values = (1, 2, 4, 8)
    return tuple(RingElement(alphabet, v) for v in values)


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def is_unit(a: RingElement) -> bool:
    return a.is_unit


@dataclass(frozen=True, slots=True)
class RingVector:
    alphabet: Alphabet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        mask = self.alphabet.mask
        for v in self.values:
            if not 0 <= v <= mask:
                raise ValueError(
                    f"value {v} out of range for alphabet {self.alphabet.value}"
                )

    @classmethod
    def from_elements(cls, elts: Sequence[RingElement]) -> "RingVector":
        if not elts:
            raise ValueError("vector needs at least one coordinate")
        alphabet = elts[0].alphabet
        for e in elts:
            if e.alphabet is not alphabet:
                raise AlphabetMismatch("mixed alphabets in vector")
        return cls(alphabet, tuple(e.value for e in elts))

    @classmethod
    def zeros(cls, alphabet: Alphabet, n: int) -> "RingVector":
        return cls(alphabet, (0,) * n)

    def __len__(self) -> int:
        return len(self.values)

    def element(self, i: int) -> RingElement:
        return RingElement(self.alphabet, self.values[i])

    def elements(self) -> tuple[RingElement, ...]:
        return tuple(RingElement(self.alphabet, v) for v in self.values)

    def __add__(self, other: "RingVector") -> "RingVector":
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot add vectors of different alphabets")
        if len(self) != len(other):
            raise LengthMismatch("cannot add vectors of different lengths")
        return RingVector(
            self.alphabet, tuple(a ^ b for a, b in zip(self.values, other.values))
        )

    def scale(self, s: RingElement) -> "RingVector":
        if s.alphabet is not self.alphabet:
            raise AlphabetMismatch("scalar alphabet differs from vector alphabet")
        row = MUL[s.value]
        return RingVector(self.alphabet, tuple(row[v] for v in self.values))

    def inner(self, other: "RingVector") -> RingElement:
        if self.alphabet is not other.alphabet:
            raise AlphabetMismatch("cannot pair vectors of different alphabets")
        if len(self) != len(other):
            raise LengthMismatch("cannot pair vectors of different lengths")
        acc = 0
        for a, b in zip(self.values, other.values):
            acc ^= MUL[a][b]
        return RingElement(self.alphabet, acc)

    def sum(self) -> RingElement:
        acc = 0
        for v in self.values:
            acc ^= v
        return RingElement(self.alphabet, acc)


def inner_product(a: RingVector, b: RingVector) -> RingElement:
    return a.inner(b)


def to_bit_vector(vec: RingVector) -> BitVector:
    if vec.alphabet is not Alphabet.F2:
        raise AlphabetMismatch("only F2 vectors convert to bit vectors directly")
    value = 0
    for i, v in enumerate(vec.values):
        value |= v << i
    return BitVector(len(vec), value)


def from_bit_vector(bv: BitVector) -> RingVector:
    return RingVector(Alphabet.F2, bv.bits())


def gray_phi1(vec: RingVector) -> BitVector:
    """Map a + ub over F2+uF2 to the binary blocks (b | a + b)."""
    if vec.alphabet is not Alphabet.R1:
        raise AlphabetMismatch("gray_phi1 expects a vector over F2+uF2")
    n = len(vec)
    value = 0
    for i, x in enumerate(vec.values):
        a = x & 1
        b = (x >> 1) & 1
        if b:
            value |= 1 << i
        if a ^ b:
            value |= 1 << (n + i)
    return BitVector(2 * n, value)


def gray_phi2(vec: RingVector) -> BitVector:
    """Map a + ub + vc + uvd to the binary blocks (d | c+d | b+d | a+b+c+d)."""
    if vec.alphabet is not Alphabet.R2:
        raise AlphabetMismatch("gray_phi2 expects a vector over F2+uF2+vF2+uvF2")
    n = len(vec)
    value = 0
    for i, x in enumerate(vec.values):
        a, b, c, d = x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1
        if d:
            value |= 1 << i
        if c ^ d:
            value |= 1 << (n + i)
        if b ^ d:
            value |= 1 << (2 * n + i)
        if a ^ b ^ c ^ d:
            value |= 1 << (3 * n + i)
    return BitVector(4 * n, value)


# Decomposition used by phi_u when none is requested.  "v" splits an element
# as x + v*y with x, y over F2+uF2; "u" splits as x + u*y over F2+vF2 and
# renames the surviving indeterminate to u.
PHI_U_DEFAULT = "v"

PHI_U_DECOMPOSITIONS = ("v", "u")


def phi_u(vec: RingVector, decomposition: str | None = None) -> RingVector:
    """Project a vector over the 16-element ring to blocks (y | x + y) over F2+uF2."""
    if vec.alphabet is not Alphabet.R2:
        raise AlphabetMismatch("phi_u expects a vector over F2+uF2+vF2+uvF2")
    d = PHI_U_DEFAULT if decomposition is None else decomposition
    if d not in PHI_U_DECOMPOSITIONS:
        raise ValueError(f"unknown decomposition {d!r}")
    xs = []
    ys = []
    for w in vec.values:
        if d == "v":
            x = w & 3
            y = (w >> 2) & 3
        else:
            x = (w & 1) | (((w >> 2) & 1) << 1)
            y = ((w >> 1) & 1) | (((w >> 3) & 1) << 1)
        xs.append(x)
        ys.append(y)
    return RingVector(Alphabet.R1, tuple(ys) + tuple(x ^ y for x, y in zip(xs, ys)))


def phi_u_split_scalar(decomposition: str | None = None) -> RingElement:
    """The indeterminate phi_u splits along; its multiples complete a span."""
    d = PHI_U_DEFAULT if decomposition is None else decomposition
    if d not in PHI_U_DECOMPOSITIONS:
        raise ValueError(f"unknown decomposition {d!r}")
    return RingElement(Alphabet.R2, 4 if d == "v" else 2)


def phi_u_span(
    rows: Sequence[RingVector], decomposition: str | None = None
) -> list[RingVector]:
    """Rows spanning the phi_u image of the span of ``rows`` over F2+uF2."""
    s = phi_u_split_scalar(decomposition)
    out = [phi_u(r, decomposition) for r in rows]
    out.extend(phi_u(r.scale(s), decomposition) for r in rows)
    return out


def binary_span(rows: Sequence[RingVector]) -> list[BitVector]:
    """Gray images of every scalar multiple needed to span the binary image."""
    if not rows:
        raise ValueError("need at least one row")
    alphabet = rows[0].alphabet
    if alphabet is Alphabet.F2:
        return [to_bit_vector(r) for r in rows]
    gray = gray_phi1 if alphabet is Alphabet.R1 else gray_phi2
    out = []
    for s in basis_scalars(alphabet):
        out.extend(gray(r.scale(s)) for r in rows)
    return out


def binary_generator_matrix(rows: Sequence[RingVector]) -> BitMatrix:
    """Full-rank generator of the binary image, in reduced echelon form."""
    span = BitMatrix.from_rows(binary_span(rows))
    res = rref(span)
    return BitMatrix.from_rows(res.reduced.rows[: res.rank])
