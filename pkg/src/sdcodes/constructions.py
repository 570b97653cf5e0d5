"""Generator constructions for self-dual codes from circulant blocks.

All constructions produce records whose ring-level generator satisfies
G G^T = 0 and whose binary image under the Gray map is self-dual; both
facts are checked before a record is returned.  Signs from the defining
identities vanish in characteristic 2 (-M == M throughout).
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, replace

from .bits import BitMatrix, is_self_dual
from .circulant import CirculantKind, CirculantSpec, RingMatrix, backdiagonal, build
from .errors import (
    AlphabetMismatch,
    BadBorder,
    BadC,
    BadX,
    CodesError,
    ConditionFailed,
    EvenN,
    LengthMismatch,
    NonUnitLambda,
    RowSumMismatch,
)
from .rings import (
    Alphabet,
    RingElement,
    RingVector,
    binary_generator_matrix,
    from_bit_vector,
    one,
    phi_u_span,
    PHI_U_DEFAULT,
)
from .weightdist import (
    CodeAnalysis,
    WeightProfile,
    classify,
    weight_distribution,
)

FOUR_CIRCULANT = "four-circulant"
MODIFIED_FOUR_CIRCULANT = "modified-four-circulant"
BORDERED_FOUR_CIRCULANT = "bordered-four-circulant"
EXTENSION = "extension"
GRAY_PHI1 = "gray-phi1"
GRAY_PHI2 = "gray-phi2"
PHI_U = "phi-u"
PHI_U_ALT = "phi-u-alt"


class RowSumVerdict(enum.Enum):
    BOTH_UNITS = "both-units"
    BOTH_NON_UNITS = "both-non-units"
    MIXED = "mixed"


@dataclass(frozen=True)
class RowSumClass:
    s_a: RingElement
    s_b: RingElement
    verdict: RowSumVerdict


def rowsum_class(r_a: RingVector, r_b: RingVector) -> RowSumClass:
    """Coordinate sums of the two defining rows and their unit pattern."""
    if r_a.alphabet is not r_b.alphabet:
        raise AlphabetMismatch("rows live over different alphabets")
    s_a = r_a.sum()
    s_b = r_b.sum()
    if s_a.is_unit and s_b.is_unit:
        verdict = RowSumVerdict.BOTH_UNITS
    elif not s_a.is_unit and not s_b.is_unit:
        verdict = RowSumVerdict.BOTH_NON_UNITS
    else:
        verdict = RowSumVerdict.MIXED
    return RowSumClass(s_a, s_b, verdict)


@dataclass(frozen=True, kw_only=True)
class CodeRecord:
    """A constructed generator plus the provenance that rebuilds it."""

    alphabet: Alphabet
    construction: str
    generator: RingMatrix
    lam: RingElement | None = None
    r_a: RingVector | None = None
    r_b: RingVector | None = None
    x: RingElement | None = None
    y: RingElement | None = None
    ext_x: RingVector | None = None
    ext_c: RingElement | None = None
    parent_id: str | None = None
    seed: int | None = None
    timestamp: str | None = None
    analysis: CodeAnalysis | None = None

    @property
    def ring_length(self) -> int:
        return self.generator.ncols

    @property
    def record_id(self) -> str:
        """Digest of the construction parameters; stable across runs."""
        key = repr(
            (
                self.construction,
                self.alphabet.value,
                None if self.lam is None else self.lam.value,
                None if self.r_a is None else self.r_a.values,
                None if self.r_b is None else self.r_b.values,
                None if self.x is None else self.x.value,
                None if self.y is None else self.y.value,
                None if self.ext_x is None else self.ext_x.values,
                None if self.ext_c is None else self.ext_c.value,
                self.parent_id,
            )
        )
        return hashlib.sha256(key.encode()).hexdigest()[:12]


def binary_generator(record: CodeRecord) -> BitMatrix:
    """Full-rank generator of the record's binary image."""
    return binary_generator_matrix(record.generator.row_vectors())


def _validate(record: CodeRecord) -> CodeRecord:
    g = record.generator
    if not (g @ g.transpose()).is_zero:
        raise CodesError("internal: generator is not self-orthogonal over the ring")
    if not is_self_dual(binary_generator(record)):
        raise CodesError("internal: binary image is not self-dual")
    return record


def _check_pair(r_a: RingVector, r_b: RingVector) -> Alphabet:
    if r_a.alphabet is not r_b.alphabet:
        raise AlphabetMismatch("defining rows live over different alphabets")
    if len(r_a) != len(r_b):
        raise LengthMismatch("defining rows have different lengths")
    return r_a.alphabet


def _two_block_generator(a: RingMatrix, b: RingMatrix, swapped_pair) -> RingMatrix:
    """[I | M] where the right block stacks (A B) over the given lower pair."""
    n = a.nrows
    k = 2 * n
    rows = []
    for i in range(n):
        rows.append(_unit_row(a.alphabet, k, i) + a.rows[i] + b.rows[i])
    lower_left, lower_right = swapped_pair
    for i in range(n):
        rows.append(
            _unit_row(a.alphabet, k, n + i) + lower_left.rows[i] + lower_right.rows[i]
        )
    return RingMatrix(a.alphabet, tuple(rows))


def _unit_row(alphabet: Alphabet, k: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(k))


def _reverse_block(alphabet: Alphabet, lam: RingElement, r_b: RingVector) -> RingMatrix:
    """circ_lam(r_b) @ D: the lambda-reverse-circulant named by a circulant row.

    Tabulated defining rows name the circulant factor, not the first row of
    the reflected block itself, so the column order is flipped here.
    """
    circ = build(CirculantSpec(alphabet, lam, r_b, CirculantKind.CIRCULANT))
    return circ @ backdiagonal(alphabet, len(r_b))


def four_circulant_classic(
    r_a: RingVector,
    r_b: RingVector,
    *,
    seed: int | None = None,
    timestamp: str | None = None,
) -> CodeRecord:
    """[I | A B / B^T A^T] with both blocks plain circulant.

    Requires A A^T + B B^T = I (equal to -I in characteristic 2).
    """
    alphabet = _check_pair(r_a, r_b)
    lam = one(alphabet)
    a = build(CirculantSpec(alphabet, lam, r_a, CirculantKind.CIRCULANT))
    b = build(CirculantSpec(alphabet, lam, r_b, CirculantKind.CIRCULANT))
    n = len(r_a)
    if a @ a.transpose() + b @ b.transpose() != RingMatrix.identity(alphabet, n):
        raise ConditionFailed("A A^T + B B^T != I")
    generator = _two_block_generator(a, b, (b.transpose(), a.transpose()))
    return _validate(
        CodeRecord(
            alphabet=alphabet,
            construction=FOUR_CIRCULANT,
            generator=generator,
            r_a=r_a,
            r_b=r_b,
            seed=seed,
            timestamp=timestamp,
        )
    )


def modified_four_circulant(
    r_a: RingVector,
    r_b: RingVector,
    lam: RingElement,
    *,
    seed: int | None = None,
    timestamp: str | None = None,
) -> CodeRecord:
    """[I | A B / B A] with A lambda-circulant and B lambda-reverse-circulant.

    B is circ_lam(r_b) reflected through the backdiagonal.  Requires
    A A^T + B B^T = I; the lower pair (B A) needs no transposes because
    A B^T is symmetric for these block types.
    """
    alphabet = _check_pair(r_a, r_b)
    if lam.alphabet is not alphabet:
        raise AlphabetMismatch("twist constant alphabet differs from row alphabet")
    if not lam.is_unit:
        raise NonUnitLambda("twist constant must be a unit")
    a = build(CirculantSpec(alphabet, lam, r_a, CirculantKind.CIRCULANT))
    b = _reverse_block(alphabet, lam, r_b)
    n = len(r_a)
    if a @ a.transpose() + b @ b.transpose() != RingMatrix.identity(alphabet, n):
        raise ConditionFailed("A A^T + B B^T != I")
    generator = _two_block_generator(a, b, (b, a))
    return _validate(
        CodeRecord(
            alphabet=alphabet,
            construction=MODIFIED_FOUR_CIRCULANT,
            generator=generator,
            lam=lam,
            r_a=r_a,
            r_b=r_b,
            seed=seed,
            timestamp=timestamp,
        )
    )


def bordered_four_circulant(
    r_a: RingVector,
    r_b: RingVector,
    x: RingElement,
    y: RingElement,
    *,
    seed: int | None = None,
    timestamp: str | None = None,
) -> CodeRecord:
    """Bordered two-block generator of length 4n + 4 for odd n.

    A is circulant and B the backdiagonal reflection of circ(r_b), both
    untwisted.  Requires equal unit row sums S, the border pair (x unit,
    y non-unit) and A A^T + B B^T = I + J.  The border scalars are z = xS
    and t = yS.
    """
    alphabet = _check_pair(r_a, r_b)
    n = len(r_a)
    if n % 2 == 0:
        raise EvenN("bordered construction needs odd block order")
    if x.alphabet is not alphabet or y.alphabet is not alphabet:
        raise AlphabetMismatch("border entries live over a different alphabet")
    sums = rowsum_class(r_a, r_b)
    if sums.s_a != sums.s_b or not sums.s_a.is_unit:
        raise RowSumMismatch("row sums must agree and be a unit")
    if not x.is_unit or y.is_unit:
        raise BadBorder("border needs x a unit and y a non-unit")
    lam = one(alphabet)
    a = build(CirculantSpec(alphabet, lam, r_a, CirculantKind.CIRCULANT))
    b = _reverse_block(alphabet, lam, r_b)
    target = RingMatrix.identity(alphabet, n) + RingMatrix.all_ones(alphabet, n)
    if a @ a.transpose() + b @ b.transpose() != target:
        raise ConditionFailed("A A^T + B B^T != I + J")
    s = sums.s_a
    z = (x * s).value
    t = (y * s).value
    k = 2 * n + 2
    right_rows = [
        (1, 1) + (x.value,) * n + (y.value,) * n,
        (1, 1) + (y.value,) * n + (x.value,) * n,
    ]
    for i in range(n):
        right_rows.append((z, t) + a.rows[i] + b.rows[i])
    for i in range(n):
        right_rows.append((t, z) + b.rows[i] + a.rows[i])
    rows = tuple(
        _unit_row(alphabet, k, i) + right_rows[i] for i in range(k)
    )
    return _validate(
        CodeRecord(
            alphabet=alphabet,
            construction=BORDERED_FOUR_CIRCULANT,
            generator=RingMatrix(alphabet, rows),
            r_a=r_a,
            r_b=r_b,
            x=x,
            y=y,
            seed=seed,
            timestamp=timestamp,
        )
    )


def extend(
    parent: CodeRecord,
    ext_x: RingVector,
    ext_c: RingElement,
    *,
    seed: int | None = None,
    timestamp: str | None = None,
) -> CodeRecord:
    """Lengthen a self-dual code by two coordinates.

    The new generator stacks (1, 0, X) over rows (y_i, c*y_i, r_i) with
    y_i = <r_i, X>.  Requires c a unit with c^2 = 1 and <X, X> = 1.
    """
    alphabet = parent.alphabet
    if ext_x.alphabet is not alphabet or ext_c.alphabet is not alphabet:
        raise AlphabetMismatch("extension data live over a different alphabet")
    if len(ext_x) != parent.ring_length:
        raise LengthMismatch("extension vector length differs from code length")
    if not ext_c.is_unit or (ext_c * ext_c) != one(alphabet):
        raise BadC("extension constant must be a unit squaring to one")
    if ext_x.inner(ext_x) != one(alphabet):
        raise BadX("extension vector must have self inner product one")
    rows = [(1, 0) + ext_x.values]
    for r in parent.generator.row_vectors():
        y_i = r.inner(ext_x)
        rows.append((y_i.value, (ext_c * y_i).value) + r.values)
    return _validate(
        CodeRecord(
            alphabet=alphabet,
            construction=EXTENSION,
            generator=RingMatrix(alphabet, tuple(rows)),
            ext_x=ext_x,
            ext_c=ext_c,
            parent_id=parent.record_id,
            seed=seed,
            timestamp=timestamp,
        )
    )


def gray_image_record(
    parent: CodeRecord, *, timestamp: str | None = None
) -> CodeRecord:
    """Binary record generated by the Gray image of a ring-level record."""
    if parent.alphabet is Alphabet.F2:
        raise AlphabetMismatch("parent is already binary")
    construction = GRAY_PHI1 if parent.alphabet is Alphabet.R1 else GRAY_PHI2
    bits_g = binary_generator(parent)
    generator = RingMatrix.from_row_vectors(
        [from_bit_vector(r) for r in bits_g.rows]
    )
    return _validate(
        CodeRecord(
            alphabet=Alphabet.F2,
            construction=construction,
            generator=generator,
            parent_id=parent.record_id,
            timestamp=timestamp,
        )
    )


def phi_u_record(
    parent: CodeRecord,
    decomposition: str | None = None,
    *,
    timestamp: str | None = None,
) -> CodeRecord:
    """Record over F2+uF2 generated by the phi_u projection of an R2 record."""
    if parent.alphabet is not Alphabet.R2:
        raise AlphabetMismatch("phi_u projection needs a parent over the 16-element ring")
    d = PHI_U_DEFAULT if decomposition is None else decomposition
    rows = phi_u_span(parent.generator.row_vectors(), d)
    construction = PHI_U if d == PHI_U_DEFAULT else PHI_U_ALT
    return _validate(
        CodeRecord(
            alphabet=Alphabet.R1,
            construction=construction,
            generator=RingMatrix.from_row_vectors(rows),
            parent_id=parent.record_id,
            timestamp=timestamp,
        )
    )


def analyze_record(
    record: CodeRecord,
    *,
    w_max: int | None = None,
    workers: int = 1,
    chunk_bits: int | None = None,
) -> tuple[CodeRecord, WeightProfile]:
    """Enumerate the binary image and attach parameters and classification."""
    g = binary_generator(record)
    profile = weight_distribution(g, w_max, workers=workers, chunk_bits=chunk_bits)
    d = profile.min_nonzero()
    family = beta = gamma = None
    if profile.n in (64, 66, 68) and profile.exact_through(14):
        cls = classify(profile)
        family, beta, gamma = cls.family, cls.beta, cls.gamma
    analysis = CodeAnalysis(n=g.cols, k=g.nrows, d=d, family=family, beta=beta, gamma=gamma)
    return replace(record, analysis=analysis), profile
