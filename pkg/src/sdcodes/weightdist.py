"""Weight distributions, extremality and enumerator-family classification.

Enumeration is exact: all 2^k codewords are visited through the
Gray-code engine after the generator is brought to standard form.
Classification matches the counts at weights 12 and 14 against the
known two-parameter enumerator families at lengths 64, 66 and 68 and
extracts the parameters beta (and gamma at length 68).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _engine
from .bits import BitMatrix, standard_form
from .errors import (
    DimensionTooLarge,
    MissingWeights,
    UnsupportedLength,
)

# Full enumeration is exact but exponential; 2^40 steps is the ceiling.
MAX_DIMENSION = 40


@dataclass(frozen=True)
class WeightProfile:
    """Histogram of codeword weights, complete or truncated at ``w_max``."""

    n: int
    histogram: dict[int, int]
    w_max: int | None = None

    @property
    def complete(self) -> bool:
        return self.w_max is None

    def count(self, w: int) -> int:
        return self.histogram.get(w, 0)

    def total(self) -> int:
        return sum(self.histogram.values())

    def min_nonzero(self) -> int | None:
        weights = [w for w, c in self.histogram.items() if w > 0 and c > 0]
        return min(weights) if weights else None

    def exact_through(self, w: int) -> bool:
        return self.complete or self.w_max >= w

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable identity used for deduplication."""
        return tuple(sorted((w, c) for w, c in self.histogram.items() if c))


def weight_distribution(
    g: BitMatrix,
    w_max: int | None = None,
    *,
    workers: int = 1,
    chunk_bits: int | None = None,
    abort_below: int | None = None,
) -> WeightProfile | None:
    """Exact weight distribution of the row span of ``g``.

    ``w_max`` truncates the returned histogram only; every codeword is
    still visited, so the retained counts are exact.  With
    ``abort_below`` set, enumeration stops as soon as a nonzero word of
    smaller weight appears and None is returned.

    Raises:
        DimensionTooLarge: more than 40 rows.
        RankDeficient: the rows are linearly dependent.
    """
    if g.nrows > MAX_DIMENSION:
        raise DimensionTooLarge(f"{g.nrows} rows exceed the 2^{MAX_DIMENSION} ceiling")
    std, _ = standard_form(g)
    hist = _engine.gray_histogram(
        std.packed(),
        g.cols,
        workers=workers,
        chunk_bits=chunk_bits,
        abort_below=abort_below or 0,
    )
    if hist is None:
        return None
    counts = {w: int(c) for w, c in enumerate(hist) if c}
    if w_max is not None and w_max < g.cols:
        counts = {w: c for w, c in counts.items() if w <= w_max}
        return WeightProfile(g.cols, counts, w_max)
    return WeightProfile(g.cols, counts)


def minimum_distance(g: BitMatrix, *, workers: int = 1) -> int:
    profile = weight_distribution(g, workers=workers)
    d = profile.min_nonzero()
    if d is None:
        raise ValueError("zero code has no minimum distance")
    return d


def rains_bound(n: int) -> int:
    """Largest minimum distance a self-dual code of even length n can have."""
    bound = 4 * (n // 24) + 4
    if n % 24 == 22:
        bound += 2
    return bound


def is_extremal(n: int, d: int) -> bool:
    return d == rains_bound(n)


class Family(enum.Enum):
    W64_1 = "W64_1"
    W64_2 = "W64_2"
    W66_1 = "W66_1"
    W66_2 = "W66_2"
    W66_3 = "W66_3"
    W68_1 = "W68_1"
    W68_2 = "W68_2"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EnumeratorClass:
    family: Family
    beta: int | None = None
    gamma: int | None = None
    ambiguous: bool = False


_UNKNOWN = EnumeratorClass(Family.UNKNOWN)


def _classify64(a12: int, a14: int) -> EnumeratorClass:
    rem = a12 - 1312
    if rem % 16:
        return _UNKNOWN
    beta = rem // 16
    if a14 == 22016 - 64 * beta and 14 <= beta <= 284:
        return EnumeratorClass(Family.W64_1, beta)
    if a14 == 23040 - 64 * beta and 0 <= beta <= 277:
        return EnumeratorClass(Family.W64_2, beta)
    return _UNKNOWN


def _classify66(a12: int, a14: int) -> EnumeratorClass:
    if a12 == 1690 and a14 == 7990:
        return EnumeratorClass(Family.W66_2)
    rem = a12 - 858
    if rem % 8:
        return _UNKNOWN
    beta = rem // 8
    if a14 == 18678 - 24 * beta and 0 <= beta <= 778:
        return EnumeratorClass(Family.W66_1, beta)
    if a14 == 18166 - 24 * beta and 14 <= beta <= 756:
        return EnumeratorClass(Family.W66_3, beta)
    return _UNKNOWN


def _classify68(a12: int, a14: int) -> EnumeratorClass:
    rem = a12 - 442
    if rem % 4:
        return _UNKNOWN
    beta = rem // 4
    if beta < 0:
        return _UNKNOWN
    if a14 == 10864 - 8 * beta:
        # The second family with gamma = 16 produces the same counts, so
        # the choice cannot be decided from the distribution alone.
        return EnumeratorClass(Family.W68_1, beta, ambiguous=True)
    gamma, residue = divmod(14960 - 8 * beta - a14, 256)
    if residue or gamma < 0:
        return _UNKNOWN
    return EnumeratorClass(Family.W68_2, beta, gamma)


def classify(profile: WeightProfile) -> EnumeratorClass:
    """Match a profile against the enumerator families of its length.

    Raises:
        UnsupportedLength: no catalog exists for this length.
        MissingWeights: the histogram is truncated before weight 14.
    """
    n = profile.n
    if n not in (64, 66, 68):
        raise UnsupportedLength(f"no enumerator family catalog for length {n}")
    if not profile.exact_through(14):
        raise MissingWeights("classification needs exact counts through weight 14")
    if any(c and 0 < w < 12 for w, c in profile.histogram.items()):
        return _UNKNOWN
    a12 = profile.count(12)
    a14 = profile.count(14)
    if n == 64:
        return _classify64(a12, a14)
    if n == 66:
        return _classify66(a12, a14)
    return _classify68(a12, a14)


@dataclass(frozen=True)
class CodeAnalysis:
    """Binary parameters and classification attached to a code record."""

    n: int
    k: int
    d: int | None
    family: Family | None = None
    beta: int | None = None
    gamma: int | None = None
