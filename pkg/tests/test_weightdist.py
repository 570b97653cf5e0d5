"""Enumeration engine oracle checks and enumerator-family classification."""

import random

import numpy as np
import pytest

from sdcodes.bits import BitMatrix
from sdcodes.constructions import binary_generator, four_circulant_classic
from sdcodes.errors import (
    DimensionTooLarge,
    MissingWeights,
    UnsupportedLength,
)
from sdcodes.rings import Alphabet, RingVector
from sdcodes.weightdist import (
    MAX_DIMENSION,
    Family,
    WeightProfile,
    classify,
    is_extremal,
    minimum_distance,
    rains_bound,
    weight_distribution,
)


def naive_histogram(g: BitMatrix) -> dict[int, int]:
    """Enumerate all 2^k combinations with numpy popcounts."""
    rows = np.array(g.row_values(), dtype=object)
    hist: dict[int, int] = {}
    for mask in range(1 << g.nrows):
        word = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                word ^= int(rows[i])
            m >>= 1
            i += 1
        w = int(word).bit_count()
        hist[w] = hist.get(w, 0) + 1
    return hist


def random_self_dual(rng, tries=200):
    """Small random self-dual binary codes from the classic construction."""
    while True:
        n = rng.randrange(2, 9)
        f2 = Alphabet.F2
        r_a = RingVector(f2, tuple(rng.randrange(2) for _ in range(n)))
        r_b = RingVector(f2, tuple(rng.randrange(2) for _ in range(n)))
        try:
            return binary_generator(four_circulant_classic(r_a, r_b))
        except Exception:
            continue


def test_engine_matches_naive_oracle_small_corpus():
    rng = random.Random(401)
    corpus = [
        BitMatrix.from_bit_rows([[1, 0, 1, 0], [0, 1, 0, 1]]),
        BitMatrix.from_bit_rows(
            [
                [1, 1, 1, 1, 0, 0, 0, 0],
                [0, 0, 1, 1, 1, 1, 0, 0],
                [0, 0, 0, 0, 1, 1, 1, 1],
                [0, 1, 0, 1, 0, 1, 0, 1],
            ]
        ),
    ]
    corpus.extend(random_self_dual(rng) for _ in range(12))
    assert all(g.nrows <= 16 for g in corpus)
    for g in corpus:
        profile = weight_distribution(g)
        assert profile.histogram == naive_histogram(g)


def test_profiles_symmetric_and_complete():
    # every complete self-dual profile: A_w = A_{n-w} and the counts sum to 2^{n/2}
    rng = random.Random(409)
    for _ in range(12):
        g = random_self_dual(rng)
        profile = weight_distribution(g)
        assert profile.complete
        assert profile.total() == 1 << (g.cols // 2)
        for w, c in profile.histogram.items():
            assert profile.count(g.cols - w) == c


def test_chunked_runs_agree():
    rng = random.Random(419)
    g = random_self_dual(rng)
    base = weight_distribution(g)
    for chunk_bits in range(0, 5):
        again = weight_distribution(g, chunk_bits=chunk_bits)
        assert again.histogram == base.histogram
    threaded = weight_distribution(g, workers=3, chunk_bits=2)
    assert threaded.histogram == base.histogram


def test_w_max_truncates_output_only():
    rng = random.Random(421)
    g = random_self_dual(rng)
    full = weight_distribution(g)
    cut = weight_distribution(g, w_max=6)
    assert cut.w_max == 6
    assert not cut.complete
    assert cut.exact_through(6)
    assert not cut.exact_through(7)
    assert cut.histogram == {w: c for w, c in full.histogram.items() if w <= 6}


def test_abort_below_semantics():
    g = BitMatrix.from_bit_rows([[1, 0, 1, 0], [0, 1, 0, 1]])  # d = 2
    assert weight_distribution(g, abort_below=3) is None
    kept = weight_distribution(g, abort_below=2)
    assert kept is not None and kept.count(2) == 2


def test_dimension_ceiling():
    g = BitMatrix.identity(MAX_DIMENSION + 1)
    with pytest.raises(DimensionTooLarge):
        weight_distribution(g)


def test_minimum_distance():
    g = BitMatrix.from_bit_rows([[1, 0, 1, 0], [0, 1, 0, 1]])
    assert minimum_distance(g) == 2


@pytest.mark.parametrize(
    "n,bound",
    [(8, 4), (16, 4), (22, 6), (24, 8), (46, 10), (64, 12), (66, 12), (68, 12), (70, 14)],
)
def test_rains_bound(n, bound):
    assert rains_bound(n) == bound
    assert is_extremal(n, bound)
    assert not is_extremal(n, bound - 2)


def profile64(a12, a14):
    return WeightProfile(64, {0: 1, 12: a12, 14: a14}, w_max=14)


def test_classify_length64_families():
    # beta = 29 in the first family: A12 = 1312 + 16*29, A14 = 22016 - 64*29
    cls = classify(profile64(1776, 20160))
    assert cls.family is Family.W64_1 and cls.beta == 29 and not cls.ambiguous
    # beta = 0 in the second family
    cls = classify(profile64(1312, 23040))
    assert cls.family is Family.W64_2 and cls.beta == 0
    # beta = 80 in the second family
    cls = classify(profile64(1312 + 16 * 80, 23040 - 64 * 80))
    assert cls.family is Family.W64_2 and cls.beta == 80


def test_classify_length64_families_overlap():
    # A12 alone cannot separate the families; A14 must match too
    bad = classify(profile64(1312, 12345))
    assert bad.family is Family.UNKNOWN


def test_classify_length66():
    # W66_1 with beta = 7: A12 = 858 + 8*7, A14 = 18678 - 24*7
    cls = classify(WeightProfile(66, {0: 1, 12: 914, 14: 18510}, w_max=14))
    assert cls.family is Family.W66_1 and cls.beta == 7
    # W66_2 is parameter-free
    cls = classify(WeightProfile(66, {0: 1, 12: 1690, 14: 7990}, w_max=14))
    assert cls.family is Family.W66_2 and cls.beta is None
    # W66_3 with beta = 46: A12 = 858 + 8*46, A14 = 18166 - 24*46
    cls = classify(WeightProfile(66, {0: 1, 12: 1226, 14: 17062}, w_max=14))
    assert cls.family is Family.W66_3 and cls.beta == 46


def test_classify_length68():
    # W68_2 with gamma = 0, beta = 17: A12 = 442 + 4*17 = 510, A14 = 14960 - 8*17
    cls = classify(WeightProfile(68, {0: 1, 12: 510, 14: 14824}, w_max=14))
    assert cls.family is Family.W68_2 and cls.beta == 17 and cls.gamma == 0
    # W68_2 with gamma = 3, beta = 103
    a12 = 442 + 4 * 103
    a14 = 14960 - 8 * 103 - 256 * 3
    cls = classify(WeightProfile(68, {0: 1, 12: a12, 14: a14}, w_max=14))
    assert cls.family is Family.W68_2 and cls.beta == 103 and cls.gamma == 3


def test_classify_length68_w681_is_ambiguous():
    # W68_1 coincides with W68_2 at gamma = 16, so the match is flagged
    beta = 50
    a12 = 442 + 4 * beta
    a14 = 10864 - 8 * beta
    cls = classify(WeightProfile(68, {0: 1, 12: a12, 14: a14}, w_max=14))
    assert cls.family is Family.W68_1 and cls.ambiguous


def test_classify_gate_errors():
    with pytest.raises(UnsupportedLength):
        classify(WeightProfile(60, {0: 1}, w_max=14))
    with pytest.raises(MissingWeights):
        classify(WeightProfile(64, {0: 1, 12: 1312}, w_max=12))


def test_classify_rejects_low_weight_words():
    cls = classify(WeightProfile(64, {0: 1, 10: 4, 12: 1312, 14: 23040}, w_max=14))
    assert cls.family is Family.UNKNOWN
