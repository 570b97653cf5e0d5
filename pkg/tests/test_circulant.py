"""Algebra of twisted circulant and reverse-circulant matrices."""

import random

import pytest

from sdcodes.circulant import (
    CirculantKind,
    CirculantSpec,
    RingMatrix,
    backdiagonal,
    build,
    is_lambda_circulant,
    is_lambda_reverse_circulant,
    rho_lambda,
    sigma_lambda,
)
from sdcodes.errors import AlphabetMismatch, NonUnitLambda
from sdcodes.rings import MUL, Alphabet, RingElement, RingVector, one, units

CASES = 520

ALPHABETS = (Alphabet.F2, Alphabet.R1, Alphabet.R2)


def random_row(rng, alphabet, n):
    return RingVector(alphabet, tuple(rng.randrange(alphabet.size) for _ in range(n)))


def random_unit(rng, alphabet):
    pool = units(alphabet)
    return pool[rng.randrange(len(pool))]


def circ(alphabet, lam, row):
    return build(CirculantSpec(alphabet, lam, row, CirculantKind.CIRCULANT))


def revc(alphabet, lam, row):
    return build(CirculantSpec(alphabet, lam, row, CirculantKind.REVERSE_CIRCULANT))


def test_sigma_rho_shapes():
    r2 = Alphabet.R2
    lam = RingElement(r2, 5)  # 1 + v
    row = RingVector(r2, (1, 2, 4))  # (1, u, v)
    assert sigma_lambda(row, lam).values == (4, 1, 2)  # (1+v)*v = v
    assert rho_lambda(row, lam).values == (2, 4, 5)  # (1+v)*1 = 1+v


def test_sigma_rho_reject_bad_twist():
    r1 = Alphabet.R1
    row = RingVector(r1, (1, 0))
    with pytest.raises(NonUnitLambda):
        sigma_lambda(row, RingElement(r1, 2))
    with pytest.raises(AlphabetMismatch):
        rho_lambda(row, RingElement(Alphabet.R2, 1))


def test_sigma_rho_mutually_inverse():
    rng = random.Random(211)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        row = random_row(rng, alphabet, n)
        lam = random_unit(rng, alphabet)
        inv = lam.inverse()
        assert sigma_lambda(rho_lambda(row, lam), inv).values == row.values
        assert rho_lambda(sigma_lambda(row, inv), lam).values == row.values


def test_circulants_commute_and_stay_circulant():
    rng = random.Random(223)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        lam = random_unit(rng, alphabet)
        a = circ(alphabet, lam, random_row(rng, alphabet, n))
        b = circ(alphabet, lam, random_row(rng, alphabet, n))
        ab = a @ b
        assert ab.rows == (b @ a).rows
        assert is_lambda_circulant(ab, lam)


def test_reverse_circulants_symmetric():
    rng = random.Random(227)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        lam = random_unit(rng, alphabet)
        b = revc(alphabet, lam, random_row(rng, alphabet, n))
        assert b.rows == b.transpose().rows
        assert is_lambda_reverse_circulant(b, lam)


def test_backdiagonal_transfer():
    # AD is lambda-reverse-circulant, DA is (lambda^-1)-reverse-circulant
    rng = random.Random(229)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        lam = random_unit(rng, alphabet)
        a = circ(alphabet, lam, random_row(rng, alphabet, n))
        d = backdiagonal(alphabet, n)
        assert is_lambda_reverse_circulant(a @ d, lam)
        assert is_lambda_reverse_circulant(d @ a, lam.inverse())


def test_backdiagonal_involution():
    for alphabet in ALPHABETS:
        for n in range(1, 9):
            d = backdiagonal(alphabet, n)
            assert (d @ d).rows == RingMatrix.identity(alphabet, n).rows


def test_reverse_times_reverse_is_circulant():
    rng = random.Random(233)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        lam = random_unit(rng, alphabet)
        b1 = revc(alphabet, lam, random_row(rng, alphabet, n))
        b2 = revc(alphabet, lam, random_row(rng, alphabet, n))
        assert is_lambda_circulant(b1 @ b2, lam)


def test_mixed_products_are_reverse_circulant():
    # AB always; BA as well because every unit here squares to one
    rng = random.Random(239)
    for _ in range(CASES):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(1, 9)
        lam = random_unit(rng, alphabet)
        a = circ(alphabet, lam, random_row(rng, alphabet, n))
        b = revc(alphabet, lam, random_row(rng, alphabet, n))
        assert (lam * lam).value == 1
        assert is_lambda_reverse_circulant(a @ b, lam)
        assert is_lambda_reverse_circulant(b @ a, lam)


def scaled(m, s):
    return RingMatrix(
        m.alphabet, tuple(tuple(MUL[s][v] for v in row) for row in m.rows)
    )


def test_polynomial_representation():
    # circulant with first row r equals sum_i r_i T_lambda^i and T^n = lam I
    rng = random.Random(241)
    for _ in range(100):
        alphabet = rng.choice(ALPHABETS)
        n = rng.randrange(2, 8)
        lam = random_unit(rng, alphabet)
        shift_row = RingVector(alphabet, tuple(1 if i == 1 else 0 for i in range(n)))
        t = circ(alphabet, lam, shift_row)
        row = random_row(rng, alphabet, n)
        power = RingMatrix.identity(alphabet, n)
        acc = scaled(power, 0)
        for i in range(n):
            acc = acc + scaled(power, row.values[i])
            power = power @ t
        assert acc.rows == circ(alphabet, lam, row).rows
        assert power.rows == scaled(RingMatrix.identity(alphabet, n), lam.value).rows


def test_build_validates_inputs():
    r1 = Alphabet.R1
    with pytest.raises(NonUnitLambda):
        CirculantSpec(r1, RingElement(r1, 2), RingVector(r1, (1,)), CirculantKind.CIRCULANT)
    with pytest.raises(AlphabetMismatch):
        CirculantSpec(
            r1, RingElement(Alphabet.F2, 1), RingVector(r1, (1,)), CirculantKind.CIRCULANT
        )


def test_known_untwisted_circulant():
    f2 = Alphabet.F2
    m = circ(f2, one(f2), RingVector(f2, (1, 1, 0)))
    assert m.rows == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    r = revc(f2, one(f2), RingVector(f2, (1, 1, 0)))
    assert r.rows == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
