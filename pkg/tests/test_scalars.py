"""Coefficient-field arithmetic: exactness, canonical text, field axioms."""

import random
from fractions import Fraction

import pytest

from charclasses.scalars import (
    PrimeScalar,
    format_rational,
    is_prime,
    parse_rational,
    scalar_from_int,
    scalar_one,
    scalar_zero,
)


def test_parse_rational_accepts_integer_and_ratio_forms():
    assert parse_rational("14/45") == Fraction(14, 45)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational("+7/2") == Fraction(7, 2)
    assert parse_rational(" 5/10 ") == Fraction(1, 2)
    assert parse_rational("0") == 0


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "1/2/3", "one", "1.0", "-/3", "2/-3"])
def test_parse_rational_rejects_non_ratio_text(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_rational_always_carries_denominator():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-14, 45)) == "-14/45"
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(124065, 9271)) == "124065/9271"


def test_rational_round_trip_on_random_values():
    rng = random.Random(7)
    for _ in range(500):
        q = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert parse_rational(format_rational(q)) == q


def test_frozen_rational_products():
    # hand-reduced: 919/5110 * 14175/381 = 919*4725/(5110*127); the shared
    # factor is 35, leaving 124065/18542
    assert Fraction(919, 5110) * Fraction(14175, 381) == Fraction(124065, 18542)
    assert Fraction(7, 45) - Fraction(1, 45) * 9 == Fraction(-2, 45)
    assert Fraction(14, 45) == Fraction(28, 90)


def test_is_prime_small_values():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(999983)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(999981)


def test_prime_scalar_construction_validates_modulus():
    assert PrimeScalar(9, 7).value == 2
    assert PrimeScalar(-1, 5).value == 4
    with pytest.raises(ValueError):
        PrimeScalar(1, 6)
    with pytest.raises(ValueError):
        PrimeScalar(1, 1)
    with pytest.raises(ValueError):
        PrimeScalar(1, 999981)


def test_prime_scalar_text_form():
    assert str(PrimeScalar(9, 7)) == "2 mod 7"
    assert str(PrimeScalar(0, 2)) == "0 mod 2"


def test_prime_scalar_rejects_mixing():
    a = PrimeScalar(3, 7)
    with pytest.raises(ValueError):
        a + PrimeScalar(3, 11)
    with pytest.raises(TypeError):
        a + Fraction(1, 2)
    with pytest.raises(TypeError):
        a * 0.5


def test_prime_scalar_division():
    a = PrimeScalar(3, 7)
    b = PrimeScalar(5, 7)
    assert (a / b) * b == a
    with pytest.raises(ZeroDivisionError):
        a / PrimeScalar(0, 7)
    with pytest.raises(ZeroDivisionError):
        1 / PrimeScalar(7, 7)


def test_prime_scalar_int_operands_coerce():
    a = PrimeScalar(3, 7)
    assert 2 + a == PrimeScalar(5, 7)
    assert 2 - a == PrimeScalar(6, 7)
    assert a * 10 == PrimeScalar(2, 7)
    assert 1 / a == PrimeScalar(5, 7)


@pytest.mark.parametrize("modulus", [2, 7, 999983])
def test_field_axioms_random_triples(modulus):
    rng = random.Random(modulus)
    zero = PrimeScalar(0, modulus)
    one = PrimeScalar(1, modulus)
    for _ in range(2000):
        a = PrimeScalar(rng.randrange(modulus), modulus)
        b = PrimeScalar(rng.randrange(modulus), modulus)
        c = PrimeScalar(rng.randrange(modulus), modulus)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if b != zero:
            assert (a / b) * b == a


def test_scalar_factories():
    assert scalar_zero(0) == Fraction(0)
    assert scalar_one(0) == Fraction(1)
    assert scalar_from_int(-4, 0) == Fraction(-4)
    assert scalar_zero(5) == PrimeScalar(0, 5)
    assert scalar_one(5) == PrimeScalar(1, 5)
    assert scalar_from_int(12, 5) == PrimeScalar(2, 5)
