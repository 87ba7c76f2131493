import random
import time

import pytest

from dmagic.exceptions import DomainError, NumeralParseError
from dmagic.services.lcm_engine import lcm_range_prime_power
from dmagic.services.radix import (
    Numeral,
    from_digits,
    least_significant_digit,
    numeral_from_big_endian,
    parse,
    render,
    same_last_digit,
    split_last_digit,
    to_decimal,
    to_digits,
    to_digits_dc,
)


@pytest.mark.parametrize("m, base, expected", [
    (2520, 9, "3410"),
    (0, 2, "0"),
    (100, 6, "244"),
    (101, 5, "401"),
    (64, 8, "100"),
    (126, 8, "176"),
])
def test_to_digits_examples(m, base, expected):
    assert render(to_digits(m, base)) == expected


def test_to_digits_is_little_endian():
    numeral = to_digits(2520, 9)
    assert numeral.digits == (0, 1, 4, 3)
    assert numeral.digits[0] == 2520 % 9
    assert to_digits(0, 2).digits == (0,)


@pytest.mark.parametrize("base", [1, 0, -3, True, 2.0])
def test_to_digits_rejects_bad_radix(base):
    with pytest.raises(DomainError):
        to_digits(10, base)
    with pytest.raises(DomainError):
        to_digits_dc(10, base)


def test_to_digits_rejects_negative():
    with pytest.raises(DomainError):
        to_digits(-1, 10)


@pytest.mark.parametrize("m, base, expected", [
    (720720, 16, "aff50"),
    (0, 10, "0"),
    (2520, 2, "100111011000"),
])
def test_to_digits_dc_examples(m, base, expected):
    assert render(to_digits_dc(m, base)) == expected
    assert render(to_digits_dc(m, base, threshold_bits=0)) == expected


@pytest.mark.parametrize("threshold_bits", [0, 8, 64, 4096])
def test_to_digits_dc_agrees_with_schoolbook(threshold_bits):
    rng = random.Random(20240519 + threshold_bits)
    for _ in range(1000):
        m = rng.randrange(10 ** rng.randint(1, 200))
        base = rng.randint(2, 64)
        assert to_digits_dc(m, base, threshold_bits=threshold_bits) == to_digits(m, base)


def test_to_digits_dc_exact_powers():
    # splits land exactly on base**(2**k) boundaries
    for base in (2, 3, 10, 16, 255):
        for exponent in (1, 2, 3, 4, 7, 8, 9, 16, 31, 32, 33, 64, 100):
            for delta in (-1, 0, 1):
                m = base ** exponent + delta
                assert to_digits_dc(m, base, threshold_bits=0) == to_digits(m, base)


@pytest.mark.parametrize("base, big_endian, expected", [
    (8, [1, 5, 1, 0], 840),
    (2, [0], 0),
    (7, [6, 0, 6, 1, 1, 4, 0], 720720),
    (16, [10, 15, 15, 5, 0], 720720),
])
def test_from_digits_examples(base, big_endian, expected):
    assert from_digits(numeral_from_big_endian(big_endian, base)) == expected


@pytest.mark.parametrize("radix, digits", [
    (8, (0, 8)),
    (10, (3, -1)),
    (2, (1, 0)),
    (10, ()),
    (1, (0,)),
])
def test_numeral_rejects_malformed(radix, digits):
    with pytest.raises(DomainError):
        Numeral(radix, digits)


@pytest.mark.parametrize("base, m, expected", [
    (16, 720720, "aff50"),
    (2, 2520, "100111011000"),
    (40, 41, "1:1"),
    (40, 0, "0"),
    (36, 35, "z"),
    (37, 36, "36"),
    (256, 10 * 256 * 256 + 35 * 256 + 15, "10:35:15"),
])
def test_render_examples(base, m, expected):
    assert render(to_digits(m, base)) == expected


def test_split_last_digit():
    assert split_last_digit(to_digits(2520, 5)) == ("4004", "0")
    assert split_last_digit(to_digits(7, 10)) == ("", "7")
    assert split_last_digit(to_digits(10 * 40 * 40 + 35 * 40 + 15, 40)) == ("10:35", "15")


@pytest.mark.parametrize("text, base, expected", [
    ("aff50", 16, 720720),
    ("AFF50", 16, 720720),
    ("0", 2, 0),
    ("2521", 10, 2521),
    ("1510", 8, 840),
    ("1:1", 40, 41),
    ("007", 10, 7),
])
def test_parse_examples(text, base, expected):
    assert parse(text, base) == expected


@pytest.mark.parametrize("text, base, position", [
    ("", 10, 0),
    ("12x4", 10, 2),
    ("19", 8, 1),
    ("12 3", 10, 2),
    ("g", 16, 0),
    ("1::2", 40, 2),
    ("1:2:", 40, 3),
    ("a", 40, 0),
    ("1:40", 40, 2),
    ("١٢", 10, 0),
])
def test_parse_rejects_with_position(text, base, position):
    with pytest.raises(NumeralParseError) as excinfo:
        parse(text, base)
    assert excinfo.value.position == position
    assert f"position {position}" in str(excinfo.value)


def test_parse_rejects_bad_radix():
    with pytest.raises(DomainError):
        parse("1", 1)


@pytest.mark.parametrize("m, base, expected", [
    (2520, 7, 0),
    (2521, 3, 1),
    (2525, 4, 1),
])
def test_least_significant_digit_examples(m, base, expected):
    assert least_significant_digit(m, base) == expected


def test_least_significant_digit_matches_full_conversion():
    rng = random.Random(7)
    for _ in range(2000):
        m = rng.randrange(10 ** 60)
        base = rng.randint(2, 300)
        assert least_significant_digit(m, base) == to_digits(m, base).digits[0]


def test_least_significant_digit_rejects_bad_radix():
    with pytest.raises(DomainError):
        least_significant_digit(10, 1)


@pytest.mark.parametrize("m, a, b, expected", [
    (126, 10, 8, True),
    (101, 10, 5, True),
    (64, 10, 8, False),
    (100, 10, 6, False),
])
def test_same_last_digit(m, a, b, expected):
    assert same_last_digit(m, a, b) is expected


def test_randomized_roundtrip_and_algorithm_equivalence():
    rng = random.Random(1729)
    for _ in range(10_000):
        m = rng.randrange(10 ** 200)
        base = rng.randint(2, 256)
        numeral = to_digits(m, base)
        assert from_digits(numeral) == m
        assert numeral.digits[-1] != 0 or numeral.digits == (0,)
        assert all(0 <= d < base for d in numeral.digits)
        assert to_digits_dc(m, base) == numeral
        assert to_digits_dc(m, base, threshold_bits=64) == numeral


def test_parse_render_inverse():
    rng = random.Random(99)
    for _ in range(2000):
        m = rng.randrange(10 ** rng.randint(1, 80))
        base = rng.randint(2, 256)
        numeral = to_digits(m, base)
        assert parse(render(numeral), base) == from_digits(numeral)


def test_large_operand_conversion_is_fast_and_exact():
    m = lcm_range_prime_power(10000)

    started = time.perf_counter()
    fast = to_digits_dc(m, 7)
    elapsed = time.perf_counter() - started

    assert from_digits(fast) == m
    assert fast == to_digits(m, 7)
    assert elapsed < 5.0


def test_to_decimal_beyond_default_str_limit():
    assert to_decimal(10 ** 5000) == "1" + "0" * 5000
    assert to_decimal(0) == "0"
    assert parse(to_decimal(10 ** 5000 + 7), 10) == 10 ** 5000 + 7
