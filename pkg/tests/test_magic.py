import random

import pytest

from dmagic.exceptions import DomainError, OracleBoundError
from dmagic.services.lcm_engine import lcm_range_fold, lcm_range_prime_power
from dmagic.services.magic import (
    construct_magic,
    digit_table,
    full_magic_digits,
    generate_family,
    oracle_enumerate,
    partial_magic_bases,
    report_to_dict,
    report_to_text,
    verify,
)


@pytest.mark.parametrize("L, n, j, expected", [
    (10, 1, 0, 2520),
    (10, 1, 1, 2521),
    (8, 1, 0, 840),
    (16, 1, 0, 720720),
    (10, 0, 7, 7),
    (10, 2, 0, 5040),
])
def test_construct_magic_examples(L, n, j, expected):
    candidate = construct_magic(L, n, j)
    assert candidate.M == expected
    assert (candidate.L, candidate.n, candidate.j) == (L, n, j)


@pytest.mark.parametrize("L, n, j", [
    (10, 1, 10),
    (10, 1, 11),
    (1, 1, 0),
    (0, 1, 0),
    (10, -1, 0),
    (10, 1, -1),
])
def test_construct_magic_rejects(L, n, j):
    with pytest.raises(DomainError):
        construct_magic(L, n, j)


def test_verify_2520():
    report = verify(2520, 10)
    assert report.full_magic
    assert report.reference_digit == 0
    assert [row.base for row in report.rows] == list(range(10, 1, -1))
    assert [row.numeral for row in report.rows] == [
        "2520", "3410", "4730", "10230", "15400", "40040", "213120", "10110100", "100111011000",
    ]
    assert all(row.digit == 0 and row.match for row in report.rows)
    assert report.matching_bases == frozenset(range(2, 11))


def test_verify_2521():
    report = verify(2521, 10)
    assert report.full_magic
    assert all(row.digit == 1 for row in report.rows)


def test_verify_720720():
    report = verify(720720, 16)
    assert report.full_magic
    assert len(report.rows) == 15
    assert report.rows[0].numeral == "aff50"
    assert all(row.numeral.endswith("0") for row in report.rows)


def test_verify_partial_and_plain_numbers():
    report = verify(2525, 10)
    assert not report.full_magic
    assert report.reference_digit == 5
    assert report.matching_bases == {6, 7, 8, 9, 10}
    assert {row.base: row.digit for row in report.rows}[4] == 1

    assert not verify(100, 10).full_magic


def test_verify_rejects_small_ceiling():
    with pytest.raises(DomainError):
        verify(5, 1)


@pytest.mark.parametrize("M, L, expected", [
    (2525, 10, {6, 7, 8, 9, 10}),
    (2521, 10, set(range(2, 11))),
    (2529, 10, {10}),
    (1, 2, {2}),
])
def test_partial_magic_bases_examples(M, L, expected):
    assert partial_magic_bases(M, L) == expected


@pytest.mark.parametrize("L, bound, expected", [
    (6, 200, [0, 1, 60, 61, 120, 121, 180, 181]),
    (10, 2521, [0, 1, 2520, 2521]),
    (2, 3, [0, 1, 2, 3]),
    (2, 2, [0, 1, 2]),
])
def test_oracle_examples(L, bound, expected):
    assert oracle_enumerate(L, bound) == expected


def test_oracle_guard():
    with pytest.raises(OracleBoundError):
        oracle_enumerate(6, 10 ** 7 + 1)
    with pytest.raises(OracleBoundError):
        oracle_enumerate(6, 1000, max_bound=999)


def test_oracle_is_deterministic_across_workers():
    single = oracle_enumerate(7, 5000)
    assert oracle_enumerate(7, 5000, jobs=3) == single
    assert oracle_enumerate(7, 5000, jobs=2) == single


def test_oracle_characterisation():
    for L in range(2, 9):
        lcm = lcm_range_fold(L)
        bound = 3 * lcm + 1
        expected = sorted(m for k in range(0, 4) for m in (k * lcm, k * lcm + 1) if m <= bound)
        assert oracle_enumerate(L, bound) == expected, L


def test_digit_table_rows():
    assert "5\t4004\t0" in digit_table(2520, 10).splitlines()
    assert "2\t110100100\t0" in digit_table(840, 8).splitlines()


def test_digit_table_single_digit_rows():
    assert digit_table(3, 5).splitlines() == ["5\t\t3", "4\t\t3", "3\t1\t0", "2\t1\t1"]


def test_digit_table_wide_base():
    table = digit_table(41, 40)
    assert table.splitlines()[0] == "40\t1\t1"


def test_construction_soundness():
    for L in range(2, 17):
        lcm = lcm_range_prime_power(L)
        for n in range(0, 51):
            for j in (0, 1):
                assert verify(construct_magic(L, n, j, lcm).M, L).full_magic


def test_partial_magic_law():
    for L in range(2, 17):
        lcm = lcm_range_prime_power(L)
        for n in range(1, 51):
            for j in range(2, L):
                M = construct_magic(L, n, j, lcm).M
                assert partial_magic_bases(M, L) == set(range(j + 1, L + 1)), (L, n, j)


def test_partial_magic_law_base_ten():
    cases = 0
    for n in range(1, 51):
        for j in range(2, 10):
            assert partial_magic_bases(2520 * n + j, 10) == set(range(j + 1, 11))
            cases += 1
    assert cases == 400


def test_digit_zero_equivalence():
    for L in range(2, 9):
        lcm = lcm_range_fold(L)
        for M in range(0, 3 * lcm + 1):
            report = verify(M, L)
            assert (report.full_magic and report.reference_digit == 0) == (M % lcm == 0)


def test_report_consistency():
    rng = random.Random(31)
    for _ in range(300):
        L = rng.randint(2, 40)
        M = rng.randrange(10 ** rng.randint(1, 30))
        assert verify(M, L).matching_bases == partial_magic_bases(M, L)


def test_full_magic_digits():
    for L in range(2, 17):
        assert full_magic_digits(L) == [0, 1]


def test_generate_family():
    assert [c.M for c in generate_family(10, 0, 2, start=1)] == [2520, 5040]
    assert [c.M for c in generate_family(10, 1, 1, start=1)] == [2521]
    assert [c.M for c in generate_family(8, 0, 1, start=0)] == [0]
    with pytest.raises(DomainError):
        generate_family(10, 0, 0)
    with pytest.raises(DomainError):
        generate_family(10, 10, 1)


def test_report_serialisations():
    report = verify(2525, 10)

    doc = report_to_dict(report)
    assert doc["m"] == "2525"
    assert doc["ceiling_base"] == 10
    assert doc["reference_digit"] == 5
    assert doc["full_magic"] is False
    assert doc["matching_bases"] == [6, 7, 8, 9, 10]
    assert doc["rows"][0] == {"base": 10, "numeral": "2525", "digit": 5, "match": True}
    assert len(doc["rows"]) == 9

    text = report_to_text(report).splitlines()
    assert text[:5] == ["m\t2525", "ceiling_base\t10", "reference_digit\t5", "full_magic\tfalse",
                        "matching_bases\t6,7,8,9,10"]
    assert text[5] == "10\t2525\t5\tmatch"
    assert text[-1] == "2\t100111011101\t1\tdiffers"
