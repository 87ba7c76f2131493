"""
D-magic numbers: integers whose least significant digit is the same in every
base l with 2 <= l <= L.

Construction follows M = lcm(2..L) * n + j. The lcm part is divisible by every
base up to L, so the last digit in each base l is j mod l, which equals j
whenever j < l. For j in {0, 1} that holds for every base, and the number is
fully magic; larger j keeps its digit only in the bases above j.

Bases run over the inclusive range 2..L. The exclusive reading (l < L) yields
the same family, because the ceiling base's own row always matches: the
reference digit is M mod L.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from .lcm_engine import check_ceiling, lcm_range_prime_power
from .radix import check_natural, render, split_last_digit, to_decimal, to_digits_dc
from ..config.settings import ORACLE_HARD_LIMIT
from ..exceptions import DomainError, OracleBoundError

logger = logging.getLogger(__name__)


def check_magic_ceiling(L) -> int:
    check_ceiling(L)
    if L < 2:
        raise DomainError(f"Ceiling base must be at least 2, got {L}")
    return L


@dataclass(frozen=True)
class MagicCandidate:
    M: int
    L: int
    n: int
    j: int


@dataclass(frozen=True)
class MagicRow:
    base: int
    numeral: str
    digit: int
    match: bool


@dataclass(frozen=True)
class MagicReport:
    M: int
    L: int
    rows: Tuple[MagicRow, ...]
    reference_digit: int
    full_magic: bool
    matching_bases: FrozenSet[int]


def construct_magic(L: int, n: int, j: int, lcm_value: Optional[int] = None) -> MagicCandidate:
    check_magic_ceiling(L)
    check_natural(n, "n")
    check_natural(j, "j")
    if j >= L:
        raise DomainError(f"j={j} is not a digit of base {L}")

    if lcm_value is None:
        lcm_value = lcm_range_prime_power(L)
    return MagicCandidate(M=lcm_value * n + j, L=L, n=n, j=j)


def generate_family(L: int, j: int, count: int, start: int = 0,
                    lcm_value: Optional[int] = None) -> List[MagicCandidate]:
    check_magic_ceiling(L)
    check_natural(start, "start")
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")

    if lcm_value is None:
        lcm_value = lcm_range_prime_power(L)
    return [construct_magic(L, n, j, lcm_value) for n in range(start, start + count)]


def verify(M: int, L: int) -> MagicReport:
    check_natural(M, "M")
    check_magic_ceiling(L)

    reference_digit = M % L
    rows = []
    for base in range(L, 1, -1):
        numeral = to_digits_dc(M, base)
        digit = numeral.least_significant
        rows.append(MagicRow(base=base, numeral=render(numeral), digit=digit, match=digit == reference_digit))

    matching = frozenset(row.base for row in rows if row.match)
    return MagicReport(
        M=M,
        L=L,
        rows=tuple(rows),
        reference_digit=reference_digit,
        full_magic=len(matching) == len(rows),
        matching_bases=matching,
    )


def partial_magic_bases(M: int, L: int) -> FrozenSet[int]:
    check_natural(M, "M")
    check_magic_ceiling(L)
    reference_digit = M % L
    return frozenset(l for l in range(2, L + 1) if M % l == reference_digit)


def full_magic_digits(L: int, lcm_value: Optional[int] = None) -> List[int]:
    """Digits j < L for which lcm(2..L) * n + j is fully magic, found by verification."""
    check_magic_ceiling(L)
    if lcm_value is None:
        lcm_value = lcm_range_prime_power(L)
    return [j for j in range(L) if len(partial_magic_bases(lcm_value + j, L)) == L - 1]


def _is_magic_by_scan(M: int, L: int) -> bool:
    reference_digit = M % L
    for l in range(2, L):
        if M % l != reference_digit:
            return False
    return True


def _scan_range(args) -> List[int]:
    L, low, high = args
    return [M for M in range(low, high) if _is_magic_by_scan(M, L)]


def oracle_enumerate(L: int, bound: int, jobs: int = 1, max_bound: int = ORACLE_HARD_LIMIT) -> List[int]:
    """
    Every M in [0, bound] that is fully magic for ceiling L, ascending.

    Classifies each integer by direct per-base remainders; never touches the
    lcm engine. With jobs > 1 the range is split into contiguous chunks and
    the chunk results are concatenated in order.
    """
    check_magic_ceiling(L)
    check_natural(bound, "bound")
    if bound > min(max_bound, ORACLE_HARD_LIMIT):
        raise OracleBoundError(f"Oracle bound {bound} exceeds the exhaustive-scan guard {min(max_bound, ORACLE_HARD_LIMIT)}")
    if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
        raise DomainError(f"jobs must be a positive integer, got {jobs!r}")

    total = bound + 1
    if jobs == 1 or total < 2 * jobs:
        return _scan_range((L, 0, total))

    step = -(-total // jobs)
    chunks = [(L, low, min(low + step, total)) for low in range(0, total, step)]
    logger.debug(f"[L={L}] oracle scan of {total} integers across {len(chunks)} workers")

    found = []
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for part in executor.map(_scan_range, chunks):
            found.extend(part)
    return found


def digit_table(M: int, L: int) -> str:
    """One TSV row per base, L down to 2: base, numeral without its last digit, last digit."""
    check_natural(M, "M")
    check_magic_ceiling(L)
    lines = []
    for base in range(L, 1, -1):
        prefix, last = split_last_digit(to_digits_dc(M, base))
        lines.append(f"{base}\t{prefix}\t{last}")
    return "\n".join(lines) + "\n"


def report_to_text(report: MagicReport) -> str:
    lines = [
        f"m\t{to_decimal(report.M)}",
        f"ceiling_base\t{report.L}",
        f"reference_digit\t{report.reference_digit}",
        f"full_magic\t{'true' if report.full_magic else 'false'}",
        f"matching_bases\t{','.join(str(b) for b in sorted(report.matching_bases))}",
    ]
    for row in report.rows:
        lines.append(f"{row.base}\t{row.numeral}\t{row.digit}\t{'match' if row.match else 'differs'}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: MagicReport) -> dict:
    return {
        "m": to_decimal(report.M),
        "ceiling_base": report.L,
        "reference_digit": report.reference_digit,
        "full_magic": report.full_magic,
        "matching_bases": sorted(report.matching_bases),
        "rows": [
            {"base": row.base, "numeral": row.numeral, "digit": row.digit, "match": row.match}
            for row in report.rows
        ],
    }
