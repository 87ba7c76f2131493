"""
OEIS b-file parsing and the A003418 cross-check.

A003418 has offset 0 with a(0) = a(1) = 1, and a(n) = lcm(1..n) = lcm(2..n)
for n >= 2, so the range lcm maps onto a(n) directly for every n >= 0.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from .lcm_engine import iter_lcm_prefix
from .radix import parse, to_decimal
from ..exceptions import BFileError, BFileStructureError, DomainError
from ..utils.file_utils import read_text

logger = logging.getLogger(__name__)

LCM_SEQUENCE_ID = "A003418"


@dataclass
class BFileSequence:
    sequence_id: str
    entries: Dict[int, int] = field(default_factory=dict)

    @property
    def low(self) -> Optional[int]:
        return min(self.entries) if self.entries else None

    @property
    def high(self) -> Optional[int]:
        return max(self.entries) if self.entries else None

    def __len__(self):
        return len(self.entries)

    def __contains__(self, n):
        return n in self.entries

    def __getitem__(self, n):
        return self.entries[n]


@dataclass
class Mismatch:
    n: int
    expected: int
    actual: int


@dataclass
class CheckReport:
    sequence_id: str
    max_n: int
    checked: List[int] = field(default_factory=list)
    skipped: List[int] = field(default_factory=list)
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "sequence_id": self.sequence_id,
            "max_n": self.max_n,
            "passed": self.passed,
            "checked": len(self.checked),
            "skipped": self.skipped,
            "mismatches": [
                {"n": m.n, "expected": to_decimal(m.expected), "actual": to_decimal(m.actual)}
                for m in self.mismatches
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"sequence\t{self.sequence_id}",
            f"max_n\t{self.max_n}",
            f"checked\t{len(self.checked)}",
            f"skipped\t{_compress_ranges(self.skipped)}",
            f"mismatches\t{len(self.mismatches)}",
        ]
        for m in self.mismatches:
            lines.append(f"mismatch\t{m.n}\t{to_decimal(m.expected)}\t{to_decimal(m.actual)}")
        lines.append(f"result\t{'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _compress_ranges(values: List[int]) -> str:
    if not values:
        return "-"
    parts = []
    start = prev = values[0]
    for v in values[1:] + [None]:
        if v is not None and v == prev + 1:
            prev = v
            continue
        parts.append(str(start) if start == prev else f"{start}..{prev}")
        if v is not None:
            start = prev = v
    return ",".join(parts)


def _parse_integer(token: str, line_number: int) -> int:
    negative = token.startswith("-")
    digits = token[1:] if negative else token
    try:
        value = parse(digits, 10)
    except DomainError as e:
        raise BFileError(f"not an integer: {token!r}", line_number=line_number) from e
    return -value if negative else value


def parse_bfile(text: str, sequence_id: str = LCM_SEQUENCE_ID) -> BFileSequence:
    seq = BFileSequence(sequence_id=sequence_id)
    previous = None

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise BFileError(f"expected 'n a(n)', got {len(tokens)} tokens", line_number=line_number)

        n = _parse_integer(tokens[0], line_number)
        value = _parse_integer(tokens[1], line_number)

        if previous is not None and n != previous + 1:
            raise BFileStructureError(f"index {n} does not follow {previous}", line_number=line_number)
        if sequence_id == LCM_SEQUENCE_ID and value < 1:
            raise BFileStructureError(f"a({n}) must be positive", line_number=line_number)

        seq.entries[n] = value
        previous = n

    logger.debug(f"[{sequence_id}] parsed {len(seq)} b-file entries")
    return seq


def render_bfile(seq: BFileSequence) -> str:
    return "".join(f"{n} {'-' if v < 0 else ''}{to_decimal(abs(v))}\n" for n, v in sorted(seq.entries.items()))


def load_bfile(path, sequence_id: str = LCM_SEQUENCE_ID) -> BFileSequence:
    path = Path(path)
    seq = parse_bfile(read_text(path), sequence_id)
    logger.info(f"[{sequence_id}] loaded {len(seq)} entries from {path}")
    return seq


def cross_check(max_n: int, seq: BFileSequence) -> CheckReport:
    if isinstance(max_n, bool) or not isinstance(max_n, int) or max_n < 0:
        raise DomainError(f"max_n must be a non-negative integer, got {max_n!r}")

    report = CheckReport(sequence_id=seq.sequence_id, max_n=max_n)
    # lcm(2..0) and lcm(2..1) are the empty range
    expected_values = {0: 1}
    if max_n >= 1:
        expected_values.update(iter_lcm_prefix(max_n))

    for n in range(0, max_n + 1):
        if n not in seq:
            report.skipped.append(n)
            continue
        report.checked.append(n)
        expected = expected_values[n]
        if seq[n] != expected:
            report.mismatches.append(Mismatch(n=n, expected=expected, actual=seq[n]))

    if report.mismatches:
        logger.error(f"[{seq.sequence_id}] {len(report.mismatches)} mismatches up to n={max_n}")
    else:
        logger.info(f"[{seq.sequence_id}] {len(report.checked)} entries agree up to n={max_n}, "
                    f"{len(report.skipped)} skipped")
    return report
