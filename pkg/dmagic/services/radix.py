"""
Positional numerals for arbitrary-precision naturals.

Digits are stored little-endian (index = power of the radix), so digits[0] is
always the least significant digit. Zero is the single digit [0].
"""
import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..exceptions import DomainError, NumeralParseError

logger = logging.getLogger(__name__)

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_ALPHABET_RADIX = len(ALPHABET)

# Operands up to 64 machine words go through the schoolbook loop
WORD_BITS = 64
DC_THRESHOLD_WORDS = 64
DC_THRESHOLD_BITS = WORD_BITS * DC_THRESHOLD_WORDS

_COLON_RE = re.compile(r'^[0-9]+(:[0-9]+)*$')


def check_radix(base) -> int:
    if isinstance(base, bool) or not isinstance(base, int):
        raise DomainError(f"Radix must be an integer, got {base!r}")
    if base < 2:
        raise DomainError(f"Radix must be at least 2, got {base}")
    return base


def check_natural(m, name="value") -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise DomainError(f"{name} must be an integer, got {type(m).__name__}")
    if m < 0:
        raise DomainError(f"{name} must be a natural number, got a negative value")
    return m


@dataclass(frozen=True)
class Numeral:
    radix: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        check_radix(self.radix)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise DomainError("A numeral needs at least one digit; zero is [0]")
        for position, d in enumerate(self.digits):
            if not 0 <= d < self.radix:
                raise DomainError(f"Digit {d} at position {position} is out of range for radix {self.radix}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise DomainError("Most significant digit must be nonzero")

    @property
    def least_significant(self) -> int:
        return self.digits[0]


def _schoolbook(m: int, base: int) -> List[int]:
    digits = []
    while m:
        m, d = divmod(m, base)
        digits.append(d)
    return digits


def _canonical(digits: List[int]) -> Tuple[int, ...]:
    end = len(digits)
    while end > 1 and digits[end - 1] == 0:
        end -= 1
    return tuple(digits[:end]) if end else (0,)


def to_digits(m: int, base: int) -> Numeral:
    check_radix(base)
    check_natural(m)
    return Numeral(base, _canonical(_schoolbook(m, base)))


def to_digits_dc(m: int, base: int, *, threshold_bits: int = DC_THRESHOLD_BITS) -> Numeral:
    """
    Divide-and-conquer conversion.

    Splits m at base**(2**k), the largest such power whose square exceeds m,
    converts the low half to exactly 2**k digits and recurses on the high half.
    Output is digit-for-digit identical to to_digits().
    """
    check_radix(base)
    check_natural(m)

    if m.bit_length() <= threshold_bits:
        return to_digits(m, base)

    # powers[k] == base ** (2 ** k); stop once powers[-1] ** 2 > m
    powers = [base]
    while powers[-1] * powers[-1] <= m:
        powers.append(powers[-1] * powers[-1])

    def convert(n: int, level: int, width) -> List[int]:
        if level < 0 or n.bit_length() <= threshold_bits:
            digits = _schoolbook(n, base)
            if width is not None:
                digits.extend([0] * (width - len(digits)))
            return digits
        hi, lo = divmod(n, powers[level])
        half = 1 << level
        low_digits = convert(lo, level - 1, half)
        high_digits = convert(hi, level - 1, None if width is None else width - half)
        return low_digits + high_digits

    digits = convert(m, len(powers) - 1, None)
    logger.debug(f"d&c conversion to radix {base}: {m.bit_length()} bits -> {len(digits)} digits")
    return Numeral(base, _canonical(digits))


def from_digits(numeral: Numeral) -> int:
    base = numeral.radix
    value = 0
    for position in range(len(numeral.digits) - 1, -1, -1):
        d = numeral.digits[position]
        if not 0 <= d < base:
            raise DomainError(f"Digit {d} at position {position} is out of range for radix {base}")
        value = value * base + d
    return value


def numeral_from_big_endian(values: Sequence[int], base: int) -> Numeral:
    return Numeral(base, _canonical(list(reversed(values))))


def _render_digits(big_endian: Sequence[int], base: int) -> str:
    if base <= MAX_ALPHABET_RADIX:
        return "".join(ALPHABET[d] for d in big_endian)
    return ":".join(str(d) for d in big_endian)


def render(numeral: Numeral) -> str:
    return _render_digits(numeral.digits[::-1], numeral.radix)


def split_last_digit(numeral: Numeral) -> Tuple[str, str]:
    """Render as (everything but the last digit, last digit); the prefix of a single digit is ''."""
    prefix = _render_digits(numeral.digits[:0:-1], numeral.radix)
    return prefix, _render_digits((numeral.digits[0],), numeral.radix)


def parse(text: str, base: int) -> int:
    check_radix(base)
    if not isinstance(text, str) or not text:
        raise NumeralParseError("Empty numeral", text=text or "", position=0)

    if base <= MAX_ALPHABET_RADIX:
        values = []
        for position, ch in enumerate(text):
            # uppercase accepted, lowercase is what render() emits
            d = ALPHABET.find(ch.lower()) if ch.isascii() else -1
            if d < 0:
                raise NumeralParseError(f"Unexpected character {ch!r} in {text!r}", text=text, position=position)
            if d >= base:
                raise NumeralParseError(f"Digit {ch!r} is not valid in radix {base}", text=text, position=position)
            values.append(d)
    else:
        if not _COLON_RE.match(text):
            position = _first_colon_grammar_error(text)
            raise NumeralParseError(f"Malformed radix-{base} numeral {text!r}; expected colon-separated digit values",
                                    text=text, position=position)
        values = []
        position = 0
        for token in text.split(":"):
            d = int(token)
            if d >= base:
                raise NumeralParseError(f"Digit value {d} is not valid in radix {base}", text=text, position=position)
            values.append(d)
            position += len(token) + 1

    return from_digits(numeral_from_big_endian(values, base))


def _first_colon_grammar_error(text: str) -> int:
    previous = ":"
    for i, ch in enumerate(text):
        if ch == ":":
            if previous == ":":
                return i
        elif not ch.isdigit() or not ch.isascii():
            return i
        previous = ch
    return len(text) - 1


def least_significant_digit(m: int, base: int) -> int:
    check_radix(base)
    check_natural(m)
    return m % base


def same_last_digit(m: int, a: int, b: int) -> bool:
    return least_significant_digit(m, a) == least_significant_digit(m, b)


def to_decimal(m: int) -> str:
    """Decimal text for any size of m, independent of the interpreter's int->str digit limit."""
    return render(to_digits_dc(m, 10))
