"""
Least common multiples of the ranges 2..L.

Two independent algorithms compute the same quantity: a gcd fold over the
range and a product of maximal prime powers. The range is inclusive of L;
L = 1 is the empty range and its lcm is 1.
"""
import logging
import math
from functools import reduce
from pathlib import Path
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .radix import check_natural, parse, to_decimal
from ..exceptions import CacheError, DomainError
from ..utils.file_utils import atomic_write_text, read_text

logger = logging.getLogger(__name__)

CACHE_FORMAT = "dmagic-lcm-cache"
CACHE_VERSION = "v1"
CACHE_HEADER = f"#{CACHE_FORMAT} {CACHE_VERSION}"


def check_ceiling(L) -> int:
    if isinstance(L, bool) or not isinstance(L, int):
        raise DomainError(f"Range ceiling must be an integer, got {L!r}")
    if L < 1:
        raise DomainError(f"Range ceiling must be at least 1, got {L}")
    return L


def lcm_pair(a: int, b: int) -> int:
    check_natural(a, "a")
    check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("lcm(0, 0) is undefined")
    if a == 0 or b == 0:
        return 0
    return a // math.gcd(a, b) * b


def lcm_range_fold(L: int) -> int:
    check_ceiling(L)
    return reduce(lcm_pair, range(2, L + 1), 1)


def sieve_primes(L: int) -> List[int]:
    check_ceiling(L)
    if L < 2:
        return []
    is_prime = np.ones(L + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(L) + 1):
        if is_prime[p]:
            is_prime[p * p: L + 1: p] = False
    return np.flatnonzero(is_prime).tolist()


def _max_prime_power(p: int, L: int) -> int:
    # p ** floor(log_p L), by repeated multiplication
    power = p
    while power * p <= L:
        power *= p
    return power


def lcm_range_prime_power(L: int) -> int:
    check_ceiling(L)
    return math.prod(_max_prime_power(p, L) for p in sieve_primes(L))


def iter_lcm_prefix(L_max: int) -> Iterator[Tuple[int, int]]:
    """Yield (L, lcm(2..L)) for L = 1..L_max; the value grows by p exactly when L is a power of p."""
    check_ceiling(L_max)
    prime_of_power = {}
    for p in sieve_primes(L_max):
        power = p
        while power <= L_max:
            prime_of_power[power] = p
            power *= p

    value = 1
    for L in range(1, L_max + 1):
        value *= prime_of_power.get(L, 1)
        yield L, value


class LcmCache:
    """
    Write-through cache of lcm(2..L), persisted as

        #dmagic-lcm-cache v1
        L<TAB><decimal lcm>

    in ascending L. Every loaded row is checked against iter_lcm_prefix() and
    wrong rows are dropped; a structurally corrupt file is discarded and rebuilt.
    """

    def __init__(self, path):
        self.path = Path(path)
        self.entries: Dict[int, int] = {}
        self._loaded = False
        self._dirty = False

    def load(self):
        self.entries = {}
        self._dirty = False
        self._loaded = True

        if not self.path.exists():
            logger.debug(f"No lcm cache at {self.path}, starting cold")
            return self

        try:
            entries, version = self._parse(read_text(self.path))
        except (CacheError, UnicodeDecodeError) as e:
            logger.warning(f"Corrupt lcm cache {self.path}, recomputing from scratch: {e}")
            self._dirty = True
            return self

        if version != CACHE_VERSION:
            logger.warning(f"lcm cache {self.path} written by {version}, revalidating {len(entries)} entries")
            self._dirty = True

        self.entries = self._revalidate(entries)
        if len(self.entries) != len(entries):
            self._dirty = True
        logger.debug(f"Loaded {len(self.entries)} lcm cache entries from {self.path}")
        return self

    def get_or_compute(self, L: int) -> int:
        check_ceiling(L)
        if not self._loaded:
            self.load()

        if L in self.entries:
            logger.debug(f"[L={L}] lcm cache hit")
            if self._dirty:
                self.save()
            return self.entries[L]

        below = [k for k in self.entries if k < L]
        if below:
            start = max(below)
            value = reduce(lcm_pair, range(start + 1, L + 1), self.entries[start])
            logger.debug(f"[L={L}] extended cached lcm(2..{start})")
        else:
            value = lcm_range_prime_power(L)

        self.entries[L] = value
        self._dirty = True
        self.save()
        logger.info(f"[L={L}] cached lcm of {value.bit_length()} bits")
        return value

    def warm(self, L_max: int) -> int:
        if not self._loaded:
            self.load()
        added = 0
        for L, value in iter_lcm_prefix(L_max):
            if self.entries.get(L) != value:
                self.entries[L] = value
                added += 1
        if added or self._dirty:
            self._dirty = True
            self.save()
        logger.info(f"Warmed lcm cache up to L={L_max}, {added} new entries")
        return added

    def save(self):
        lines = [CACHE_HEADER]
        lines.extend(f"{L}\t{to_decimal(self.entries[L])}" for L in sorted(self.entries))
        atomic_write_text(self.path, "\n".join(lines) + "\n")
        self._dirty = False

    @staticmethod
    def _parse(text: str):
        if not text.endswith("\n"):
            raise CacheError("file does not end with a newline (truncated write?)")

        lines = text[:-1].split("\n")
        header = lines[0]
        prefix = f"#{CACHE_FORMAT} "
        if not header.startswith(prefix) or not header[len(prefix):].strip():
            raise CacheError(f"missing header {CACHE_HEADER!r}")
        version = header[len(prefix):].strip()

        entries = {}
        previous = None
        for line_number, line in enumerate(lines[1:], start=2):
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0].isdigit():
                raise CacheError(f"line {line_number}: malformed row {line[:40]!r}")
            L = int(fields[0])
            try:
                value = parse(fields[1], 10)
            except DomainError as e:
                raise CacheError(f"line {line_number}: {e}") from e

            if L < 1 or value < 1:
                raise CacheError(f"line {line_number}: non-positive entry")
            if previous is not None:
                prev_L, prev_value = previous
                if L <= prev_L:
                    raise CacheError(f"line {line_number}: rows out of order")
                if value % prev_value:
                    raise CacheError(f"line {line_number}: lcm(2..{prev_L}) does not divide lcm(2..{L})")
            if L >= 2 and value % L:
                raise CacheError(f"line {line_number}: entry for L={L} is not divisible by {L}")

            entries[L] = value
            previous = (L, value)

        return entries, version

    @staticmethod
    def _revalidate(entries: Dict[int, int]) -> Dict[int, int]:
        if not entries:
            return {}
        kept = {}
        for L, value in iter_lcm_prefix(max(entries)):
            if L not in entries:
                continue
            if entries[L] == value:
                kept[L] = value
            else:
                logger.warning(f"[L={L}] dropping stale lcm cache entry")
        return kept


def cache_get_or_compute(L: int, cache: LcmCache) -> int:
    return cache.get_or_compute(L)
