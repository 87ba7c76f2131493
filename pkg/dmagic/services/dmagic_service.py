import logging
from pathlib import Path

from .lcm_engine import LcmCache, check_ceiling, lcm_range_prime_power
from .magic import (
    digit_table,
    full_magic_digits,
    generate_family,
    oracle_enumerate,
    partial_magic_bases,
    verify,
)
from .oeis_api import OeisAPI
from .oeis_check import LCM_SEQUENCE_ID, cross_check, load_bfile, parse_bfile
from .radix import parse, render, to_digits_dc
from ..config.settings import get_config
from ..utils.file_utils import atomic_write_text, calculate_text_hash

logger = logging.getLogger(__name__)


class DMagicService:
    """Entry point shared by the CLI and the HTTP API; all arithmetic lives in the library modules."""

    def __init__(self, config=None, cache_path=None, bfile_path=None, oeis_url=None):
        self.config = config or get_config()
        self.cache = LcmCache(cache_path or self.config.CACHE_PATH)
        self.bfile_path = Path(bfile_path or self.config.BFILE_PATH)
        self.api_client = OeisAPI(config=self.config, endpoint=oeis_url)

    def parse_value(self, text, base=10):
        return parse(text, base)

    def lcm(self, L, use_cache=True):
        check_ceiling(L)
        if use_cache:
            return self.cache.get_or_compute(L)
        return lcm_range_prime_power(L)

    def warm_cache(self, L_max):
        return self.cache.warm(L_max)

    def convert(self, text, from_base=10, to_base=10):
        value = parse(text, from_base)
        numeral = render(to_digits_dc(value, to_base))
        logger.debug(f"converted {len(text)}-digit radix-{from_base} value to {len(numeral)} radix-{to_base} digits")
        return numeral

    def verify(self, M, L):
        report = verify(M, L)
        logger.debug(f"[L={L}] verified candidate, full_magic={report.full_magic}")
        return report

    def table(self, M, L):
        return digit_table(M, L)

    def partial(self, M, L):
        return partial_magic_bases(M, L)

    def generate(self, L, j, count, start=0):
        return [c.M for c in generate_family(L, j, count, start)]

    def digits(self, L):
        return full_magic_digits(L)

    def oracle(self, L, bound, jobs=1):
        return oracle_enumerate(L, bound, jobs=jobs, max_bound=self.config.ORACLE_MAX_BOUND)

    def check_oeis(self, max_n, bfile_path=None, fetch=False, save_path=None):
        if fetch:
            text = self.api_client.fetch_bfile(LCM_SEQUENCE_ID)
            seq = parse_bfile(text, LCM_SEQUENCE_ID)
            if save_path:
                atomic_write_text(save_path, text)
                logger.info(f"[{LCM_SEQUENCE_ID}] saved {len(seq)} entries to {save_path} "
                            f"(sha256 {calculate_text_hash(text)[:16]})")
        else:
            seq = load_bfile(bfile_path or self.bfile_path, LCM_SEQUENCE_ID)

        return cross_check(max_n, seq)
