"""
Command-line front end.

Exit codes: 0 success (or verified true), 1 verified false / cross-check
mismatch, 2 usage, parse or I/O error.
"""
import argparse
import logging
import sys

from . import __version__
from .config.settings import get_config
from .exceptions import DMagicError
from .main import setup_logging
from .services.dmagic_service import DMagicService
from .services.radix import to_decimal
from .utils.formatting import (
    FORMATS,
    format_bases,
    format_check_report,
    format_report,
    format_table,
    format_values,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="tsv", help="output format (default: tsv)")
    common.add_argument("--cache", default=None, help="lcm cache file (default: $DMAGIC_CACHE or data/lcm_cache.tsv)")
    common.add_argument("--oeis-url", default=None, help="b-file endpoint (default: $DMAGIC_OEIS_URL)")
    common.add_argument("--log-level", default=None, help="logging level (default: $LOG_LEVEL or INFO)")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="dmagic",
        description="Range lcm, radix conversion and D-magic numbers (least significant digit invariant under base change).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("lcm", parents=[common], help="print lcm(2..L) in decimal")
    p.add_argument("L", type=int)
    p.add_argument("--no-cache", action="store_true", help="compute without reading or writing the cache")
    p.set_defaults(handler=cmd_lcm)

    p = sub.add_parser("convert", parents=[common], help="convert a numeral between radices")
    p.add_argument("value")
    p.add_argument("--from", dest="from_base", type=int, default=10)
    p.add_argument("--to", dest="to_base", type=int, required=True)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="check digit invariance over bases 2..L")
    p.add_argument("M")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.add_argument("--from", dest="from_base", type=int, default=10)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="print the per-base table, L down to 2")
    p.add_argument("M")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.add_argument("--from", dest="from_base", type=int, default=10)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("partial", parents=[common], help="print the bases that keep the last digit")
    p.add_argument("M")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.add_argument("--from", dest="from_base", type=int, default=10)
    p.set_defaults(handler=cmd_partial)

    p = sub.add_parser("generate", parents=[common], help="print lcm(2..L)*n + j for consecutive n")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.add_argument("--digit", dest="j", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--start", type=int, default=1)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("digits", parents=[common], help="print the last digits j that give fully magic numbers")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.set_defaults(handler=cmd_digits)

    p = sub.add_parser("oracle", parents=[common], help="exhaustively list D-magic numbers up to a bound")
    p.add_argument("--base", dest="L", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("check-oeis", parents=[common], help="cross-check lcm(2..n) against A003418")
    p.add_argument("--max-n", type=int, default=100)
    source = p.add_mutually_exclusive_group()
    source.add_argument("--bfile", default=None, help="b-file path (default: bundled data/b003418.txt)")
    source.add_argument("--fetch", action="store_true", help="download the b-file instead of reading it")
    p.add_argument("--save", default=None, help="with --fetch, store the downloaded b-file here")
    p.set_defaults(handler=cmd_check_oeis)

    p = sub.add_parser("cache-warm", parents=[common], help="fill the lcm cache for L = 1..N")
    p.add_argument("--max-L", dest="max_L", type=int, required=True)
    p.set_defaults(handler=cmd_cache_warm)

    return parser


def _emit(text):
    sys.stdout.write(text)


def cmd_lcm(service, args):
    _emit(f"{to_decimal(service.lcm(args.L, use_cache=not args.no_cache))}\n")
    return EXIT_OK


def cmd_convert(service, args):
    _emit(f"{service.convert(args.value, args.from_base, args.to_base)}\n")
    return EXIT_OK


def cmd_verify(service, args):
    report = service.verify(service.parse_value(args.M, args.from_base), args.L)
    _emit(format_report(report, args.format))
    return EXIT_OK if report.full_magic else EXIT_FALSE


def cmd_table(service, args):
    _emit(format_table(service.table(service.parse_value(args.M, args.from_base), args.L), args.format))
    return EXIT_OK


def cmd_partial(service, args):
    bases = service.partial(service.parse_value(args.M, args.from_base), args.L)
    _emit(format_bases(bases, args.format))
    return EXIT_OK if len(bases) == args.L - 1 else EXIT_FALSE


def cmd_generate(service, args):
    _emit(format_values(service.generate(args.L, args.j, args.count, args.start), args.format, key="magic_numbers"))
    return EXIT_OK


def cmd_digits(service, args):
    _emit(format_bases(service.digits(args.L), args.format, key="digits"))
    return EXIT_OK


def cmd_oracle(service, args):
    _emit(format_values(service.oracle(args.L, args.bound, jobs=args.jobs), args.format, key="magic_numbers"))
    return EXIT_OK


def cmd_check_oeis(service, args):
    if args.save and not args.fetch:
        raise DMagicError("--save requires --fetch")
    report = service.check_oeis(args.max_n, bfile_path=args.bfile, fetch=args.fetch, save_path=args.save)
    _emit(format_check_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_FALSE


def cmd_cache_warm(service, args):
    added = service.warm_cache(args.max_L)
    _emit(f"{added}\n")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = get_config()
    if args.log_level:
        config.LOG_LEVEL = args.log_level.upper()

    try:
        config.validate_config()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config)

    try:
        service = DMagicService(config, cache_path=args.cache, oeis_url=args.oeis_url)
        return args.handler(service, args)
    except DMagicError as e:
        logger.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
