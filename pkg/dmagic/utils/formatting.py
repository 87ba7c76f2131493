"""
Output renderers for the three CLI formats: tsv (default, the golden-test
surface), pretty (pandas column alignment) and structured (JSON).
"""
import json

import pandas as pd

from ..services.magic import report_to_dict, report_to_text
from ..services.radix import to_decimal

FORMATS = ("tsv", "pretty", "structured")


def _frame_text(records, columns):
    if not records:
        return ""
    df = pd.DataFrame.from_records(records, columns=columns)
    return df.to_string(index=False) + "\n"


def _json_text(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def format_table(table_tsv, fmt="tsv"):
    if fmt == "tsv":
        return table_tsv
    records = [line.split("\t") for line in table_tsv.splitlines()]
    if fmt == "pretty":
        return _frame_text(records, ["l", "M_l", "last digit"])
    return _json_text([{"base": int(base), "prefix": prefix, "digit": digit} for base, prefix, digit in records])


def format_report(report, fmt="tsv"):
    if fmt == "tsv":
        return report_to_text(report)
    if fmt == "structured":
        return _json_text(report_to_dict(report))

    bases = sorted(report.matching_bases)
    header = (
        f"M = {to_decimal(report.M)}, ceiling base {report.L}, reference digit {report.reference_digit}\n"
        f"{'D-magic' if report.full_magic else 'not D-magic'}; digit kept in bases {_span(bases)}\n"
    )
    records = [(row.base, row.numeral, row.digit, "yes" if row.match else "no") for row in report.rows]
    return header + _frame_text(records, ["l", "M_l", "digit", "match"])


def format_values(values, fmt="tsv", key="values"):
    decimals = [to_decimal(v) for v in values]
    if fmt == "structured":
        return _json_text({key: decimals})
    return "".join(f"{d}\n" for d in decimals)


def format_bases(bases, fmt="tsv", key="bases"):
    ordered = sorted(bases)
    if fmt == "structured":
        return _json_text({key: ordered})
    if fmt == "pretty":
        return f"{_span(ordered)}\n"
    return "".join(f"{b}\n" for b in ordered)


def format_check_report(report, fmt="tsv"):
    if fmt == "structured":
        return _json_text(report.to_dict())
    return report.to_text()


def _span(values):
    if not values:
        return "none"
    if values == list(range(values[0], values[-1] + 1)) and len(values) > 2:
        return f"{values[0]}..{values[-1]}"
    return ", ".join(str(v) for v in values)
