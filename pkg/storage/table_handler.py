"""
Function-table text files.

Line 1 is `A1=<spec> A2=<spec> B=<spec>`, then one `a1 a2 b` line per point,
row-major with a1 as the outer loop.
"""
import logging
from pathlib import Path
from typing import List, NamedTuple, Tuple

from algebra.groups import GroupSpec, parse_group_spec
from functions.func import Func
from utils.errors import SpecParseError

logger = logging.getLogger(__name__)


class TableFile(NamedTuple):
    a1: GroupSpec
    a2: GroupSpec
    b: GroupSpec
    rows: List[Tuple[int, int, int]]


def format_table(func: Func) -> str:
    lines = [f"A1={func.a1.spec_str()} A2={func.a2.spec_str()} B={func.b.spec_str()}"]
    table = func.to_table()
    pos = 0
    for a1 in range(func.n1):
        for a2 in range(func.n2):
            lines.append(f"{a1} {a2} {table[pos]}")
            pos += 1
    return '\n'.join(lines) + '\n'


def write_table(func: Func, path) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_table(func), encoding='utf-8')
    logger.info("Wrote %d rows of %s to %s", func.domain.order, func.label, path)
    return str(path)


def _header_field(token: str, key: str) -> GroupSpec:
    if not token.startswith(key + '='):
        raise SpecParseError(f"expected {key}=<spec> in table header, got {token!r}")
    return parse_group_spec(token[len(key) + 1:])


def parse_table(text: str) -> TableFile:
    """Rows are returned as written; duplicate or missing points are left for the caller to judge."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise SpecParseError("empty table file")
    header = lines[0].split()
    if len(header) != 3:
        raise SpecParseError(f"table header must be 'A1=<spec> A2=<spec> B=<spec>', got {lines[0]!r}")
    a1, a2, b = (_header_field(tok, key) for tok, key in zip(header, ('A1', 'A2', 'B')))
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise SpecParseError(f"line {lineno}: expected 'a1 a2 b', got {line!r}")
        try:
            rows.append(tuple(int(v) for v in parts))
        except ValueError:
            raise SpecParseError(f"line {lineno}: non-integer entry in {line!r}")
    return TableFile(a1, a2, b, rows)


def read_table(path) -> TableFile:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise SpecParseError(f"cannot read table {path}: {e}")
    return parse_table(text)
