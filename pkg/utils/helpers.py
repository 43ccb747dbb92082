import logging
import math
import os
from fractions import Fraction
from typing import Optional

from dotenv import load_dotenv

from utils.errors import SizeCapExceeded

load_dotenv()

DEFAULT_MAX_CELLS = 1 << 24
MAX_CELLS_ENV = 'AMDKIT_MAX_CELLS'
WORKERS_ENV = 'AMDKIT_WORKERS'
LOG_LEVEL_ENV = 'AMDKIT_LOG_LEVEL'

logger = logging.getLogger(__name__)

_max_cells_override: Optional[int] = None


class _TagFormatter(logging.Formatter):
    TAGS = {'WARNING': 'WARN', 'CRITICAL': 'ERROR'}

    def format(self, record):
        record.tag = self.TAGS.get(record.levelname, record.levelname)
        return super().format(record)


def configure_logging(level=None):
    """
    Install the bracketed-tag formatter on the root logger, once.
    """
    root = logging.getLogger()
    if level is None:
        level = os.getenv(LOG_LEVEL_ENV, 'WARNING')
    root.setLevel(level if isinstance(level, int) else str(level).upper())
    if any(getattr(h, '_amdkit', False) for h in root.handlers):
        return
    handler = logging.StreamHandler()
    handler.setFormatter(_TagFormatter('[%(tag)s] %(message)s'))
    handler._amdkit = True
    root.addHandler(handler)


def _int_from_env(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip(), 0)
        if value <= 0:
            raise ValueError(raw)
        return value
    except ValueError:
        logger.warning("Ignoring invalid %s=%r, using %d", name, raw, default)
        return default


def set_max_cells(value: Optional[int]):
    global _max_cells_override
    _max_cells_override = value


def get_max_cells() -> int:
    if _max_cells_override is not None:
        return _max_cells_override
    return _int_from_env(MAX_CELLS_ENV, DEFAULT_MAX_CELLS)


def get_default_workers() -> int:
    return _int_from_env(WORKERS_ENV, 1)


def check_size(cells: int, what: str):
    cap = get_max_cells()
    if cells > cap:
        raise SizeCapExceeded(f"{what} needs {cells} cells, above the size cap {cap} ({MAX_CELLS_ENV} / --max-cells)")


def floor_log2(x: Fraction) -> int:
    """Exact floor(log2(x)) for a positive rational."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"log2 of non-positive value {x}")
    k = x.numerator.bit_length() - x.denominator.bit_length()
    # k is off by at most one
    if Fraction(2) ** k > x:
        k -= 1
    elif Fraction(2) ** (k + 1) <= x:
        k += 1
    return k


def render_log2(x: Fraction, digits: int = 6) -> str:
    """Fixed-precision decimal rendering of log2(x); never used for comparisons."""
    x = Fraction(x)
    k = floor_log2(x)
    # log2(x) = k + log2(x / 2^k), the remainder lies in [1, 2)
    rest = x / (Fraction(2) ** k)
    value = k + math.log2(rest.numerator) - math.log2(rest.denominator)
    return f"{value:.{digits}f}"


def rational_dict(value: Fraction) -> dict:
    value = Fraction(value)
    return {'num': value.numerator, 'den': value.denominator}
