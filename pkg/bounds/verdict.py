import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from amd.code import STRONG, WEAK, AmdCode, tag_size
from amd.evaluator import SuccessProfile
from bounds.lower_bounds import LogValue, g_lower_bound, regular_lower_bound, weak_lower_bound
from utils.errors import ProfileIncomplete
from utils.helpers import floor_log2, rational_dict

logger = logging.getLogger(__name__)


def _triple(value: Fraction, bound: Fraction) -> dict:
    return {'value': rational_dict(value), 'bound': rational_dict(bound), 'met': value == bound}


@dataclass(frozen=True)
class CodeWindow:
    """k and u read off an evaluated code, its lower tag bound and its actual tag."""
    k: int
    u: int
    lower: LogValue
    tag: LogValue

    @property
    def consistent(self) -> bool:
        return self.lower.le(self.tag)

    def as_dict(self) -> dict:
        return {'k': self.k, 'u': self.u, 'lower': self.lower.as_dict(), 'tag': self.tag.as_dict(),
                'consistent': self.consistent}


@dataclass(frozen=True)
class BoundReport:
    weak_rho: Fraction
    strong_rho_per_source: List[Fraction]
    weak_lower: Fraction
    regular_lower: Fraction
    g_lower_per_source: List[Fraction]
    window: Optional[CodeWindow]

    @property
    def r_optimal(self) -> bool:
        return self.weak_rho == self.regular_lower

    @property
    def g_optimal(self) -> bool:
        return all(rho == bound for rho, bound in zip(self.strong_rho_per_source, self.g_lower_per_source))

    def as_dict(self) -> dict:
        return {
            'weakLower': _triple(self.weak_rho, self.weak_lower),
            'regularLower': _triple(self.weak_rho, self.regular_lower),
            'gLower': [dict(_triple(rho, bound), source=s) for s, (rho, bound)
                       in enumerate(zip(self.strong_rho_per_source, self.g_lower_per_source))],
            'effectiveTagWindow': self.window.as_dict() if self.window else None,
            'rOptimal': self.r_optimal,
            'gOptimal': self.g_optimal,
        }


def code_window(code: AmdCode, weak_rho: Fraction) -> Optional[CodeWindow]:
    if weak_rho <= 0 or code.m < 2:
        return None
    k = floor_log2(1 / weak_rho)
    u = floor_log2(Fraction(code.m))
    if k < 1 or u < 1:
        return None
    lower = LogValue(Fraction(k) - Fraction(2) ** (1 - u))
    return CodeWindow(k, u, lower, LogValue(Fraction(0), tag_size(code).ratio))


def optimality_verdict(code: AmdCode, profile: SuccessProfile) -> BoundReport:
    missing = [m for m in (WEAK, STRONG) if not profile.has(m)]
    if missing:
        raise ProfileIncomplete(f"profile of {code.code_id} lacks model(s) {', '.join(missing)}")
    report = BoundReport(
        weak_rho=profile.weak_rho,
        strong_rho_per_source=list(profile.strong_rho_per_source),
        weak_lower=weak_lower_bound(code.m, code.n, code.m * code.t),
        regular_lower=regular_lower_bound(code.t, code.m, code.n),
        g_lower_per_source=g_lower_bound(code),
        window=code_window(code, profile.weak_rho),
    )
    logger.info("Verdict for %s: rOptimal=%s gOptimal=%s", code.code_id, report.r_optimal, report.g_optimal)
    return report
