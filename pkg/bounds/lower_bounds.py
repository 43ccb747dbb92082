"""
Lower bounds on the success probability and the effective tag-size window.

Logarithmic quantities are kept as offset + log2(ratio) with rational parts;
comparisons between them are exact.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from amd.code import STRONG, WEAK, AmdCode
from utils.errors import BadFactorization, BadModel, DegenerateParameters, NotCoprime
from utils.helpers import floor_log2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogValue:
    """offset + log2(ratio)."""
    offset: Fraction
    ratio: Fraction = Fraction(1)

    def render(self, digits: int = 6) -> str:
        r = Fraction(self.ratio)
        value = float(self.offset) + math.log2(r.numerator) - math.log2(r.denominator)
        return f"{value:.{digits}f}"

    def le(self, other: 'LogValue') -> bool:
        """self <= other, decided on integers: log2(x) <= p/q iff x^q <= 2^p."""
        x = Fraction(self.ratio) / Fraction(other.ratio)
        d = Fraction(other.offset) - Fraction(self.offset)
        return x ** d.denominator <= Fraction(2) ** d.numerator

    def lt(self, other: 'LogValue') -> bool:
        return self.le(other) and not other.le(self)

    def as_dict(self) -> dict:
        return {'offset': {'num': Fraction(self.offset).numerator, 'den': Fraction(self.offset).denominator},
                'log2Of': {'num': Fraction(self.ratio).numerator, 'den': Fraction(self.ratio).denominator},
                'approx': self.render()}


def weak_lower_bound(m: int, n: int, a: int) -> Fraction:
    """rho >= a(m-1) / (m(n-1)) with a the total number of valid encodings."""
    if m < 2 or n <= 1 or a < m:
        raise DegenerateParameters(f"weak lower bound needs m >= 2, n > 1, a >= m (m={m}, n={n}, a={a})")
    return Fraction(a * (m - 1), m * (n - 1))


def regular_lower_bound(t: int, m: int, n: int) -> Fraction:
    """ceil(t^2 m (m-1) / (n-1)) / (t m) for t-regular codes."""
    if t < 1 or m < 2 or n <= 1:
        raise DegenerateParameters(f"regular lower bound needs t >= 1, m >= 2, n > 1 (t={t}, m={m}, n={n})")
    num, den = t * t * m * (m - 1), n - 1
    return Fraction(-(-num // den), t * m)


def g_lower_bound(code: AmdCode) -> List[Fraction]:
    """1/|G_s| per source; every source of a systematic code has |A2| encodings."""
    return [Fraction(1, code.t)] * code.m


@dataclass(frozen=True)
class Witness:
    """A construction achieving a point inside the effective tag window."""
    name: str
    q: int
    r: int
    m1: int
    m2: int
    rho: Fraction
    k: int
    u: int
    tag: LogValue
    window_lower: LogValue
    window_upper: LogValue
    upper_strict: bool

    @property
    def inside(self) -> bool:
        if not self.window_lower.le(self.tag):
            return False
        return self.tag.lt(self.window_upper) if self.upper_strict else self.tag.le(self.window_upper)

    def as_dict(self) -> dict:
        return {'name': self.name, 'q': self.q, 'r': self.r, 'm1': self.m1, 'm2': self.m2,
                'rho': {'num': self.rho.numerator, 'den': self.rho.denominator},
                'k': self.k, 'u': self.u, 'tag': self.tag.as_dict(),
                'windowLower': self.window_lower.as_dict(), 'windowUpper': self.window_upper.as_dict(),
                'upperStrict': self.upper_strict, 'inside': self.inside}


def mm_witness(k: int, u: int) -> Witness:
    """Weak MM code over GF(2^k) with the smallest r such that u <= k(2r - 1); its tag is 2k bits."""
    if k < 1 or u < 1:
        raise DegenerateParameters(f"k and u must be >= 1 (k={k}, u={u})")
    q = 2 ** k
    r = 1
    while k * (2 * r - 1) < u:
        r += 1
    m1 = q ** (2 * r - 1)
    return Witness('mm', q, r, m1, q, Fraction(1, q), k, u,
                   tag=LogValue(Fraction(2 * k)),
                   window_lower=LogValue(Fraction(k - 1)),
                   window_upper=LogValue(Fraction(2 * k)),
                   upper_strict=False)


def trace_witness(q: int, r: int, m2: int) -> Witness:
    """
    Trace code over Z(m1) x Z(m2), m1 m2 = q^r - 1 coprime; rho = q^(r-1)/(q^r-1)
    and tag log2(m2 q), inside [k - 1, k + 1 + log2(m2 q^r / (q^r - 1))).
    """
    order = q ** r - 1
    if q < 2 or r < 1 or order < 2:
        raise DegenerateParameters(f"q^r - 1 must be >= 2 (q={q}, r={r})")
    if m2 < 1 or order % m2:
        raise BadFactorization(f"m2 = {m2} does not divide q^r - 1 = {order}")
    m1 = order // m2
    if math.gcd(m1, m2) != 1:
        raise NotCoprime(f"gcd(m1, m2) = gcd({m1}, {m2}) = {math.gcd(m1, m2)}")
    rho = Fraction(q ** (r - 1), order)
    k = floor_log2(1 / rho)
    u = floor_log2(Fraction(m1))
    return Witness('trace', q, r, m1, m2, rho, k, u,
                   tag=LogValue(Fraction(0), Fraction(m2 * q)),
                   window_lower=LogValue(Fraction(k - 1)),
                   window_upper=LogValue(Fraction(k + 1), Fraction(m2 * q ** r, order)),
                   upper_strict=True)


@dataclass(frozen=True)
class TagWindow:
    k: int
    u: int
    model: str
    lower: LogValue
    upper: Optional[LogValue] = None
    witness: Optional[Witness] = None

    def as_dict(self) -> dict:
        return {'k': self.k, 'u': self.u, 'model': self.model, 'lower': self.lower.as_dict(),
                'upper': self.upper.as_dict() if self.upper else None,
                'witness': self.witness.as_dict() if self.witness else None}


def effective_tag_window(k: int, u: int, model: str, witness: Optional[Witness] = None) -> TagWindow:
    """k - 2^(1-u) (weak) or 2k - 2^(1-u) (strong) bits; the witness supplies the achieved tag."""
    if k < 1 or u < 1:
        raise DegenerateParameters(f"k and u must be >= 1 (k={k}, u={u})")
    if model not in (WEAK, STRONG):
        raise BadModel(f"tag window is defined for 'weak' and 'strong', got {model!r}")
    base = k if model == WEAK else 2 * k
    lower = LogValue(Fraction(base) - Fraction(2) ** (1 - u))
    return TagWindow(k, u, model, lower, witness.tag if witness else None, witness)
