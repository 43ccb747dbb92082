import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from algebra.field import prime_power
from utils.errors import (
    BadFactorization, CharacteristicDividesDegree, DegenerateField, NotCoprime, ValidationError,
)

SUBCOMMANDS = ('build', 'spectrum', 'eval', 'bounds', 'derive', 'export-table', 'import-table', 'report')
FAMILIES = ('mm', 'dillon', 'dillon-dual', 'trace-mult', 'cdfpw', 'table', 'random')
FORMATS = ('json', 'csv', 'text', 'xlsx')

# Output formats each subcommand can emit; the first is the default
_FORMATS_FOR = {
    'build': ('text', 'json'),
    'spectrum': ('csv', 'text', 'json'),
    'eval': ('json', 'text', 'xlsx'),
    'bounds': ('json', 'text', 'xlsx'),
    'derive': ('json', 'text'),
    'export-table': ('text',),
    'import-table': ('text', 'json'),
    'report': ('json', 'text', 'xlsx'),
}


def _require(value, name: str, family: str):
    if value is None:
        raise ValidationError(f"--{name} is required for family {family}")
    return value


class CommandSpec(BaseModel):
    """One CLI invocation, checked against the family's preconditions before anything is built."""
    model_config = ConfigDict(extra='forbid')

    subcommand: Literal[SUBCOMMANDS]
    family: Optional[Literal[FAMILIES]] = None
    q: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None
    m1: Optional[int] = None
    m2: Optional[int] = None
    split: Literal['weak', 'strong'] = 'weak'
    seed: int = 0
    format: Optional[Literal[FORMATS]] = None
    output: Optional[str] = None
    table: Optional[str] = None
    max_cells: Optional[int] = Field(default=None, gt=0)
    workers: Optional[int] = Field(default=None, ge=1)

    @property
    def output_format(self) -> str:
        return self.format or _FORMATS_FOR[self.subcommand][0]

    @model_validator(mode='after')
    def check_combination(self):
        if self.format is not None and self.format not in _FORMATS_FOR[self.subcommand]:
            raise ValidationError(f"{self.subcommand} cannot emit format {self.format}, "
                                  f"choose from {', '.join(_FORMATS_FOR[self.subcommand])}")
        if self.subcommand == 'import-table':
            _require(self.table, 'table', 'import-table')
            return self
        family = self.family
        if family is None:
            raise ValidationError(f"--family is required for {self.subcommand}")
        if family == 'table':
            _require(self.table, 'table', family)
        elif family == 'random':
            pass
        elif family == 'cdfpw':
            self._check_cdfpw()
        else:
            self._check_field_family(family)
        return self

    def _check_cdfpw(self):
        q = _require(self.q, 'q', 'cdfpw')
        t = _require(self.t, 't', 'cdfpw')
        p, _ = prime_power(q)
        if t < 1:
            raise ValidationError(f"t must be >= 1, got {t}")
        if (t + 2) % p == 0:
            raise CharacteristicDividesDegree(f"characteristic {p} divides t + 2 = {t + 2}")

    def _check_field_family(self, family: str):
        q = _require(self.q, 'q', family)
        r = _require(self.r, 'r', family)
        prime_power(q)
        if r < 1:
            raise ValidationError(f"r must be >= 1, got {r}")
        if family == 'mm':
            return
        if q ** r < 3:
            raise DegenerateField(f"q^r = {q ** r} is too small for {family}, need q^r >= 3")
        if family == 'trace-mult':
            n = q ** r - 1
            m2 = self.m2 if self.m2 is not None else 1
            m1 = self.m1 if self.m1 is not None else (n // m2 if m2 >= 1 and n % m2 == 0 else 0)
            if m1 < 1 or m2 < 1 or m1 * m2 != n:
                raise BadFactorization(f"m1 * m2 = {m1} * {m2} must equal q^r - 1 = {n}")
            if math.gcd(m1, m2) != 1:
                raise NotCoprime(f"gcd(m1, m2) = gcd({m1}, {m2}) = {math.gcd(m1, m2)}")
