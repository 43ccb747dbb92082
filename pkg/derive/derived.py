"""
Functions extracted from systematic AMD codes, and the nonlinearity bounds
they obey relative to the code's success probabilities.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from algebra.groups import GroupSpec
from amd.code import STRONGER, WEAK, AmdCode, build_code
from amd.evaluator import evaluate
from functions.func import Func, func_from_table
from nonlinearity.spectrum import nonlinearity_of
from utils.errors import BadSource, NotSystematic
from utils.helpers import rational_dict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EncodingTable:
    """Valid encodings (s1, s2, tag) of a code, possibly read from a file."""
    a1: GroupSpec
    a2: GroupSpec
    b: GroupSpec
    triples: Tuple[Tuple[int, int, int], ...]
    label: str = 'table'

    @classmethod
    def from_code(cls, code: AmdCode) -> 'EncodingTable':
        f = code.func
        triples = tuple(g.as_tuple() for group in code.valid_encodings().values() for g in group)
        return cls(f.a1, f.a2, f.b, triples, code.code_id)


@dataclass(frozen=True, eq=False)
class DerivedFunction:
    fe: Func
    restricted_nonlinearities: Dict[int, Fraction] = field(default_factory=dict)
    full_nonlinearity: Optional[Fraction] = None


def extract_function(source: Union[AmdCode, EncodingTable]) -> DerivedFunction:
    """f_E(s1, s2) = the unique tag t with (s1, s2, t) a valid encoding."""
    table = EncodingTable.from_code(source) if isinstance(source, AmdCode) else source
    n1, n2 = table.a1.order, table.a2.order
    tags: Dict[Tuple[int, int], List[int]] = {}
    for s1, s2, tag in table.triples:
        table.a1.check_index(s1, 'source component')
        table.a2.check_index(s2, 'randomness component')
        table.b.check_index(tag, 'tag component')
        tags.setdefault((s1, s2), []).append(tag)
    rows = []
    for s1 in range(n1):
        for s2 in range(n2):
            found = sorted(set(tags.get((s1, s2), [])))
            if len(found) != 1:
                raise NotSystematic(f"({s1}, {s2}) has {len(found)} valid tags {found}, expected exactly one")
            rows.append(found[0])
    fe = func_from_table(table.a1, table.a2, table.b, rows, {'id': f"fE-{table.label}"})
    return DerivedFunction(fe)


def _section(d: DerivedFunction, s: int) -> Func:
    """x -> f_E(s, x) over A2, as a table on Z(1) x A2."""
    fe = d.fe
    row = [fe.evaluate(s, x) for x in range(fe.n2)]
    return func_from_table(GroupSpec.cyclic(1), fe.a2, fe.b, row, {'id': f"{fe.label}-s{s}"})


def restricted_nonlinearity(d: DerivedFunction, s: int) -> Fraction:
    if not 0 <= s < d.fe.n1:
        raise BadSource(f"source {s} outside A1 of order {d.fe.n1}")
    return nonlinearity_of(_section(d, s))


def analyze(d: DerivedFunction, workers: int = 1) -> DerivedFunction:
    """Fill in every restricted nonlinearity and the nonlinearity of f_E."""
    restricted = {s: restricted_nonlinearity(d, s) for s in range(d.fe.n1)}
    return DerivedFunction(d.fe, restricted, nonlinearity_of(d.fe, workers))


@dataclass(frozen=True)
class Theorem3Report:
    lhs: Fraction
    rhs: Fraction
    weak_rho: Fraction
    per_source: List[Fraction]

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def as_dict(self) -> dict:
        return {'lhs': rational_dict(self.lhs), 'rhs': rational_dict(self.rhs), 'holds': self.holds,
                'weakRho': rational_dict(self.weak_rho),
                'perSource': [dict(source=s, nonlinearity=rational_dict(v)) for s, v in enumerate(self.per_source)]}


@dataclass(frozen=True)
class Theorem4Report:
    stronger_rho: Fraction
    fe_nonlinearity: Fraction

    @property
    def holds(self) -> bool:
        return self.fe_nonlinearity <= self.stronger_rho

    def as_dict(self) -> dict:
        return {'strongerRho': rational_dict(self.stronger_rho),
                'fENonlinearity': rational_dict(self.fe_nonlinearity), 'holds': self.holds}


def theorem3_check(code: AmdCode, workers: int = 1) -> Theorem3Report:
    """P_fE <= max({weak rho} and every restricted nonlinearity); both sides reported even when slack."""
    d = analyze(extract_function(code), workers)
    weak_rho = evaluate(code, {WEAK}, workers).weak_rho
    per_source = [d.restricted_nonlinearities[s] for s in range(code.m)]
    report = Theorem3Report(d.full_nonlinearity, max([weak_rho] + per_source), weak_rho, per_source)
    logger.info("Nonlinearity of fE for %s: %s <= %s holds=%s", code.code_id, report.lhs, report.rhs, report.holds)
    return report


def theorem4_check(code: AmdCode, workers: int = 1) -> Theorem4Report:
    """P_fE <= stronger-model success probability."""
    fe = extract_function(code).fe
    report = Theorem4Report(evaluate(code, {STRONGER}, workers).stronger_rho, nonlinearity_of(fe, workers))
    logger.info("Stronger model bound for %s: %s <= %s holds=%s",
                code.code_id, report.fe_nonlinearity, report.stronger_rho, report.holds)
    return report


def code_from_table(table: EncodingTable) -> AmdCode:
    return build_code(extract_function(table).fe)


def table_from_rows(a1: GroupSpec, a2: GroupSpec, b: GroupSpec, rows: Sequence[Tuple[int, int, int]],
                    label: str = 'table') -> EncodingTable:
    return EncodingTable(a1, a2, b, tuple((int(x), int(y), int(z)) for x, y, z in rows), label)
