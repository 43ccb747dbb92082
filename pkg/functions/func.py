import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from algebra.groups import GroupSpec
from utils.errors import BadTableLength, IndexOutOfRange
from utils.helpers import check_size

logger = logging.getLogger(__name__)

MM = 'MM'
DILLON = 'Dillon'
DILLON_DUAL = 'DillonDual'
TRACE_MULT = 'TraceMult'
CDFPW = 'CDFPW'
TABLE = 'Table'


@dataclass(frozen=True, eq=False)
class Func:
    """
    A map A1 x A2 -> B together with the source/randomness split it is used with.

    evaluator takes (a1, a2) indices and returns a B index. values holds the
    materialized map aligned with the joint domain Prod(A1;A2), whose index
    is a1 + |A1| * a2.
    """
    a1: GroupSpec
    a2: GroupSpec
    b: GroupSpec
    origin: str
    evaluator: Callable[[int, int], int] = field(repr=False)
    notes: Dict[str, str] = field(default_factory=dict)

    @cached_property
    def domain(self) -> GroupSpec:
        return GroupSpec.product(self.a1, self.a2)

    @property
    def n1(self) -> int:
        return self.a1.order

    @property
    def n2(self) -> int:
        return self.a2.order

    @property
    def label(self) -> str:
        return self.notes.get('id', self.origin.lower())

    def joint(self, a1: int, a2: int) -> int:
        return a1 + self.n1 * a2

    def split_joint(self, idx: int) -> Tuple[int, int]:
        a2, a1 = divmod(idx, self.n1)
        return a1, a2

    def evaluate(self, a1: int, a2: int) -> int:
        self.a1.check_index(a1, 'A1 index')
        self.a2.check_index(a2, 'A2 index')
        return self.evaluator(a1, a2)

    @cached_property
    def values(self) -> np.ndarray:
        n = self.domain.order
        check_size(n, f"table of {self.label}")
        out = np.empty(n, dtype=np.int64)
        for idx in range(n):
            a1, a2 = self.split_joint(idx)
            out[idx] = self.evaluator(a1, a2)
        if n and (out.min() < 0 or out.max() >= self.b.order):
            raise IndexOutOfRange(f"{self.label} produced an output outside {self.b}")
        logger.debug("Materialized %s over %d points", self.label, n)
        return out

    def to_table(self) -> List[int]:
        """Outputs in row-major order, a1 outer."""
        vals = self.values
        return [int(vals[self.joint(a1, a2)]) for a1 in range(self.n1) for a2 in range(self.n2)]


def func_from_table(dom_a1: GroupSpec, dom_a2: GroupSpec, cod_b: GroupSpec,
                    table: Sequence[int], notes: Dict[str, str] = None) -> Func:
    """Table-backed function; table is row-major with a1 as the outer loop."""
    n1, n2 = dom_a1.order, dom_a2.order
    table = [int(v) for v in table]
    if len(table) != n1 * n2:
        raise BadTableLength(f"table has {len(table)} entries, expected |A1|*|A2| = {n1 * n2}")
    for pos, v in enumerate(table):
        if not 0 <= v < cod_b.order:
            raise IndexOutOfRange(f"table entry {pos} = {v} outside {cod_b} of order {cod_b.order}")
    frozen = tuple(table)
    return Func(dom_a1, dom_a2, cod_b, TABLE, lambda a1, a2: frozen[a1 * n2 + a2],
                dict(notes or {}, id=(notes or {}).get('id', 'table')))


def leaf_indices(spec: GroupSpec, idx: int) -> List[int]:
    """Coordinates of a GF(q)^k element, or [idx] for a single leaf."""
    if spec.kind == 'product':
        return list(spec.split(idx))
    return [idx]
