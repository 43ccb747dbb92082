"""
Finite abelian group descriptors with canonical element indices.

Indices are little-endian mixed radix: in Prod(A;B) the A component varies
fastest. Scalar arithmetic works per kind in plain Python; the numpy tables
(coords, rank_to_index) back the vectorized enumeration kernels.
"""
import logging
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra.field import FieldDesc, field_make, require_multiplicative
from utils.errors import (
    BadFactorization, IndexOutOfRange, NotCoprime, SpecParseError, ValidationError,
)
from utils.helpers import check_size

logger = logging.getLogger(__name__)

CYCLIC = 'cyclic'
PRODUCT = 'product'
FIELD_ADD = 'field_add'
FIELD_MULT = 'field_mult'


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int = 0
    components: Tuple['GroupSpec', ...] = ()
    field: Optional[FieldDesc] = None

    # -- constructors -------------------------------------------------------
    @staticmethod
    def cyclic(n: int) -> 'GroupSpec':
        if n < 1:
            raise ValidationError(f"cyclic group order must be >= 1, got {n}")
        return GroupSpec(CYCLIC, n=n)

    @staticmethod
    def product(*components: 'GroupSpec') -> 'GroupSpec':
        if not components:
            raise ValidationError("product of no groups")
        return GroupSpec(PRODUCT, components=tuple(components))

    @staticmethod
    def field_additive(F: FieldDesc) -> 'GroupSpec':
        return GroupSpec(FIELD_ADD, field=F)

    @staticmethod
    def field_mult(F: FieldDesc) -> 'GroupSpec':
        require_multiplicative(F)
        return GroupSpec(FIELD_MULT, field=F)

    @staticmethod
    def vector_space(F: FieldDesc, k: int) -> 'GroupSpec':
        """GF(q)^k as a product of k additive copies; k = 1 gives the field itself."""
        if k < 1:
            raise ValidationError(f"vector space dimension must be >= 1, got {k}")
        leaf = GroupSpec.field_additive(F)
        return leaf if k == 1 else GroupSpec.product(*([leaf] * k))

    # -- shape --------------------------------------------------------------
    @cached_property
    def order(self) -> int:
        if self.kind == CYCLIC:
            return self.n
        if self.kind == FIELD_ADD:
            return self.field.order
        if self.kind == FIELD_MULT:
            return self.field.order - 1
        return math.prod(c.order for c in self.components)

    def __str__(self):
        return self.spec_str()

    def spec_str(self) -> str:
        if self.kind == CYCLIC:
            return f"Z({self.n})"
        if self.kind == FIELD_ADD:
            return self.field.spec_str()
        if self.kind == FIELD_MULT:
            return 'GF*' + self.field.spec_str()[2:]
        return 'Prod(' + ';'.join(c.spec_str() for c in self.components) + ')'

    def elements(self):
        return range(self.order)

    def element(self, idx: int) -> 'GroupElem':
        return GroupElem(self, idx)

    def check_index(self, idx: int, what: str = 'index'):
        if not 0 <= idx < self.order:
            raise IndexOutOfRange(f"{what} {idx} outside {self.spec_str()} of order {self.order}")

    # -- scalar arithmetic --------------------------------------------------
    def split(self, idx: int) -> Tuple[int, ...]:
        parts = []
        for c in self.components:
            idx, part = divmod(idx, c.order)
            parts.append(part)
        return tuple(parts)

    def join(self, parts: Sequence[int]) -> int:
        idx = 0
        for c, part in zip(reversed(self.components), reversed(parts)):
            idx = idx * c.order + part
        return idx

    def add(self, a: int, b: int) -> int:
        if self.kind == CYCLIC:
            return (a + b) % self.n
        if self.kind == FIELD_ADD:
            return self.field.add(a, b)
        if self.kind == FIELD_MULT:
            return self.field.mul(a + 1, b + 1) - 1
        return self.join([c.add(x, y) for c, x, y in zip(self.components, self.split(a), self.split(b))])

    def neg(self, a: int) -> int:
        if self.kind == CYCLIC:
            return (-a) % self.n
        if self.kind == FIELD_ADD:
            return self.field.neg(a)
        if self.kind == FIELD_MULT:
            return self.field.inv(a + 1) - 1
        return self.join([c.neg(x) for c, x in zip(self.components, self.split(a))])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    zero = 0

    # -- vectorized tables --------------------------------------------------
    @cached_property
    def moduli(self) -> np.ndarray:
        """Moduli of the additive coordinates of this group."""
        if self.kind == CYCLIC:
            return np.array([self.n], dtype=np.int64)
        if self.kind == FIELD_ADD:
            return np.full(self.field.r, self.field.p, dtype=np.int64)
        if self.kind == FIELD_MULT:
            return np.array([self.order], dtype=np.int64)
        return np.concatenate([c.moduli for c in self.components])

    @cached_property
    def radix(self) -> np.ndarray:
        weights = np.ones(len(self.moduli), dtype=np.int64)
        for i in range(1, len(weights)):
            weights[i] = weights[i - 1] * self.moduli[i - 1]
        return weights

    @cached_property
    def coords(self) -> np.ndarray:
        """(order, D) table of additive coordinates for every index."""
        check_size(self.order * len(self.moduli), f"coordinate table of {self.spec_str()}")
        idx = np.arange(self.order, dtype=np.int64)
        if self.kind == CYCLIC:
            return idx.reshape(-1, 1)
        if self.kind == FIELD_ADD:
            return np.stack([(idx // self.field.p ** i) % self.field.p for i in range(self.field.r)], axis=1)
        if self.kind == FIELD_MULT:
            log = np.array(self.field.log_table, dtype=np.int64)
            return log[idx + 1].reshape(-1, 1)
        blocks, rest = [], idx
        for c in self.components:
            blocks.append(c.coords[rest % c.order])
            rest = rest // c.order
        return np.concatenate(blocks, axis=1)

    @cached_property
    def rank_to_index(self) -> np.ndarray:
        ranks = self.coords @ self.radix
        out = np.empty(self.order, dtype=np.int64)
        out[ranks] = np.arange(self.order, dtype=np.int64)
        return out

    def _from_coords(self, coords: np.ndarray) -> np.ndarray:
        return self.rank_to_index[(coords % self.moduli) @ self.radix]

    def add_vec(self, xs: np.ndarray, delta: int) -> np.ndarray:
        return self._from_coords(self.coords[xs] + self.coords[delta])

    def sub_vec(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        return self._from_coords(self.coords[us] - self.coords[vs])

    def shift_all(self, delta: int) -> np.ndarray:
        """Indices of x + delta for every x, in index order."""
        return self._from_coords(self.coords + self.coords[delta])


@dataclass(frozen=True)
class GroupElem:
    spec: GroupSpec
    index: int

    def __post_init__(self):
        self.spec.check_index(self.index, 'group element')

    def _other(self, other: 'GroupElem') -> int:
        if not isinstance(other, GroupElem) or other.spec != self.spec:
            raise ValidationError(f"cannot combine elements of {self.spec} and {getattr(other, 'spec', other)}")
        return other.index

    def __add__(self, other):
        return GroupElem(self.spec, self.spec.add(self.index, self._other(other)))

    def __sub__(self, other):
        return GroupElem(self.spec, self.spec.sub(self.index, self._other(other)))

    def __neg__(self):
        return GroupElem(self.spec, self.spec.neg(self.index))

    def is_zero(self) -> bool:
        return self.index == 0


@dataclass(frozen=True, eq=False)
class Iso:
    source: GroupSpec
    target: GroupSpec
    forward_map: Tuple[int, ...]
    backward_map: Tuple[int, ...]

    def forward(self, i: int) -> int:
        return self.forward_map[i]

    def backward(self, j: int) -> int:
        return self.backward_map[j]

    def is_bijective_homomorphism(self) -> bool:
        """Exhaustive check of both inverse laws and of forward(u+v) = forward(u)+forward(v)."""
        n = self.source.order
        if n != self.target.order:
            return False
        if any(self.backward_map[self.forward_map[i]] != i for i in range(n)):
            return False
        if any(self.forward_map[self.backward_map[j]] != j for j in range(n)):
            return False
        for u in range(n):
            fu = self.forward_map[u]
            for v in range(n):
                if self.forward_map[self.source.add(u, v)] != self.target.add(fu, self.forward_map[v]):
                    return False
        return True


def cyclic_iso(F: FieldDesc) -> Iso:
    """Z(p^r - 1) -> GF*(p^r) with i -> generator^i; backward is the discrete log."""
    target = GroupSpec.field_mult(F)
    check_size(F.order, f"cyclic isomorphism of {F.spec_str()}")
    exp, log = F.tables
    forward = tuple(x - 1 for x in exp)
    backward = tuple(log[j + 1] for j in range(target.order))
    return Iso(GroupSpec.cyclic(target.order), target, forward, backward)


def crt_split(n: int, m1: int, m2: int) -> Iso:
    """Z(n) -> Prod(Z(m1);Z(m2)) with x -> (x mod m1, x mod m2)."""
    if m1 < 1 or m2 < 1 or m1 * m2 != n:
        raise BadFactorization(f"{m1} * {m2} != {n}")
    if math.gcd(m1, m2) != 1:
        raise NotCoprime(f"gcd({m1}, {m2}) = {math.gcd(m1, m2)}")
    check_size(n, f"CRT split of Z({n})")
    target = GroupSpec.product(GroupSpec.cyclic(m1), GroupSpec.cyclic(m2))
    forward = tuple(target.join((x % m1, x % m2)) for x in range(n))
    # x = a + m1 * ((b - a) * m1^-1 mod m2)
    inv_m1 = pow(m1, -1, m2) if m2 > 1 else 0
    backward = []
    for j in range(n):
        a, b = target.split(j)
        backward.append(a + m1 * (((b - a) * inv_m1) % m2))
    return Iso(GroupSpec.cyclic(n), target, forward, tuple(backward))


# -- textual form -----------------------------------------------------------
_FIELD_RE = re.compile(r'^GF(\*?)\((\d+)\^(\d+)\|modulus=([\d,]+)\)$')
_CYCLIC_RE = re.compile(r'^Z\((\d+)\)$')


def _split_top(body: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == ';' and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def parse_group_spec(text: str) -> GroupSpec:
    text = text.strip()
    m = _CYCLIC_RE.match(text)
    if m:
        return GroupSpec.cyclic(int(m.group(1)))
    m = _FIELD_RE.match(text)
    if m:
        star, p, r, modulus = m.groups()
        F = field_make(int(p), int(r), [int(c) for c in modulus.split(',')])
        return GroupSpec.field_mult(F) if star else GroupSpec.field_additive(F)
    if text.startswith('Prod(') and text.endswith(')'):
        return GroupSpec.product(*[parse_group_spec(part) for part in _split_top(text[5:-1])])
    raise SpecParseError(f"cannot parse group spec {text!r}")
