"""
Highly nonlinear functions used to build systematic AMD codes.

Every constructor returns a Func whose A1 x A2 split is the one the matching
code construction uses. GF(q)^k groups are products of additive copies of
GF(q), coordinate 1 varying fastest.
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from algebra.field import FieldDesc, FieldElem, dual_basis, field_make, field_over, prime_power
from algebra.groups import GroupSpec, crt_split, cyclic_iso
from functions.func import CDFPW, DILLON, DILLON_DUAL, MM, TRACE_MULT, Func, leaf_indices
from nonlinearity.spectrum import is_balanced
from utils.errors import (
    CharacteristicDividesDegree, DegenerateField, IndexOutOfRange, NotAdditive,
    NotBalanced, ValidationError, ZeroMap,
)
from utils.helpers import check_size

logger = logging.getLogger(__name__)

WEAK = 'weak'
STRONG = 'strong'


def gf(q: int) -> FieldDesc:
    p, k = prime_power(q)
    return field_make(p, k)


def _check_split(split: str):
    if split not in (WEAK, STRONG):
        raise ValidationError(f"split must be 'weak' or 'strong', got {split!r}")


def _block_groups(Fq: FieldDesc, r: int, split: str):
    if split == WEAK:
        return GroupSpec.vector_space(Fq, 2 * r - 1), GroupSpec.field_additive(Fq)
    return GroupSpec.vector_space(Fq, r), GroupSpec.vector_space(Fq, r)


def _coordinates(a1_spec, a2_spec, a1, a2) -> List[int]:
    return leaf_indices(a1_spec, a1) + leaf_indices(a2_spec, a2)


def trace_table(F: FieldDesc) -> List[int]:
    """Relative trace GF(q^r) -> GF(q) as a table of base-field indices."""
    return [F.to_base(F.trace(x)) for x in range(F.order)]


def mm_func(q: int, r: int, split: str = WEAK) -> Func:
    """Maiorana-McFarland f(x_1..x_2r) = sum_{i<=r} x_i x_{i+r} over GF(q)."""
    _check_split(split)
    if r < 1:
        raise ValidationError(f"r must be >= 1, got {r}")
    check_size(q ** (2 * r), f"MM function GF({q})^{2 * r}")
    Fq = gf(q)
    a1_spec, a2_spec = _block_groups(Fq, r, split)

    def evaluate(a1, a2):
        x = _coordinates(a1_spec, a2_spec, a1, a2)
        acc = 0
        for i in range(r):
            acc = Fq.add(acc, Fq.mul(x[i], x[i + r]))
        return acc

    return Func(a1_spec, a2_spec, GroupSpec.field_additive(Fq), MM, evaluate,
                {'id': f"mm-q{q}-r{r}-{split}", 'split': split})


def _pack(F: FieldDesc, coords: Sequence[int], basis: Sequence[int]) -> int:
    acc = 0
    for c, b in zip(coords, basis):
        if c:
            acc = F.add(acc, F.mul(F.from_base(c), b))
    return acc


def _require_nondegenerate(F: FieldDesc, q: int, r: int):
    if F.order < 3:
        raise DegenerateField(f"q^r = {F.order} is too small, x^(q^r-2) needs q^r >= 3 (q={q}, r={r})")


def dillon_func(q: int, r: int, g: Optional[Sequence[int]] = None, split: str = WEAK) -> Func:
    """
    Dillon f(x, y) = g(x * y^(q^r - 2)) on GF(q^r)^2, g balanced GF(q^r) -> GF(q).

    X and Y are packed from their GF(q) coordinates in the polynomial basis
    {1, z, ..., z^(r-1)}; 0^(q^r-2) = 0.
    """
    _check_split(split)
    F = field_over(q, r)
    _require_nondegenerate(F, q, r)
    check_size(F.order ** 2, f"Dillon function over GF({q}^{r})^2")
    Fq = F.base_field
    if g is None:
        g = trace_table(F)
        g_name = 'trace'
    else:
        g = [int(v) for v in g]
        if len(g) != F.order or any(not 0 <= v < q for v in g):
            raise IndexOutOfRange(f"g must map all {F.order} elements of GF({q}^{r}) into GF({q})")
        if not is_balanced(g, q):
            raise NotBalanced(f"g is not balanced onto GF({q})")
        g_name = 'table'
    g = tuple(g)
    basis = [e.index for e in F.polynomial_basis()]
    a1_spec, a2_spec = _block_groups(Fq, r, split)
    e = F.order - 2

    def evaluate(a1, a2):
        c = _coordinates(a1_spec, a2_spec, a1, a2)
        x = _pack(F, c[:r], basis)
        y = _pack(F, c[r:], basis)
        return g[F.mul(x, F.pow(y, e))]

    return Func(a1_spec, a2_spec, GroupSpec.field_additive(Fq), DILLON, evaluate,
                {'id': f"dillon-q{q}-r{r}-{split}", 'split': split, 'g': g_name,
                 'packing': 'polynomial basis 1, z, ..., z^(r-1)'})


def dillon_dual_func(q: int, r: int, basis: Optional[Sequence[FieldElem]] = None) -> Func:
    """
    f(x, y) = tr(x^(q^r-2) * y) with x = sum x_i a_i and y = sum y_i b_i for a
    pair of dual bases {a_i}, {b_i} of GF(q^r) over GF(q).
    """
    F = field_over(q, r)
    _require_nondegenerate(F, q, r)
    check_size(F.order ** 2, f"dual-basis Dillon function over GF({q}^{r})^2")
    Fq = F.base_field
    if basis is None:
        basis = F.polynomial_basis()
    dual = dual_basis(F, basis)
    alpha = [a.index for a in basis]
    beta = [b.index for b in dual]
    block = GroupSpec.vector_space(Fq, r)
    e = F.order - 2

    def evaluate(a1, a2):
        x = _pack(F, leaf_indices(block, a1), alpha)
        y = _pack(F, leaf_indices(block, a2), beta)
        return F.to_base(F.trace(F.mul(F.pow(x, e), y)))

    return Func(block, block, GroupSpec.field_additive(Fq), DILLON_DUAL, evaluate,
                {'id': f"dillon-dual-q{q}-r{r}", 'split': STRONG,
                 'basis': ';'.join(str(a) for a in alpha), 'dual': ';'.join(str(b) for b in beta)})


def _check_additive(F: FieldDesc, Fq: FieldDesc, L: Sequence[int]):
    field_group = GroupSpec.field_additive(F)
    base_group = GroupSpec.field_additive(Fq)
    values = np.asarray(L, dtype=np.int64)
    for x in range(F.order):
        if not np.array_equal(values[field_group.shift_all(x)], base_group.add_vec(values, int(values[x]))):
            raise NotAdditive(f"L(x + y) != L(x) + L(y) for x = {x}")


def trace_mult_func(q: int, r: int, L: Optional[Sequence[int]] = None,
                    m1: Optional[int] = None, m2: int = 1) -> Func:
    """
    A nonzero additive L: GF(q^r) -> GF(q) read on the multiplicative group:
    (a1, a2) in Z(m1) x Z(m2) -> CRT -> Z(q^r - 1) -> generator power -> L.
    """
    F = field_over(q, r)
    _require_nondegenerate(F, q, r)
    Fq = F.base_field
    n = F.order - 1
    if m1 is None:
        m1 = n // m2 if m2 >= 1 and n % m2 == 0 else 0
    crt = crt_split(n, m1, m2)
    phi = cyclic_iso(F)
    if L is None:
        L = trace_table(F)
        l_name = 'trace'
    else:
        L = [int(v) for v in L]
        if len(L) != F.order or any(not 0 <= v < q for v in L):
            raise IndexOutOfRange(f"L must map all {F.order} elements of GF({q}^{r}) into GF({q})")
        if not any(L):
            raise ZeroMap("L is the zero map")
        _check_additive(F, Fq, L)
        l_name = 'table'
    L = tuple(L)

    def evaluate(a1, a2):
        k = crt.backward(crt.target.join((a1, a2)))
        return L[phi.forward(k) + 1]

    return Func(GroupSpec.cyclic(m1), GroupSpec.cyclic(m2), GroupSpec.field_additive(Fq), TRACE_MULT,
                evaluate, {'id': f"trace-mult-q{q}-r{r}-m{m1}x{m2}", 'L': l_name})


def cdfpw_func(q: int, t: int) -> Func:
    """h(S, x) = x^(t+2) + sum_{1<=i<=t} s_i x^i with S in GF(q)^t and x in GF(q)."""
    if t < 1:
        raise ValidationError(f"t must be >= 1, got {t}")
    p, _ = prime_power(q)
    if (t + 2) % p == 0:
        raise CharacteristicDividesDegree(f"characteristic {p} divides t + 2 = {t + 2}")
    check_size(q ** (t + 1), f"CDFPW function over GF({q})^{t + 1}")
    Fq = gf(q)
    a1_spec = GroupSpec.vector_space(Fq, t)
    a2_spec = GroupSpec.field_additive(Fq)

    def evaluate(a1, a2):
        s = leaf_indices(a1_spec, a1)
        acc, power = 0, 1
        for si in s:
            power = Fq.mul(power, a2)
            acc = Fq.add(acc, Fq.mul(si, power))
        return Fq.add(acc, Fq.pow(a2, t + 2))

    return Func(a1_spec, a2_spec, GroupSpec.field_additive(Fq), CDFPW, evaluate,
                {'id': f"cdfpw-q{q}-t{t}"})
