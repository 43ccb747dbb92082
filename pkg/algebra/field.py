"""
GF(p^r) in polynomial basis: construction, arithmetic, relative traces, dual bases.

Elements are addressed by their canonical index sum(c_i * p^i) over the
polynomial-basis coefficients c_0..c_{r-1}.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from utils.errors import (
    DegenerateField, FieldDivisionByZero, FieldMismatch, NonPrime, NotABasis,
    Reducible, ValidationError,
)
from utils.helpers import check_size

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> List[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def prime_power(q: int) -> Tuple[int, int]:
    """Split q = p^k, raising NonPrime if q is not a prime power."""
    if q < 2:
        raise NonPrime(f"q={q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NonPrime(f"q={q} is not a prime power")
    p = factors[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


def _poly_mod(num: List[int], den: Sequence[int], p: int) -> List[int]:
    """Remainder of num by a monic den over GF(p)."""
    num = list(num)
    deg = len(den) - 1
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i] % p
        if c:
            shift = i - deg
            for j, d in enumerate(den):
                num[shift + j] = (num[shift + j] - c * d) % p
    return [c % p for c in num[:deg]]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= r/2."""
    r = len(modulus) - 1
    if r <= 1:
        return r == 1
    for k in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            divisor = list(low) + [1]
            if not any(_poly_mod(modulus, divisor, p)):
                return False
    return True


class FieldDesc:
    """
    Descriptor of GF(p^r) with a verified irreducible modulus and a generator.

    base_degree d (d | r) designates the subfield GF(p^d) that relative traces
    land in; d = 1 is the prime subfield.
    """

    def __init__(self, p: int, r: int, modulus: Tuple[int, ...], base_degree: int = 1):
        self.p = p
        self.r = r
        self.modulus = tuple(modulus)
        self.base_degree = base_degree
        self.order = p ** r
        self.generator = self._find_generator()

    # -- identity -----------------------------------------------------------
    @property
    def key(self):
        return (self.p, self.r, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldDesc) and self.key == other.key and self.base_degree == other.base_degree

    def __hash__(self):
        return hash((self.key, self.base_degree))

    def __repr__(self):
        return f"FieldDesc({self.spec_str()}, base_degree={self.base_degree})"

    def spec_str(self) -> str:
        return f"GF({self.p}^{self.r}|modulus={','.join(str(c) for c in self.modulus)})"

    @property
    def q(self) -> int:
        """Order of the designated base subfield."""
        return self.p ** self.base_degree

    @property
    def relative_degree(self) -> int:
        return self.r // self.base_degree

    # -- coordinates --------------------------------------------------------
    def coeffs(self, idx: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.r):
            idx, c = divmod(idx, self.p)
            out.append(c)
        return tuple(out)

    def index(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (c % self.p)
        return idx

    def element(self, idx: int) -> 'FieldElem':
        if not 0 <= idx < self.order:
            raise ValidationError(f"element index {idx} outside {self.spec_str()}")
        return FieldElem(self.coeffs(idx), self)

    def elements(self):
        return (self.element(i) for i in range(self.order))

    @property
    def one(self) -> int:
        return 1

    # -- index arithmetic ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.index([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.index([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _poly_mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.index(_poly_mod(prod, self.modulus, self.p))

    def _poly_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    @cached_property
    def tables(self) -> Tuple[List[int], List[int]]:
        """(exp, log) tables for the generator; log[0] is -1."""
        check_size(self.order, f"log table of {self.spec_str()}")
        exp = [0] * (self.order - 1)
        log = [-1] * self.order
        x = 1
        for i in range(self.order - 1):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, self.generator)
        logger.debug("Built log table for %s", self.spec_str())
        return exp, log

    @property
    def log_table(self) -> List[int]:
        return self.tables[1]

    @property
    def exp_table(self) -> List[int]:
        return self.tables[0]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self.tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero(f"inverse of 0 in {self.spec_str()}")
        exp, log = self.tables
        return exp[(-log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValidationError(f"negative exponent {e}")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.order - 1
        factors = prime_factors(n)
        for low in itertools.product(range(self.p), repeat=self.r):
            g = self.index(low)
            if g == 0:
                continue
            if all(self._poly_pow(g, n // f) != 1 for f in factors):
                return g
        raise Reducible(f"no generator found, modulus {self.modulus} is not irreducible")

    # -- traces and subfields ----------------------------------------------
    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (self.base_degree * times))

    def trace(self, a: int) -> int:
        total, x = 0, a
        for _ in range(self.relative_degree):
            total = self.add(total, x)
            x = self.frobenius(x)
        return total

    @cached_property
    def base_field(self) -> 'FieldDesc':
        return field_make(self.p, self.base_degree)

    @cached_property
    def _embedding(self) -> Tuple[List[int], dict]:
        base = self.base_field
        root = None
        for cand in range(self.order):
            acc = 0
            for c in reversed(base.modulus):
                acc = self.add(self.mul(acc, cand), c % self.p)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise ValidationError(f"{base.spec_str()} does not embed in {self.spec_str()}")
        embed = []
        for idx in range(base.order):
            acc = 0
            for c in reversed(base.coeffs(idx)):
                acc = self.add(self.mul(acc, root), c)
            embed.append(acc)
        return embed, {v: i for i, v in enumerate(embed)}

    def from_base(self, b: int) -> int:
        """Image of a base-field element index inside this field."""
        return self._embedding[0][b]

    def to_base(self, a: int) -> int:
        """Base-field index of a subfield element of this field."""
        try:
            return self._embedding[1][a]
        except KeyError:
            raise ValidationError(f"element {a} of {self.spec_str()} is not in the base subfield GF({self.q})")

    def polynomial_basis(self) -> List['FieldElem']:
        """{1, z, ..., z^(k-1)} with k the degree over the base subfield."""
        z = self.index([0, 1]) if self.r > 1 else 1
        out, x = [], 1
        for _ in range(self.relative_degree):
            out.append(self.element(x))
            x = self.mul(x, z)
        return out


@dataclass(frozen=True)
class FieldElem:
    coeffs: Tuple[int, ...]
    field: FieldDesc

    @property
    def index(self) -> int:
        return self.field.index(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: 'FieldElem'):
        if not isinstance(other, FieldElem):
            raise FieldMismatch(f"cannot combine {self!r} with {other!r}")
        if other.field.key != self.field.key:
            raise FieldMismatch(f"operands from {self.field.spec_str()} and {other.field.spec_str()}")

    def _wrap(self, idx: int) -> 'FieldElem':
        return self.field.element(idx)

    def __add__(self, other):
        self._check(other)
        return self._wrap(self.field.add(self.index, other.index))

    def __sub__(self, other):
        self._check(other)
        return self._wrap(self.field.sub(self.index, other.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __mul__(self, other):
        self._check(other)
        return self._wrap(self.field.mul(self.index, other.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.index, e))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> 'FieldElem':
        return self._wrap(self.field.inv(self.index))

    def __repr__(self):
        return f"FieldElem({list(self.coeffs)} in GF({self.field.p}^{self.field.r}))"


@lru_cache(maxsize=None)
def _make(p: int, r: int, modulus: Optional[Tuple[int, ...]], base_degree: int) -> FieldDesc:
    if modulus is None:
        for low in itertools.product(range(p), repeat=r):
            cand = tuple(low) + (1,)
            if is_irreducible(cand, p):
                modulus = cand
                break
        logger.debug("Default modulus for GF(%d^%d): %s", p, r, modulus)
    elif not is_irreducible(modulus, p):
        raise Reducible(f"modulus {list(modulus)} is reducible over GF({p})")
    return FieldDesc(p, r, modulus, base_degree)


def field_make(p: int, r: int, modulus: Optional[Sequence[int]] = None, base_degree: int = 1) -> FieldDesc:
    """
    Build GF(p^r). Without a modulus, the lexicographically smallest monic
    irreducible (coefficients compared low-degree first) is used.
    """
    if not is_prime(p):
        raise NonPrime(f"characteristic p={p} is not prime")
    if r < 1:
        raise ValidationError(f"extension degree r={r} must be >= 1")
    check_size(p ** r, f"GF({p}^{r})")
    if base_degree < 1 or r % base_degree:
        raise ValidationError(f"base degree {base_degree} does not divide r={r}")
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValidationError(f"modulus {list(modulus)} is not monic of degree {r}")
        if any(not 0 <= c < p for c in modulus):
            raise ValidationError(f"modulus coefficients must lie in [0, {p})")
    return _make(p, r, modulus, base_degree)


def field_over(q: int, r: int) -> FieldDesc:
    """GF(q^r) with GF(q) designated as the base subfield."""
    p, k = prime_power(q)
    return field_make(p, k * r, base_degree=k)


def field_arith(op: str, a: FieldElem, b=None) -> FieldElem:
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'inv':
        return a.inverse()
    if op == 'pow':
        if not isinstance(b, int) or b < 0:
            raise ValidationError(f"pow exponent must be a non-negative integer, got {b!r}")
        return a ** b
    raise ValidationError(f"unknown field operation {op!r}")


def trace_map(F: FieldDesc, x: FieldElem) -> FieldElem:
    """Relative trace tr_{q}^{q^k}(x) = sum x^{q^i}; the result lies in the base subfield."""
    if x.field.key != F.key:
        raise FieldMismatch(f"{x!r} is not an element of {F.spec_str()}")
    return F.element(F.trace(x.index))


def _invert_matrix(F: FieldDesc, rows: List[List[int]]) -> List[List[int]]:
    n = len(rows)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise NotABasis("trace Gram matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(v, inv) for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [F.sub(v, F.mul(factor, w)) for v, w in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def dual_basis(F: FieldDesc, basis: Sequence[FieldElem]) -> List[FieldElem]:
    """
    Dual basis {b_j} with tr(a_i b_j) = [i == j], from the inverse of the
    trace Gram matrix. Gram entries lie in the base subfield, so the inverse
    is computed with F arithmetic and stays there.
    """
    k = F.relative_degree
    if len(basis) != k:
        raise NotABasis(f"expected {k} basis elements over GF({F.q}), got {len(basis)}")
    for a in basis:
        if a.field.key != F.key:
            raise FieldMismatch(f"{a!r} is not an element of {F.spec_str()}")
    idx = [a.index for a in basis]
    gram = [[F.trace(F.mul(x, y)) for y in idx] for x in idx]
    inv = _invert_matrix(F, gram)
    dual = []
    for row in inv:
        acc = 0
        for c, a in zip(row, idx):
            acc = F.add(acc, F.mul(c, a))
        dual.append(F.element(acc))
    return dual


def require_multiplicative(F: FieldDesc):
    if F.order < 3:
        raise DegenerateField(f"multiplicative group of {F.spec_str()} is trivial")
