import itertools

import pytest

from algebra import (
    GroupSpec, GroupElem, crt_split, cyclic_iso, dual_basis, field_arith, field_make, field_over,
    parse_group_spec, trace_map,
)
from utils.errors import (
    BadFactorization, DegenerateField, FieldDivisionByZero, FieldMismatch, NonPrime, NotABasis,
    NotCoprime, Reducible, SizeCapExceeded, SpecParseError,
)
from utils.helpers import set_max_cells

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4)]


@pytest.fixture
def gf4():
    return field_make(2, 2)


def test_prime_field_defaults():
    F = field_make(2, 1)
    assert F.order == 2
    assert F.modulus == (0, 1)
    assert F.generator == 1


def test_gf4_default_modulus_and_generator(gf4):
    assert gf4.modulus == (1, 1, 1)
    assert gf4.generator == 2
    assert gf4.spec_str() == 'GF(2^2|modulus=1,1,1)'


def test_explicit_modulus_accepted_and_rejected():
    F = field_make(3, 2, [1, 0, 1])
    assert F.order == 9
    with pytest.raises(Reducible):
        field_make(2, 2, [1, 0, 1])
    with pytest.raises(NonPrime):
        field_make(4, 1)


def test_size_cap_refuses_large_field():
    set_max_cells(16)
    try:
        with pytest.raises(SizeCapExceeded):
            field_make(2, 5)
    finally:
        set_max_cells(None)


def test_gf4_arithmetic(gf4):
    w, w2 = gf4.element(2), gf4.element(3)
    assert (w * w2).index == 1
    assert (w ** 2).index == 3
    assert (gf4.element(0) ** 2).index == 0
    assert (gf4.element(0) ** 0).index == 1
    assert field_arith('mul', w, w2).index == 1


def test_gf5_inverse():
    F = field_make(5, 1)
    assert F.element(2).inverse().index == 3
    with pytest.raises(FieldDivisionByZero):
        F.element(0).inverse()


def test_mixing_fields_is_rejected(gf4):
    with pytest.raises(FieldMismatch):
        gf4.element(1) + field_make(3, 1).element(1)


@pytest.mark.parametrize('p,r', FIELDS)
def test_field_axioms(p, r):
    F = field_make(p, r)
    elems = range(F.order)
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    triples = list(itertools.product(elems, repeat=3))[::max(1, F.order ** 3 // 500)]
    for a, b, c in triples:
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize('p,r', FIELDS)
def test_generator_has_full_order(p, r):
    F = field_make(p, r)
    exp, log = F.tables
    assert sorted(exp) == list(range(1, F.order))
    assert sorted(log[1:]) == list(range(F.order - 1))


def test_trace_examples(gf4):
    assert trace_map(gf4, gf4.element(1)).index == 0
    assert trace_map(gf4, gf4.element(2)).index == 1
    assert trace_map(gf4, gf4.element(0)).index == 0


@pytest.mark.parametrize('q,r', [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)])
def test_trace_is_additive_balanced_and_frobenius_invariant(q, r):
    F = field_over(q, r)
    traces = [F.trace(x) for x in range(F.order)]
    for x in range(F.order):
        assert F.trace(F.frobenius(x)) == traces[x]
        for y in range(F.order):
            assert traces[F.add(x, y)] == F.add(traces[x], traces[y])
    images = [F.to_base(t) for t in traces]
    for b in range(q):
        assert images.count(b) == F.order // q


def test_relative_trace_lands_in_subfield():
    F = field_over(4, 2)
    assert F.q == 4 and F.relative_degree == 2
    sub = {F.from_base(b) for b in range(4)}
    assert {F.trace(x) for x in range(F.order)} == sub


def test_self_dual_basis(gf4):
    basis = [gf4.element(2), gf4.element(3)]
    assert [b.index for b in dual_basis(gf4, basis)] == [2, 3]


@pytest.mark.parametrize('q,r', [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_dual_basis_is_dual_and_involutive(q, r):
    F = field_over(q, r)
    basis = F.polynomial_basis()
    dual = dual_basis(F, basis)
    for i, a in enumerate(basis):
        for j, b in enumerate(dual):
            expected = 1 if i == j else 0
            assert F.trace(F.mul(a.index, b.index)) == F.from_base(expected)
    assert [b.index for b in dual_basis(F, dual)] == [a.index for a in basis]


def test_dependent_basis_is_rejected(gf4):
    with pytest.raises(NotABasis):
        dual_basis(gf4, [gf4.element(1), gf4.element(1)])


def test_cyclic_iso_gf4(gf4):
    iso = cyclic_iso(gf4)
    assert [iso.forward(i) + 1 for i in range(3)] == [1, 2, 3]
    assert iso.forward((1 + 2) % 3) + 1 == gf4.mul(2, 3)
    assert iso.is_bijective_homomorphism()


def test_cyclic_iso_needs_nontrivial_group():
    with pytest.raises(DegenerateField):
        cyclic_iso(field_make(2, 1))


@pytest.mark.parametrize('p,r', [(2, 3), (3, 2), (5, 1), (2, 4)])
def test_cyclic_iso_is_homomorphism(p, r):
    assert cyclic_iso(field_make(p, r)).is_bijective_homomorphism()


def test_crt_split_examples():
    iso = crt_split(15, 3, 5)
    assert iso.target.split(iso.forward(7)) == (1, 2)
    assert iso.backward(iso.target.join((1, 2))) == 7
    assert iso.forward(0) == 0
    iso = crt_split(12, 4, 3)
    assert iso.target.split(iso.forward(11)) == (3, 2)
    assert iso.is_bijective_homomorphism()


def test_crt_split_preconditions():
    with pytest.raises(NotCoprime):
        crt_split(8, 4, 2)
    with pytest.raises(BadFactorization):
        crt_split(15, 3, 4)


@pytest.mark.parametrize('spec', [
    GroupSpec.cyclic(6),
    GroupSpec.product(GroupSpec.cyclic(2), GroupSpec.cyclic(3)),
    GroupSpec.field_additive(field_make(3, 2)),
    GroupSpec.field_mult(field_make(2, 3)),
])
def test_group_axioms_and_vectorized_agreement(spec):
    n = spec.order
    for a in range(n):
        assert spec.add(a, spec.zero) == a
        assert spec.add(a, spec.neg(a)) == 0
        shifted = spec.shift_all(a)
        for b in range(n):
            assert spec.add(a, b) == spec.add(b, a)
            assert shifted[b] == spec.add(b, a)


def test_group_elements_and_ordering():
    G = GroupSpec.product(GroupSpec.cyclic(2), GroupSpec.cyclic(3))
    assert G.order == 6
    assert G.split(5) == (1, 2)
    x = GroupElem(G, 5)
    assert (x + x).index == G.join((0, 1))
    assert (x - x).is_zero()


def test_group_spec_round_trip():
    F = field_make(2, 2)
    G = GroupSpec.product(GroupSpec.cyclic(3), GroupSpec.field_additive(F), GroupSpec.field_mult(F))
    text = G.spec_str()
    assert text == 'Prod(Z(3);GF(2^2|modulus=1,1,1);GF*(2^2|modulus=1,1,1))'
    assert parse_group_spec(text) == G
    with pytest.raises(SpecParseError):
        parse_group_spec('Q(3)')
