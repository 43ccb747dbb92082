from fractions import Fraction

import pytest

from algebra import GroupSpec
from amd import STRONG, WEAK, build_code
from derive import (
    EncodingTable, analyze, code_from_table, extract_function, random_corpus, restricted_nonlinearity,
    table_from_rows, theorem3_check, theorem4_check,
)
from functions import cdfpw_func, dillon_dual_func, dillon_func, func_from_table, mm_func, trace_mult_func
from utils.errors import BadSource, NotSystematic

Z3 = GroupSpec.cyclic(3)
Z2 = GroupSpec.cyclic(2)


def linear_code():
    return build_code(func_from_table(Z3, Z3, Z3, [(s + x) % 3 for s in range(3) for x in range(3)]))


@pytest.mark.parametrize('make', [
    lambda: mm_func(3, 1, WEAK),
    lambda: dillon_func(2, 2),
    lambda: cdfpw_func(5, 1),
    lambda: trace_mult_func(2, 4, m1=5, m2=3),
])
def test_extracted_function_matches_source(make):
    f = make()
    fe = extract_function(build_code(f)).fe
    assert fe.to_table() == f.to_table()
    assert fe.label == f"fE-{f.label}"


def test_extract_from_table_rows():
    rows = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    d = extract_function(table_from_rows(Z2, Z2, Z2, rows, label='xor'))
    assert d.fe.to_table() == [0, 1, 1, 0]
    code = code_from_table(EncodingTable(Z2, Z2, Z2, tuple(rows), 'xor'))
    assert code.m == 2 and code.t == 2


def test_non_systematic_tables_are_rejected():
    missing = [(0, 0, 0), (0, 1, 1), (1, 0, 1)]
    with pytest.raises(NotSystematic):
        extract_function(table_from_rows(Z2, Z2, Z2, missing))
    doubled = [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    with pytest.raises(NotSystematic):
        extract_function(table_from_rows(Z2, Z2, Z2, doubled))


def test_restricted_nonlinearity_examples():
    assert restricted_nonlinearity(extract_function(build_code(cdfpw_func(5, 1))), 0) == Fraction(2, 5)
    d = extract_function(build_code(mm_func(3, 1, WEAK)))
    assert restricted_nonlinearity(d, 0) == 1
    assert restricted_nonlinearity(d, 1) == 1
    with pytest.raises(BadSource):
        restricted_nonlinearity(d, 3)


def test_analyze_fills_every_source():
    d = analyze(extract_function(build_code(cdfpw_func(5, 1))))
    assert sorted(d.restricted_nonlinearities) == list(range(5))
    assert d.full_nonlinearity <= Fraction(2, 5)


def test_nonlinearity_bound_for_mm_code():
    report = theorem3_check(build_code(mm_func(3, 1, WEAK)))
    assert report.lhs == Fraction(1, 3)
    assert report.rhs == 1
    assert report.holds
    assert report.as_dict()['weakRho'] == {'num': 1, 'den': 3}


def test_linear_code_is_tight_on_both_bounds():
    code = linear_code()
    report = theorem3_check(code)
    assert (report.lhs, report.rhs, report.weak_rho) == (1, 1, 1)
    assert theorem4_check(code).holds


@pytest.mark.parametrize('make', [
    lambda: mm_func(3, 1, WEAK),
    lambda: mm_func(2, 2, STRONG),
    lambda: dillon_func(3, 1),
    lambda: dillon_dual_func(3, 1),
    lambda: trace_mult_func(2, 2, m1=3, m2=1),
    lambda: cdfpw_func(7, 2),
])
def test_catalog_codes_satisfy_both_bounds(make):
    code = build_code(make())
    assert theorem3_check(code).holds
    report = theorem4_check(code)
    assert report.fe_nonlinearity == report.stronger_rho


def test_random_codes_satisfy_both_bounds():
    for code in random_corpus(100, seed=11):
        three = theorem3_check(code)
        assert three.holds, code.code_id
        four = theorem4_check(code)
        assert four.fe_nonlinearity == four.stronger_rho, code.code_id


def test_random_corpus_is_reproducible():
    first = [c.func.to_table() for c in random_corpus(5, seed=3)]
    second = [c.func.to_table() for c in random_corpus(5, seed=3)]
    assert first == second
