import json
from fractions import Fraction

import pytest

from algebra import field_over
from amd import (
    STRONG, STRONGER, WEAK, Codeword, ForcedSampler, SeededSampler, build_code, build_report, decode,
    encode, evaluate, success_given, tag_size, to_json,
)
from functions import cdfpw_func, dillon_dual_func, dillon_func, mm_func
from nonlinearity import nonlinearity_of, partial_nonlinearity_of
from utils.errors import BadModel, BadSource, ZeroOffset


@pytest.fixture
def mm31():
    return build_code(mm_func(3, 1, WEAK))


def test_code_parameters(mm31):
    assert (mm31.m, mm31.n, mm31.t) == (3, 27, 3)
    code = build_code(cdfpw_func(5, 1))
    assert (code.m, code.n) == (5, 125)
    code = build_code(mm_func(2, 1, STRONG))
    assert (code.m, code.n) == (2, 8)


def test_encode_with_forced_randomness(mm31):
    assert encode(mm31, 2, ForcedSampler([1])).as_tuple() == (2, 1, 2)
    with pytest.raises(BadSource):
        encode(mm31, 3, ForcedSampler([0]))


def test_decode_examples(mm31):
    assert decode(mm31, Codeword(2, 1, 2)) == 2
    assert decode(mm31, Codeword(2, 1, 0)) is None


def test_exhaustive_round_trip(mm31):
    for s in range(mm31.m):
        for x in range(mm31.t):
            assert decode(mm31, encode(mm31, s, ForcedSampler([x]))) == s


def test_valid_encodings_are_regular(mm31):
    groups = mm31.valid_encodings()
    assert sorted(groups) == [0, 1, 2]
    assert all(len(words) == mm31.t for words in groups.values())


def test_seeded_sampler_is_deterministic(mm31):
    a, b = SeededSampler(7), SeededSampler(7)
    first = [encode(mm31, 1, a).as_tuple() for _ in range(20)]
    second = [encode(mm31, 1, b).as_tuple() for _ in range(20)]
    assert first == second
    assert all(0 <= SeededSampler(3).draw(5) < 5 for _ in range(10))


def test_masking_moves_the_word(mm31):
    g = encode(mm31, 1, ForcedSampler([2]))
    moved = g.masked(mm31, (1, 0, 2))
    # f(2, 2) - f(1, 2) = 2, so this offset keeps the word valid
    assert moved.as_tuple() == (2, 2, 1)
    assert decode(mm31, moved) == 2


def test_success_given_examples(mm31):
    assert success_given(mm31, (1, 0, 0), WEAK) == Fraction(1, 3)
    assert success_given(mm31, (1, 0, 0), STRONG, source=0) == Fraction(1, 3)
    assert success_given(mm31, (0, 1, 0), WEAK) == 0
    assert success_given(mm31, (0, 1, 0), STRONGER) == Fraction(1, 3)


def test_success_given_rejects_bad_input(mm31):
    with pytest.raises(ZeroOffset):
        success_given(mm31, (0, 0, 0), WEAK)
    with pytest.raises(BadModel):
        success_given(mm31, (1, 0, 0), 'weakest')
    with pytest.raises(BadSource):
        success_given(mm31, (1, 0, 0), STRONG)


def test_weak_mm_code():
    profile = evaluate(build_code(mm_func(3, 1, WEAK)))
    assert profile.weak_rho == Fraction(1, 3)
    code = build_code(mm_func(2, 2, WEAK))
    assert (code.m, code.n, code.t) == (8, 32, 2)
    assert evaluate(code).weak_rho == Fraction(1, 2)


def test_weak_dillon_code():
    assert evaluate(build_code(dillon_func(2, 2))).weak_rho == Fraction(1, 2)


@pytest.mark.parametrize('q,r', [(2, 1), (3, 2)])
def test_strong_mm_code(q, r):
    profile = evaluate(build_code(mm_func(q, r, STRONG)))
    assert profile.strong_rho_per_source == [Fraction(1, q)] * q ** r
    assert profile.strong_rho == Fraction(1, q)


def test_strong_dillon_dual_codes():
    assert evaluate(build_code(dillon_dual_func(3, 1))).strong_rho == Fraction(1, 3)
    F = field_over(2, 2)
    code = build_code(dillon_dual_func(2, 2, basis=[F.element(2), F.element(3)]))
    assert evaluate(code).strong_rho == Fraction(1, 2)


@pytest.mark.parametrize('q,t', [(5, 1), (7, 1), (7, 2), (3, 2)])
def test_cdfpw_codes_stay_under_degree_bound(q, t):
    profile = evaluate(build_code(cdfpw_func(q, t)))
    assert profile.weak_rho <= Fraction(t + 1, q)
    assert profile.strong_rho <= Fraction(t + 1, q)


def test_argmax_offset_reaches_reported_rho(mm31):
    profile = evaluate(mm31)
    assert success_given(mm31, profile.weak_argmax, WEAK) == profile.weak_rho
    for s, offset in enumerate(profile.strong_argmax_per_source):
        assert success_given(mm31, offset, STRONG, source=s) == profile.strong_rho_per_source[s]


def test_partial_model_selection(mm31):
    profile = evaluate(mm31, models=[WEAK])
    assert profile.has(WEAK) and not profile.has(STRONG)
    assert profile.strong_rho is None
    with pytest.raises(BadModel):
        evaluate(mm31, models=['loud'])


def test_tag_size():
    size = tag_size(build_code(mm_func(3, 1, WEAK)))
    assert size.ratio == 9
    assert size.bits == '3.169925'
    assert tag_size(build_code(mm_func(2, 1, STRONG))).bits == '2.000000'


def test_report_json_shape(mm31):
    data = json.loads(to_json(build_report(mm31, evaluate(mm31))))
    assert data['codeId'] == 'mm-q3-r1-weak'
    assert data['weakRho'] == {'num': 1, 'den': 3}
    assert data['tagRatio'] == {'num': 9, 'den': 1}
    assert data['sourcePrior'] == 'equiprobable'
    assert [e['source'] for e in data['perSource']] == [0, 1, 2]


@pytest.mark.parametrize('workers', [2, 8])
def test_reports_are_identical_across_workers(workers):
    code = build_code(cdfpw_func(5, 1))
    serial = to_json(build_report(code, evaluate(code, workers=1)))
    parallel = to_json(build_report(code, evaluate(code, workers=workers)))
    assert serial == parallel


def _criteria_codes():
    F = field_over(2, 2)
    return [
        ('mm-weak-3-1', lambda: mm_func(3, 1, WEAK)),
        ('mm-weak-2-2', lambda: mm_func(2, 2, WEAK)),
        ('dillon-weak-2-2', lambda: dillon_func(2, 2)),
        ('mm-strong-2-1', lambda: mm_func(2, 1, STRONG)),
        ('mm-strong-3-2', lambda: mm_func(3, 2, STRONG)),
        ('dual-3-1', lambda: dillon_dual_func(3, 1)),
        ('dual-2-2-self-dual', lambda: dillon_dual_func(2, 2, basis=[F.element(2), F.element(3)])),
        ('cdfpw-5-1', lambda: cdfpw_func(5, 1)),
        ('cdfpw-7-1', lambda: cdfpw_func(7, 1)),
        ('cdfpw-7-2', lambda: cdfpw_func(7, 2)),
        ('cdfpw-3-2', lambda: cdfpw_func(3, 2)),
    ]


CRITERIA_CODES = _criteria_codes()


@pytest.mark.parametrize('make', [m for _, m in CRITERIA_CODES], ids=[name for name, _ in CRITERIA_CODES])
def test_weak_rho_is_partial_nonlinearity_and_strong_floor(make):
    f = make()
    profile = evaluate(build_code(f))
    psi = partial_nonlinearity_of(f)
    assert profile.weak_rho == psi
    assert profile.strong_rho >= psi >= Fraction(1, f.b.order)
    assert profile.stronger_rho == nonlinearity_of(f)


def test_encoding_randomness_is_uniform(mm31):
    sampler = SeededSampler(2024)
    draws = 6000
    counts = [0] * mm31.t
    for _ in range(draws):
        counts[encode(mm31, 0, sampler).s2] += 1
    # each value expects 2000; 250 is about seven standard deviations
    assert all(abs(c - draws // mm31.t) < 250 for c in counts)


def test_random_mask_draws_each_component(mm31):
    assert mm31.random_mask(ForcedSampler([1, 2, 0])).as_tuple() == (1, 2, 0)
    sampler = SeededSampler(5)
    for _ in range(50):
        mask = mm31.random_mask(sampler)
        mm31.check_word(*mask.as_tuple())
    g = encode(mm31, 0, ForcedSampler([1]))
    moved = g.masked(mm31, mm31.random_mask(ForcedSampler([0, 2, 0])))
    assert moved.as_tuple() == (0, 0, 0)
    assert decode(mm31, moved) == 0
