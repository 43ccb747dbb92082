import pytest

from amd import build_code, build_report, evaluate
from bounds import optimality_verdict
from derive import extract_function, table_from_rows
from functions import cdfpw_func, func_from_table, mm_func
from nonlinearity import differential_spectrum
from storage import (
    format_table, load_from_excel, load_spectrum_csv, parse_table, read_table, save_reports,
    save_spectrum_csv, spectrum_csv, write_table,
)
from utils.errors import SpecParseError


def test_table_file_round_trip(tmp_path):
    f = cdfpw_func(5, 1)
    path = write_table(f, tmp_path / 'cdfpw.txt')
    parsed = read_table(path)
    assert (parsed.a1, parsed.a2, parsed.b) == (f.a1, f.a2, f.b)
    g = extract_function(table_from_rows(parsed.a1, parsed.a2, parsed.b, parsed.rows)).fe
    assert g.to_table() == f.to_table()
    assert format_table(func_from_table(g.a1, g.a2, g.b, g.to_table())) == (tmp_path / 'cdfpw.txt').read_text()


def test_table_header_lists_groups():
    text = format_table(mm_func(2, 1))
    assert text.splitlines()[0].split()[2] == 'B=GF(2^1|modulus=0,1)'
    assert text.splitlines()[1:] == ['0 0 0', '0 1 0', '1 0 0', '1 1 1']


@pytest.mark.parametrize('text', [
    '',
    'A1=Z(2) A2=Z(2)\n0 0 0\n',
    'X1=Z(2) A2=Z(2) B=Z(2)\n',
    'A1=Z(2) A2=Z(2) B=Z(2)\n0 0\n',
    'A1=Z(2) A2=Z(2) B=Z(2)\n0 a 1\n',
])
def test_malformed_tables_are_rejected(text):
    with pytest.raises(SpecParseError):
        parse_table(text)


def test_spectrum_csv_layout(tmp_path):
    spectrum = differential_spectrum(mm_func(2, 1))
    text = spectrum_csv(spectrum)
    lines = text.splitlines()
    assert lines[0] == 'deltaIndex,bIndex,count'
    assert lines[1] == '0,0,4'
    assert len(lines) == 1 + 4 * 2
    df = load_spectrum_csv(save_spectrum_csv(spectrum, tmp_path / 'spectrum.csv'))
    assert list(df['count'].groupby(df['deltaIndex']).sum()) == [4] * 4
    assert load_spectrum_csv(tmp_path / 'missing.csv') is None


def _report(f):
    code = build_code(f)
    profile = evaluate(code)
    report = build_report(code, profile)
    report.bounds = optimality_verdict(code, profile).as_dict()
    return report.model_dump(by_alias=True)


def test_workbook_merges_by_code_id(tmp_path):
    out = tmp_path / 'reports.xlsx'
    save_reports([_report(mm_func(3, 1))], out)
    save_reports([_report(cdfpw_func(5, 1)), _report(mm_func(3, 1))], out)
    df = load_from_excel(out)
    assert sorted(df['code_id']) == ['cdfpw-q5-t1', 'mm-q3-r1-weak']
    row = df[df['code_id'] == 'mm-q3-r1-weak'].iloc[0]
    assert row['weak_rho'] == '1/3'
    assert bool(row['r_optimal']) is True


def test_workbook_without_merge_overwrites(tmp_path):
    out = tmp_path / 'reports.xlsx'
    save_reports([_report(mm_func(3, 1))], out)
    save_reports([_report(cdfpw_func(5, 1))], out, merge=False)
    assert list(load_from_excel(out)['code_id']) == ['cdfpw-q5-t1']
    assert load_from_excel(tmp_path / 'none.xlsx') is None


def test_unreadable_table_raises_parse_error(tmp_path):
    with pytest.raises(SpecParseError):
        read_table(tmp_path / 'nope.txt')
    with pytest.raises(SpecParseError):
        read_table(tmp_path)
    binary = tmp_path / 'binary.txt'
    binary.write_bytes(b'\xff\xfe\x00')
    with pytest.raises(SpecParseError):
        read_table(binary)
