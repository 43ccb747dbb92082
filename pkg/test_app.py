import json

import pytest

from app import main, make_func, run
from utils.validators import CommandSpec
from utils.errors import CharacteristicDividesDegree, ValidationError


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_eval_weak_mm_json(capsys):
    code, out = run_cli(capsys, 'eval', '--family', 'mm', '--q', '3', '--r', '1', '--split', 'weak')
    assert code == 0
    data = json.loads(out)
    assert data['weakRho'] == {'num': 1, 'den': 3}
    assert data['strongerRho'] == {'num': 1, 'den': 3}
    assert (data['m'], data['n'], data['t']) == (3, 27, 3)


def test_bounds_strong_mm_is_g_optimal(capsys):
    code, out = run_cli(capsys, 'bounds', '--family', 'mm', '--q', '2', '--r', '1', '--split', 'strong')
    assert code == 0
    assert json.loads(out)['bounds']['gOptimal'] is True


def test_characteristic_gate_exit_code(capsys):
    code, out = run_cli(capsys, 'eval', '--family', 'cdfpw', '--q', '4', '--t', '2')
    assert code == 2
    assert out == ''


def test_size_cap_exit_code(capsys):
    code, _ = run_cli(capsys, 'eval', '--family', 'mm', '--q', '3', '--r', '1', '--max-cells', '10')
    assert code == 3


def test_bad_split_is_a_validation_error(capsys):
    code, _ = run_cli(capsys, 'eval', '--family', 'mm', '--q', '3', '--r', '1', '--split', 'diagonal')
    assert code == 2


def test_missing_family_parameters(capsys):
    assert run_cli(capsys, 'build', '--family', 'mm', '--q', '3')[0] == 2
    assert run_cli(capsys, 'build', '--q', '3', '--r', '1')[0] == 2
    assert run_cli(capsys, 'spectrum', '--family', 'trace-mult', '--q', '3', '--r', '2', '--m1', '4',
                   '--m2', '2')[0] == 2


def test_spectrum_csv_header(capsys):
    code, out = run_cli(capsys, 'spectrum', '--family', 'mm', '--q', '2', '--r', '1')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'deltaIndex,bIndex,count'
    assert len(lines) == 1 + 4 * 2


def test_build_text(capsys):
    code, out = run_cli(capsys, 'build', '--family', 'mm', '--q', '3', '--r', '1')
    assert code == 0
    assert out.strip() == 'mm-q3-r1-weak: m=3 n=27 t=3 tag=log2(9)=3.169925'


def test_export_then_import_is_bit_exact(tmp_path, capsys):
    path = tmp_path / 'cdfpw.txt'
    code, _ = run_cli(capsys, 'export-table', '--family', 'cdfpw', '--q', '5', '--t', '1', '--output', str(path))
    assert code == 0
    code, out = run_cli(capsys, 'import-table', '--table', str(path))
    assert code == 0
    assert out == path.read_text()


def test_table_family_reads_file(tmp_path, capsys):
    path = tmp_path / 'mm.txt'
    run_cli(capsys, 'export-table', '--family', 'mm', '--q', '3', '--r', '1', '--output', str(path))
    code, out = run_cli(capsys, 'eval', '--family', 'table', '--table', str(path))
    assert code == 0
    data = json.loads(out)
    assert data['codeId'] == 'fE-mm'
    assert data['weakRho'] == {'num': 1, 'den': 3}


def test_reports_do_not_depend_on_workers(capsys):
    args = ['report', '--family', 'cdfpw', '--q', '5', '--t', '1']
    _, serial = run_cli(capsys, *args, '--workers', '1')
    _, parallel = run_cli(capsys, *args, '--workers', '2')
    assert serial == parallel
    data = json.loads(serial)
    assert data['theorem3']['holds'] and data['theorem4']['holds']


def test_derive_text(capsys):
    code, out = run_cli(capsys, 'derive', '--family', 'mm', '--q', '3', '--r', '1', '--format', 'text')
    assert code == 0
    assert 'holds=True' in out


def test_eval_writes_workbook(tmp_path, capsys):
    out = tmp_path / 'summary.xlsx'
    code, text = run_cli(capsys, 'eval', '--family', 'mm', '--q', '2', '--r', '1', '--format', 'xlsx',
                         '--output', str(out))
    assert code == 0
    assert text == ''
    assert out.exists()


def test_format_must_suit_subcommand(capsys):
    assert run_cli(capsys, 'export-table', '--family', 'mm', '--q', '2', '--r', '1', '--format', 'json')[0] == 2


def test_command_spec_raises_typed_errors():
    with pytest.raises(CharacteristicDividesDegree):
        CommandSpec(subcommand='eval', family='cdfpw', q=4, t=2)
    with pytest.raises(ValidationError):
        CommandSpec(subcommand='import-table')


def test_run_and_make_func_directly(capsys):
    spec = CommandSpec(subcommand='build', family='random', seed=5, format='json')
    assert make_func(spec).label == 'random-5'
    assert run(spec) == 0
    assert json.loads(capsys.readouterr().out)['codeId'] == 'random-5'


def test_unreadable_table_is_a_validation_error(tmp_path, capsys):
    code, out = run_cli(capsys, 'import-table', '--table', str(tmp_path / 'missing.txt'))
    assert code == 2
    assert out == ''
    assert run_cli(capsys, 'eval', '--family', 'table', '--table', str(tmp_path))[0] == 2


def test_derive_json_is_flat(capsys):
    code, out = run_cli(capsys, 'derive', '--family', 'mm', '--q', '3', '--r', '1')
    assert code == 0
    data = json.loads(out)
    assert data['codeId'] == 'mm-q3-r1-weak'
    assert data['holds'] is True
    assert data['rhs'] == {'num': 1, 'den': 1}
    assert 'theorem3' not in data
    assert {'lhs', 'weakRho', 'perSource'} <= set(data)
    assert data['theorem4']['holds'] is True
