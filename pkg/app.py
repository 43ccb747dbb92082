"""
amdkit command line: build AMD codes from highly nonlinear functions,
evaluate them exhaustively and check them against their bounds.

    python app.py eval --family mm --q 3 --r 1 --split weak
"""
import argparse
import json
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError as SchemaError

# Add project root to path
sys.path.append(str(Path(__file__).parent))

from amd import MODELS, FullReport, RationalOut, build_code, build_report, evaluate, tag_size, to_json
from bounds import optimality_verdict
from derive import code_from_table, extract_function, random_systematic_code, table_from_rows
from derive import theorem3_check, theorem4_check
from functions import STRONG, WEAK, cdfpw_func, dillon_dual_func, dillon_func, mm_func, trace_mult_func
from functions.func import Func
from nonlinearity import differential_spectrum, is_perfect_nonlinear, nonlinearity_of, partial_nonlinearity_of
from storage import format_table, read_table, save_reports, spectrum_csv
from utils.errors import AmdkitError, SizeCapExceeded, VerificationFailed
from utils.helpers import configure_logging, get_default_workers, get_max_cells, set_max_cells
from utils.validators import FORMATS, SUBCOMMANDS, CommandSpec

load_dotenv()

logger = logging.getLogger('amdkit')


def make_func(spec: CommandSpec) -> Func:
    family = spec.family
    if family == 'mm':
        return mm_func(spec.q, spec.r, spec.split)
    if family == 'dillon':
        return dillon_func(spec.q, spec.r, split=spec.split)
    if family == 'dillon-dual':
        return dillon_dual_func(spec.q, spec.r)
    if family == 'trace-mult':
        return trace_mult_func(spec.q, spec.r, m1=spec.m1, m2=spec.m2 if spec.m2 is not None else 1)
    if family == 'cdfpw':
        return cdfpw_func(spec.q, spec.t)
    if family == 'random':
        return random_systematic_code(spec.seed).func
    tf = read_table(spec.table)
    return extract_function(table_from_rows(tf.a1, tf.a2, tf.b, tf.rows, Path(spec.table).stem)).fe


def _claims(spec: CommandSpec, func: Func):
    """(rOptimal claimed, gOptimal claimed) for the catalog families that carry such a claim."""
    split = func.notes.get('split')
    r_claim = spec.family in ('mm', 'dillon') and split == WEAK
    g_claim = spec.family in ('mm', 'dillon-dual') and split == STRONG and spec.r == 1
    return r_claim, g_claim


def _emit(spec: CommandSpec, text: str):
    if spec.output:
        out = Path(spec.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding='utf-8')
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _text(lines) -> str:
    return '\n'.join(lines) + '\n'


def cmd_build(spec, func, workers):
    code = build_code(func)
    size = tag_size(code)
    if spec.output_format == 'json':
        payload = {'codeId': code.code_id, 'family': func.origin, 'm': code.m, 'n': code.n, 't': code.t,
                   'tagRatio': RationalOut.of(size.ratio).model_dump(), 'tagBits': size.bits}
        return json.dumps(payload, indent=2) + '\n'
    return _text([f"{code.code_id}: m={code.m} n={code.n} t={code.t} tag=log2({size.ratio})={size.bits}"])


def cmd_spectrum(spec, func, workers):
    spectrum = differential_spectrum(func, restricted=False, workers=workers)
    if spec.output_format == 'csv':
        if not spectrum.materialized:
            raise SizeCapExceeded(f"spectrum of {func.label} is too large to export cell by cell")
        return spectrum_csv(spectrum)
    count, delta, b = spectrum.best()
    nl = nonlinearity_of(func, workers)
    partial = partial_nonlinearity_of(func, workers)
    if spec.output_format == 'json':
        payload = {'codeId': func.label, 'nonlinearity': RationalOut.of(nl).model_dump(),
                   'partialNonlinearity': RationalOut.of(partial).model_dump(),
                   'argmax': [delta, b], 'count': count}
        return json.dumps(payload, indent=2) + '\n'
    return _text([f"{func.label}: nonlinearity={nl} partial={partial} argmax delta={delta} b={b}"])


def _profile_report(spec, func, workers, with_bounds: bool):
    code = build_code(func)
    profile = evaluate(code, MODELS, workers)
    report = build_report(code, profile)
    if not with_bounds:
        return code, report, []
    verdict = optimality_verdict(code, profile)
    report.bounds = verdict.as_dict()
    r_claim, g_claim = _claims(spec, func)
    failed = [name for name, claimed, holds in (('rOptimal', r_claim, verdict.r_optimal),
                                                 ('gOptimal', g_claim, verdict.g_optimal))
              if claimed and not holds]
    return code, report, failed


def _report_text(report) -> str:
    data = json.loads(to_json(report))
    lines = [f"{data['codeId']}: m={data['m']} n={data['n']} t={data['t']} tag={data['tagBits']} bits"]
    for key in ('weakRho', 'strongRho', 'strongerRho'):
        if data.get(key):
            lines.append(f"  {key} = {data[key]['num']}/{data[key]['den']}")
    bounds = data.get('bounds')
    if bounds:
        lines.append(f"  rOptimal = {bounds['rOptimal']}  gOptimal = {bounds['gOptimal']}")
    return _text(lines)


def _emit_report(spec, report):
    fmt = spec.output_format
    if fmt == 'xlsx':
        path = save_reports([json.loads(to_json(report))], spec.output)
        logger.info("Saved summary row for %s to %s", report.code_id, path)
        return None
    if fmt == 'text':
        return _report_text(report)
    return to_json(report) + '\n'


def cmd_eval(spec, func, workers):
    _, report, _ = _profile_report(spec, func, workers, with_bounds=False)
    return _emit_report(spec, report)


def cmd_bounds(spec, func, workers):
    _, report, failed = _profile_report(spec, func, workers, with_bounds=True)
    out = _emit_report(spec, report)
    if failed:
        if out:
            _emit(spec, out)
        raise VerificationFailed(f"{report.code_id} is claimed optimal but fails {', '.join(failed)}")
    return out


def cmd_derive(spec, func, workers):
    code = build_code(func)
    t3 = theorem3_check(code, workers)
    t4 = theorem4_check(code, workers)
    payload = {'codeId': code.code_id, **t3.as_dict(), 'theorem4': t4.as_dict()}
    if spec.output_format == 'text':
        out = _text([f"{code.code_id}: P_fE={t3.lhs} <= {t3.rhs} holds={t3.holds}; "
                     f"P_fE={t4.fe_nonlinearity} <= stronger={t4.stronger_rho} holds={t4.holds}"])
    else:
        out = json.dumps(payload, indent=2) + '\n'
    if not (t3.holds and t4.holds):
        _emit(spec, out)
        raise VerificationFailed(f"derived-function bound fails for {code.code_id}")
    return out


def cmd_export_table(spec, func, workers):
    return format_table(func)


def cmd_import_table(spec, func, workers):
    tf = read_table(spec.table)
    code = code_from_table(table_from_rows(tf.a1, tf.a2, tf.b, tf.rows, Path(spec.table).stem))
    if spec.output_format == 'json':
        payload = {'codeId': code.code_id, 'A1': tf.a1.spec_str(), 'A2': tf.a2.spec_str(), 'B': tf.b.spec_str(),
                   'm': code.m, 'n': code.n, 't': code.t}
        return json.dumps(payload, indent=2) + '\n'
    return format_table(code.func)


def cmd_report(spec, func, workers):
    code, report, failed = _profile_report(spec, func, workers, with_bounds=True)
    t3 = theorem3_check(code, workers)
    t4 = theorem4_check(code, workers)
    if spec.output_format == 'xlsx':
        out = _emit_report(spec, report)
    else:
        full = FullReport(
            code=report,
            nonlinearity=RationalOut.of(nonlinearity_of(func, workers)),
            partial_nonlinearity=RationalOut.of(partial_nonlinearity_of(func, workers)),
            perfect_nonlinear=is_perfect_nonlinear(func, workers),
            theorem3=t3.as_dict(),
            theorem4=t4.as_dict(),
        )
        out = _report_text(report) if spec.output_format == 'text' else to_json(full) + '\n'
    problems = failed + [name for name, ok in (('theorem3', t3.holds), ('theorem4', t4.holds)) if not ok]
    if problems:
        if out:
            _emit(spec, out)
        raise VerificationFailed(f"{code.code_id} fails {', '.join(problems)}")
    return out


COMMANDS = {
    'build': cmd_build,
    'spectrum': cmd_spectrum,
    'eval': cmd_eval,
    'bounds': cmd_bounds,
    'derive': cmd_derive,
    'export-table': cmd_export_table,
    'import-table': cmd_import_table,
    'report': cmd_report,
}


def run(spec: CommandSpec) -> int:
    """Execute one command; returns the process exit status."""
    set_max_cells(spec.max_cells)
    try:
        workers = spec.workers or get_default_workers()
        func = None if spec.subcommand == 'import-table' else make_func(spec)
        logger.debug("Running %s on %s with %d worker(s), cap %d",
                     spec.subcommand, func.label if func else spec.table, workers, get_max_cells())
        out = COMMANDS[spec.subcommand](spec, func, workers)
        if out:
            _emit(spec, out)
        return 0
    except AmdkitError as e:
        logger.error(str(e))
        return e.exit_code
    finally:
        set_max_cells(None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--family', help='mm, dillon, dillon-dual, trace-mult, cdfpw, table or random')
    common.add_argument('--q', type=int, help='field size (prime power)')
    common.add_argument('--r', type=int, help='extension degree')
    common.add_argument('--t', type=int, help='CDFPW source length')
    common.add_argument('--m1', type=int, help='trace-mult source group order')
    common.add_argument('--m2', type=int, help='trace-mult randomness group order')
    common.add_argument('--split', default='weak', help='weak or strong source/randomness split')
    common.add_argument('--seed', type=int, default=0, help='seed for the random family')
    common.add_argument('--format', choices=FORMATS, help='output format')
    common.add_argument('--output', help='write to this path instead of stdout')
    common.add_argument('--table', help='function-table file for --family table or import-table')
    common.add_argument('--max-cells', type=int, help='size cap for exhaustive enumeration (default 2^24)')
    common.add_argument('--workers', type=int, help='parallel workers for the enumeration kernels')
    common.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR')

    parser = argparse.ArgumentParser(prog='amdkit', description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest='subcommand', required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    configure_logging(args.pop('log_level'))
    try:
        spec = CommandSpec(**args)
    except SchemaError as e:
        for err in e.errors():
            logger.error("%s: %s", '.'.join(str(p) for p in err['loc']) or 'command', err['msg'])
        return 2
    except AmdkitError as e:
        logger.error(str(e))
        return e.exit_code
    return run(spec)


if __name__ == '__main__':
    sys.exit(main())
