"""
Report workbook: one summary row per code, merged across runs.
"""
import logging
from pathlib import Path

import pandas as pd

logger = logging.getLogger(__name__)

DEFAULT_WORKBOOK = Path('output') / 'amd_reports.xlsx'

SUMMARY_COLUMNS = [
    'code_id', 'family', 'm', 'n', 't', 'tag_ratio', 'tag_bits',
    'weak_rho', 'strong_rho', 'stronger_rho', 'regular_lower', 'r_optimal', 'g_optimal',
]


def _ratio(value):
    if not value:
        return None
    return f"{value['num']}/{value['den']}"


def summary_row(report: dict) -> dict:
    """One workbook row from a report dict dumped with camelCase aliases."""
    bounds = report.get('bounds') or {}
    regular = bounds.get('regularLower') or {}
    return {
        'code_id': report['codeId'],
        'family': report['family'],
        'm': report['m'],
        'n': report['n'],
        't': report['t'],
        'tag_ratio': _ratio(report['tagRatio']),
        'tag_bits': report['tagBits'],
        'weak_rho': _ratio(report.get('weakRho')),
        'strong_rho': _ratio(report.get('strongRho')),
        'stronger_rho': _ratio(report.get('strongerRho')),
        'regular_lower': _ratio(regular.get('bound')),
        'r_optimal': bounds.get('rOptimal'),
        'g_optimal': bounds.get('gOptimal'),
    }


def _read_existing(out_path) -> pd.DataFrame:
    if not Path(out_path).exists():
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    try:
        return pd.read_excel(out_path)
    except Exception as e:
        logger.warning("Could not read %s (%s), starting a fresh workbook", out_path, e)
        return pd.DataFrame(columns=SUMMARY_COLUMNS)


def save_to_excel(df, out_path=None, merge=True):
    """Write summary rows; with merge, rows already in the workbook stay unless the same code_id is rewritten."""
    out_path = Path(out_path) if out_path else DEFAULT_WORKBOOK
    out_path.parent.mkdir(parents=True, exist_ok=True)

    if merge:
        existing = _read_existing(out_path)
        columns = list(dict.fromkeys(list(existing.columns) + list(df.columns)))
        df = pd.concat([existing.reindex(columns=columns), df.reindex(columns=columns)], ignore_index=True)
        df = df.drop_duplicates(subset=['code_id'], keep='last').sort_values('code_id', kind='stable')

    df.fillna('n/a').to_excel(out_path, index=False)
    logger.info("Saved %d row(s) to %s", len(df), out_path)
    return str(out_path)


def save_reports(reports, out_path=None, merge=True):
    df = pd.DataFrame([summary_row(r) for r in reports], columns=SUMMARY_COLUMNS)
    return save_to_excel(df, out_path, merge=merge)


def load_from_excel(path=None):
    if path is None:
        path = DEFAULT_WORKBOOK
    if Path(path).exists():
        return pd.read_excel(path)
    return None
