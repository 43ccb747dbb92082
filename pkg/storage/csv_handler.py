import logging
from pathlib import Path

import pandas as pd

from nonlinearity.spectrum import DifferentialSpectrum

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ['deltaIndex', 'bIndex', 'count']


def spectrum_frame(spectrum: DifferentialSpectrum) -> pd.DataFrame:
    df = pd.DataFrame(list(spectrum.cells()), columns=SPECTRUM_COLUMNS)
    return df.sort_values(['deltaIndex', 'bIndex'], kind='stable').reset_index(drop=True)


def spectrum_csv(spectrum: DifferentialSpectrum) -> str:
    return spectrum_frame(spectrum).to_csv(index=False, lineterminator='\n')


def save_spectrum_csv(spectrum: DifferentialSpectrum, out_path) -> str:
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(spectrum_csv(spectrum), encoding='utf-8')
    logger.info("Wrote spectrum of %s to %s", spectrum.func.label, out_path)
    return str(out_path)


def load_spectrum_csv(path) -> pd.DataFrame:
    if Path(path).exists():
        return pd.read_csv(path)
    return None
