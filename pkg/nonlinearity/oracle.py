"""
Naive recount of differential spectra, sharing no code with the numpy kernel.
"""
import logging
from typing import TYPE_CHECKING, Dict, Tuple

from utils.errors import VerificationFailed

if TYPE_CHECKING:
    from functions.func import Func
    from nonlinearity.spectrum import DifferentialSpectrum

logger = logging.getLogger(__name__)

ORACLE_LIMIT = 1 << 10


def naive_spectrum(f: 'Func') -> Dict[Tuple[int, int], int]:
    """{(delta, b): count} by a double loop over f.evaluate and per-component group arithmetic."""
    A1, A2, B = f.a1, f.a2, f.b
    counts: Dict[Tuple[int, int], int] = {}
    for d2 in range(A2.order):
        for d1 in range(A1.order):
            delta = d1 + A1.order * d2
            for x2 in range(A2.order):
                for x1 in range(A1.order):
                    b = B.sub(f.evaluate(A1.add(x1, d1), A2.add(x2, d2)), f.evaluate(x1, x2))
                    counts[(delta, b)] = counts.get((delta, b), 0) + 1
    return counts


def verify_spectrum(spectrum: 'DifferentialSpectrum'):
    """Raise VerificationFailed unless the naive recount agrees on every cell."""
    f = spectrum.func
    if f.domain.order > ORACLE_LIMIT:
        logger.info("Skipping oracle for %s, |A| = %d", f.label, f.domain.order)
        return
    naive = naive_spectrum(f)
    for delta, b, count in spectrum.cells():
        if naive.get((delta, b), 0) != count:
            raise VerificationFailed(
                f"spectrum of {f.label} disagrees with recount at delta={delta}, b={b}: "
                f"{count} != {naive.get((delta, b), 0)}")
