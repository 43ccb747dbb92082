"""
Differential spectra and the two nonlinearity measures.

All probabilities are Fractions of integer counts over |A|.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterator, Optional, Sequence, Tuple

import numpy as np

from nonlinearity.kernel import build_payload, run_partitioned, spectrum_chunk
from utils.helpers import check_size

if TYPE_CHECKING:
    from functions.func import Func

logger = logging.getLogger(__name__)

MATERIALIZE_LIMIT = 1 << 20


@dataclass(frozen=True, eq=False)
class DifferentialSpectrum:
    """
    counts[i, b] = #{x in A : f(x + deltas[i]) - f(x) = b}.

    counts is None when the table was too large to keep; row_max/row_argmax
    are always present.
    """
    func: 'Func'
    deltas: np.ndarray
    counts: Optional[np.ndarray]
    row_max: np.ndarray
    row_argmax: np.ndarray
    restricted: bool

    @property
    def materialized(self) -> bool:
        return self.counts is not None

    def count(self, delta: int, b: int) -> int:
        if self.counts is None:
            raise ValueError("spectrum was streamed, individual cells are not kept")
        pos = int(np.searchsorted(self.deltas, delta))
        if pos >= len(self.deltas) or self.deltas[pos] != delta:
            raise KeyError(f"offset {delta} is not part of this spectrum")
        return int(self.counts[pos, b])

    def row(self, delta: int) -> np.ndarray:
        pos = int(np.searchsorted(self.deltas, delta))
        if self.counts is None or pos >= len(self.deltas) or self.deltas[pos] != delta:
            raise KeyError(f"row {delta} is not available")
        return self.counts[pos]

    def best(self) -> Tuple[int, int, int]:
        """(count, delta, b) maximizing count over nonzero offsets; ties go to the smallest delta, then b."""
        mask = self.deltas != 0
        if not mask.any():
            return 0, 0, 0
        rows = np.flatnonzero(mask)
        pos = rows[int(np.argmax(self.row_max[rows]))]
        return int(self.row_max[pos]), int(self.deltas[pos]), int(self.row_argmax[pos])

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """(deltaIndex, bIndex, count) sorted by delta then b."""
        if self.counts is None:
            raise ValueError("spectrum was streamed, no table to export")
        for i, delta in enumerate(self.deltas):
            for b, c in enumerate(self.counts[i]):
                yield int(delta), b, int(c)


def offsets(f: 'Func', restricted: bool) -> np.ndarray:
    """Joint offsets in index order; restricted keeps only a1 != 0."""
    idx = np.arange(f.domain.order, dtype=np.int64)
    if restricted:
        idx = idx[idx % f.n1 != 0]
    return idx


def differential_spectrum(f: 'Func', restricted: bool = False, workers: int = 1) -> DifferentialSpectrum:
    n, nb = f.domain.order, f.b.order
    check_size(n * nb, f"differential spectrum of {f.label}")
    deltas = offsets(f, restricted)
    keep = len(deltas) * nb <= MATERIALIZE_LIMIT
    if not keep:
        logger.info("Streaming spectrum of %s, %d cells exceed the table limit", f.label, len(deltas) * nb)
    parts = run_partitioned(spectrum_chunk, build_payload(f), deltas, workers, extra=(keep,))
    counts = np.concatenate([p[0] for p in parts]) if keep else None
    row_max = np.concatenate([p[1] for p in parts])
    row_arg = np.concatenate([p[2] for p in parts])
    return DifferentialSpectrum(f, deltas, counts, row_max, row_arg, restricted)


def nonlinearity_of(f: 'Func', workers: int = 1) -> Fraction:
    """max over nonzero delta and every b of the derivative count, over |A|."""
    spectrum = differential_spectrum(f, restricted=False, workers=workers)
    count, _, _ = spectrum.best()
    if f.domain.order == 1:
        logger.warning("%s has a trivial domain, nonlinearity taken as 0", f.label)
    return Fraction(count, f.domain.order)


def partial_nonlinearity_of(f: 'Func', workers: int = 1) -> Fraction:
    """As nonlinearity_of, with the offset's A1 part restricted to nonzero values."""
    if f.n1 == 1:
        logger.warning("%s has |A1| = 1, partial nonlinearity taken as 0", f.label)
        return Fraction(0)
    spectrum = differential_spectrum(f, restricted=True, workers=workers)
    count, _, _ = spectrum.best()
    return Fraction(count, f.domain.order)


def is_balanced(values: Sequence[int], n_b: int) -> bool:
    values = np.asarray(values, dtype=np.int64)
    if n_b < 1 or len(values) % n_b:
        return False
    if len(values) and (values.min() < 0 or values.max() >= n_b):
        return False
    return bool(np.all(np.bincount(values, minlength=n_b) == len(values) // n_b))


def is_perfect_nonlinear(f: 'Func', workers: int = 1) -> bool:
    return nonlinearity_of(f, workers) == Fraction(1, f.b.order)


def derivatives_balanced(f: 'Func') -> bool:
    """
    Perfect nonlinearity read as: every nonzero derivative is balanced.
    Uses scalar group arithmetic only.
    """
    A, B = f.domain, f.b
    vals = [int(v) for v in f.values]
    for delta in range(1, A.order):
        d = [B.sub(vals[A.add(x, delta)], vals[x]) for x in range(A.order)]
        if not is_balanced(d, B.order):
            return False
    return True
