"""
Exhaustive adversary evaluation of a systematic AMD code.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from amd.code import MODELS, STRONG, STRONGER, WEAK, AmdCode
from nonlinearity.kernel import build_payload, profile_chunk, run_partitioned
from utils.errors import BadModel
from utils.helpers import check_size

logger = logging.getLogger(__name__)

Offset = Tuple[int, int, int]


@dataclass(frozen=True)
class SuccessProfile:
    models: FrozenSet[str]
    weak_rho: Optional[Fraction] = None
    weak_argmax: Optional[Offset] = None
    strong_rho_per_source: Optional[List[Fraction]] = None
    strong_argmax_per_source: Optional[List[Offset]] = None
    strong_rho: Optional[Fraction] = None
    stronger_rho: Optional[Fraction] = None
    stronger_argmax: Optional[Offset] = None
    notes: dict = field(default_factory=dict)

    def has(self, model: str) -> bool:
        return model in self.models


def _first_max(values: np.ndarray, rows: np.ndarray) -> Optional[int]:
    """Position (into values) of the first maximum among rows, or None when rows is empty."""
    if not len(rows):
        return None
    return int(rows[int(np.argmax(values[rows]))])


def evaluate(code: AmdCode, models: Iterable[str] = MODELS, workers: int = 1) -> SuccessProfile:
    models = frozenset(models)
    unknown = models - set(MODELS)
    if unknown:
        raise BadModel(f"unknown model(s) {sorted(unknown)}, expected a subset of {list(MODELS)}")
    f = code.func
    m, t, nb = code.m, code.t, code.nb
    N = f.domain.order
    check_size(N * nb, f"offset space of {code.code_id}")
    with_sources = STRONG in models
    if with_sources:
        check_size(m * nb, f"per-source counts of {code.code_id}")

    deltas = np.arange(1, N, dtype=np.int64)
    logger.info("Evaluating %s over %d offsets (models: %s, workers: %d)",
                code.code_id, len(deltas) * nb, ','.join(sorted(models)), workers)
    parts = run_partitioned(profile_chunk, build_payload(f), deltas, workers, extra=(with_sources,))
    row_max = np.concatenate([p[0] for p in parts]) if len(deltas) else np.zeros(0, dtype=np.int64)
    row_arg = np.concatenate([p[1] for p in parts]) if len(deltas) else np.zeros(0, dtype=np.int64)
    a1_nonzero = np.flatnonzero(deltas % m != 0)

    def offset(pos: int, b: int) -> Offset:
        a1, a2 = f.split_joint(int(deltas[pos]))
        return a1, a2, int(b)

    out = {}
    if WEAK in models:
        pos = _first_max(row_max, a1_nonzero)
        out['weak_rho'] = Fraction(int(row_max[pos]), m * t) if pos is not None else Fraction(0)
        out['weak_argmax'] = offset(pos, row_arg[pos]) if pos is not None else None
    if STRONGER in models:
        pos = _first_max(row_max, np.arange(len(deltas)))
        if pos is None:
            # only offsets (0, 0, b != 0) remain, none of which hits a valid word
            out['stronger_rho'], out['stronger_argmax'] = Fraction(0), (0, 0, 1 % nb)
        else:
            out['stronger_rho'] = Fraction(int(row_max[pos]), m * t)
            out['stronger_argmax'] = offset(pos, row_arg[pos])
    if with_sources:
        per_source, argmaxes = [], []
        if len(a1_nonzero):
            src_max = np.concatenate([p[2] for p in parts])
            src_arg = np.concatenate([p[3] for p in parts])
        for s in range(m):
            pos = _first_max(src_max[:, s], a1_nonzero) if len(a1_nonzero) else None
            if pos is None:
                per_source.append(Fraction(0))
                argmaxes.append(None)
            else:
                per_source.append(Fraction(int(src_max[pos, s]), t))
                argmaxes.append(offset(pos, src_arg[pos, s]))
        out['strong_rho_per_source'] = per_source
        out['strong_argmax_per_source'] = argmaxes
        out['strong_rho'] = max(per_source)
    logger.debug("Profile of %s: %s", code.code_id, {k: str(v) for k, v in out.items() if 'rho' in k})
    return SuccessProfile(models=models, **out)
