"""
Enumeration kernels over (offset, input) pairs, partitioned across workers.

Workers receive plain numpy payloads and disjoint, ordered offset chunks;
results are concatenated in chunk order, so the merge does not depend on the
worker count.
"""
import logging
from multiprocessing import Pool
from typing import Callable, List, NamedTuple, Sequence

import numpy as np

logger = logging.getLogger(__name__)


class KernelPayload(NamedTuple):
    a_coords: np.ndarray
    a_moduli: np.ndarray
    a_radix: np.ndarray
    a_rank: np.ndarray
    values: np.ndarray
    b_coords: np.ndarray
    b_moduli: np.ndarray
    b_radix: np.ndarray
    b_rank: np.ndarray
    n1: int
    nb: int


def build_payload(func) -> KernelPayload:
    A, B = func.domain, func.b
    return KernelPayload(A.coords, A.moduli, A.radix, A.rank_to_index, func.values,
                         B.coords, B.moduli, B.radix, B.rank_to_index, func.n1, B.order)


def derivative(pl: KernelPayload, delta: int) -> np.ndarray:
    """D_delta f(x) = f(x + delta) - f(x) for every x of the joint domain."""
    shifted = pl.a_rank[((pl.a_coords + pl.a_coords[delta]) % pl.a_moduli) @ pl.a_radix]
    diff = (pl.b_coords[pl.values[shifted]] - pl.b_coords[pl.values]) % pl.b_moduli
    return pl.b_rank[diff @ pl.b_radix]


def spectrum_chunk(args):
    pl, deltas, keep_rows = args
    rows = np.zeros((len(deltas), pl.nb), dtype=np.int64) if keep_rows else None
    row_max = np.zeros(len(deltas), dtype=np.int64)
    row_arg = np.zeros(len(deltas), dtype=np.int64)
    for i, delta in enumerate(deltas):
        row = np.bincount(derivative(pl, int(delta)), minlength=pl.nb)
        if keep_rows:
            rows[i] = row
        row_arg[i] = int(np.argmax(row))
        row_max[i] = row[row_arg[i]]
    return rows, row_max, row_arg


def profile_chunk(args):
    """
    Per offset (a1, a2): the best b over all (s, x) and, when asked, the best
    b for each source s separately.
    """
    pl, deltas, with_sources = args
    n1, nb = pl.n1, pl.nb
    row_max = np.zeros(len(deltas), dtype=np.int64)
    row_arg = np.zeros(len(deltas), dtype=np.int64)
    src_max = np.zeros((len(deltas), n1), dtype=np.int64) if with_sources else None
    src_arg = np.zeros((len(deltas), n1), dtype=np.int64) if with_sources else None
    sources = np.arange(len(pl.values), dtype=np.int64) % n1
    for i, delta in enumerate(deltas):
        d = derivative(pl, int(delta))
        row = np.bincount(d, minlength=nb)
        row_arg[i] = int(np.argmax(row))
        row_max[i] = row[row_arg[i]]
        if with_sources:
            per_source = np.bincount(sources * nb + d, minlength=n1 * nb).reshape(n1, nb)
            src_arg[i] = np.argmax(per_source, axis=1)
            src_max[i] = per_source[np.arange(n1), src_arg[i]]
    return row_max, row_arg, src_max, src_arg


def run_partitioned(fn: Callable, payload: KernelPayload, deltas: Sequence[int],
                    workers: int = 1, extra: tuple = ()) -> List:
    deltas = np.asarray(deltas, dtype=np.int64)
    if workers <= 1 or len(deltas) < 2:
        return [fn((payload, deltas) + extra)]
    chunks = [c for c in np.array_split(deltas, min(workers, len(deltas))) if len(c)]
    logger.debug("Partitioning %d offsets over %d workers", len(deltas), workers)
    with Pool(processes=workers) as pool:
        return pool.map(fn, [(payload, c) + extra for c in chunks])
