"""
Seeded random systematic codes: a uniform random tag for every (s1, s2).
"""
import logging
from typing import Iterator

import numpy as np

from algebra.field import field_make
from algebra.groups import GroupSpec
from amd.code import AmdCode, build_code
from functions.func import func_from_table
from utils.errors import ValidationError

logger = logging.getLogger(__name__)

_FIELD_ORDERS = {4: (2, 2), 8: (2, 3), 9: (3, 2)}


def _random_group(rng: np.random.Generator, order: int) -> GroupSpec:
    """Z(order), or for some orders GF(order) or Z(2) x Z(order/2)."""
    choice = int(rng.integers(0, 3))
    if choice == 1 and order in _FIELD_ORDERS:
        return GroupSpec.field_additive(field_make(*_FIELD_ORDERS[order]))
    if choice == 2 and order % 2 == 0 and order >= 4:
        return GroupSpec.product(GroupSpec.cyclic(2), GroupSpec.cyclic(order // 2))
    return GroupSpec.cyclic(order)


def random_systematic_code(seed: int, max_order: int = 8) -> AmdCode:
    if max_order < 2:
        raise ValidationError(f"max_order must be >= 2, got {max_order}")
    rng = np.random.default_rng(seed)
    n1, n2, nb = (int(v) for v in rng.integers(2, max_order + 1, size=3))
    a1, a2, b = _random_group(rng, n1), _random_group(rng, n2), _random_group(rng, nb)
    tags = rng.integers(0, nb, size=n1 * n2)
    func = func_from_table(a1, a2, b, tags.tolist(), {'id': f"random-{seed}"})
    logger.debug("Random code %d: A1=%s A2=%s B=%s", seed, a1, a2, b)
    return build_code(func)


def random_corpus(count: int, seed: int = 0, max_order: int = 8) -> Iterator[AmdCode]:
    for i in range(count):
        yield random_systematic_code(seed + i, max_order)
