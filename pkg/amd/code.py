"""
Systematic AMD codes E(s) = (s, x, f(s, x)) built from a Func.

Sources and randomness are equiprobable throughout.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from functions.func import Func
from utils.errors import BadModel, BadSource, IndexOutOfRange, ZeroOffset
from utils.helpers import check_size, render_log2

logger = logging.getLogger(__name__)

WEAK = 'weak'
STRONG = 'strong'
STRONGER = 'stronger'
MODELS = (WEAK, STRONG, STRONGER)


class SeededSampler:
    """
    Deterministic uniform sampler over Z(n).

    Draws (n-1).bit_length() random bits and rejects values >= n, so every
    index is exactly equiprobable for any n.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._rng = np.random.default_rng(seed)

    def draw(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"cannot sample from an empty range ({n})")
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        while True:
            v = int(self._rng.integers(0, 1 << bits))
            if v < n:
                return v


class ForcedSampler:
    """Replays the given values in a loop, ignoring n; for tests and exhaustive round trips."""

    def __init__(self, values: Sequence[int]):
        self.values = list(values)
        self._pos = 0

    def draw(self, n: int) -> int:
        v = self.values[self._pos % len(self.values)]
        self._pos += 1
        return v


@dataclass(frozen=True)
class Codeword:
    s1: int
    s2: int
    tag: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.s1, self.s2, self.tag

    def masked(self, code: 'AmdCode', offset) -> 'Codeword':
        """Componentwise g + (d1, d2, d3) in A1 x A2 x B."""
        d1, d2, d3 = offset.as_tuple() if isinstance(offset, Codeword) else offset
        code.check_word(d1, d2, d3)
        f = code.func
        return Codeword(f.a1.add(self.s1, d1), f.a2.add(self.s2, d2), f.b.add(self.tag, d3))


@dataclass(frozen=True, eq=False)
class AmdCode:
    func: Func

    @property
    def m(self) -> int:
        return self.func.n1

    @property
    def t(self) -> int:
        return self.func.n2

    @property
    def nb(self) -> int:
        return self.func.b.order

    @property
    def n(self) -> int:
        return self.m * self.t * self.nb

    @property
    def code_id(self) -> str:
        return self.func.label

    def check_word(self, s1: int, s2: int, tag: int):
        self.func.a1.check_index(s1, 'source component')
        self.func.a2.check_index(s2, 'randomness component')
        self.func.b.check_index(tag, 'tag component')

    def valid_encodings(self) -> Dict[int, List[Codeword]]:
        """G_s for every source, found by running decode over all of G."""
        check_size(self.n, f"codeword space of {self.code_id}")
        groups: Dict[int, List[Codeword]] = {s: [] for s in range(self.m)}
        for s1 in range(self.m):
            for s2 in range(self.t):
                for tag in range(self.nb):
                    g = Codeword(s1, s2, tag)
                    s = decode(self, g)
                    if s is not None:
                        groups[s].append(g)
        return groups

    def random_mask(self, sampler) -> Codeword:
        return Codeword(sampler.draw(self.m), sampler.draw(self.t), sampler.draw(self.nb))


def build_code(f: Func) -> AmdCode:
    code = AmdCode(f)
    logger.debug("Built code %s with (m, n, t) = (%d, %d, %d)", code.code_id, code.m, code.n, code.t)
    return code


def encode(code: AmdCode, s1: int, sampler) -> Codeword:
    if not 0 <= s1 < code.m:
        raise BadSource(f"source {s1} outside A1 of order {code.m}")
    x = sampler.draw(code.t)
    if not 0 <= x < code.t:
        raise IndexOutOfRange(f"sampler returned {x}, outside A2 of order {code.t}")
    return Codeword(s1, x, code.func.evaluate(s1, x))


def decode(code: AmdCode, g: Codeword) -> Optional[int]:
    """The source when the tag matches, None for a rejected word."""
    code.check_word(g.s1, g.s2, g.tag)
    return g.s1 if code.func.evaluate(g.s1, g.s2) == g.tag else None


def _hits(code: AmdCode, delta: Tuple[int, int, int]) -> np.ndarray:
    """Boolean per (s, x), joint-indexed: the shifted word is valid."""
    f = code.func
    a1, a2, b = delta
    vals = f.values
    shifted = f.domain.shift_all(f.joint(a1, a2))
    return f.b.sub_vec(vals[shifted], vals) == b


def success_given(code: AmdCode, delta, model: str, source: Optional[int] = None) -> Fraction:
    """
    Success probability of offset delta = (a1, a2, b) under one attack model.

    weak and strong count only decodes to a different source, so a1 = 0 gives 0;
    stronger counts any valid shifted word.
    """
    if model not in MODELS:
        raise BadModel(f"unknown model {model!r}, expected one of {', '.join(MODELS)}")
    a1, a2, b = (int(v) for v in delta)
    code.check_word(a1, a2, b)
    if (a1, a2, b) == (0, 0, 0):
        raise ZeroOffset("offset (0, 0, 0) leaves every codeword unchanged")
    if model == STRONG and (source is None or not 0 <= source < code.m):
        raise BadSource(f"strong model needs a source in [0, {code.m}), got {source}")
    if model != STRONGER and a1 == 0:
        return Fraction(0)
    hits = _hits(code, (a1, a2, b))
    if model == STRONG:
        per_source = hits.reshape(code.t, code.m)[:, source]
        return Fraction(int(per_source.sum()), code.t)
    return Fraction(int(hits.sum()), code.m * code.t)


class TagSize(NamedTuple):
    n: int
    m: int
    ratio: Fraction
    bits: str


def tag_size(code: AmdCode) -> TagSize:
    """n/m exactly, with log2(n/m) rendered to six decimals."""
    ratio = Fraction(code.n, code.m)
    return TagSize(code.n, code.m, ratio, render_log2(ratio))
