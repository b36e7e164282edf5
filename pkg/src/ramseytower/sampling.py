"""Deterministic vertex sampling.

All randomness comes from numpy's PCG64 bit generator read as a raw stream of
64-bit words, so a (strategy, n, seed, chain) quadruple names the same vertex
set on every platform and numpy version.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .base import restrict
from .chain import LevelChain, PowerOfTwo
from .errors import NotEnoughDistinct, RankOutOfRange, ResourceLimit
from .vertex import BitVertex, unrank_base, vertex_from_value

STRATEGIES = ("first-n", "random-dense", "random-sparse")
_ATTEMPTS_PER_VERTEX = 1000


class WordStream:
    """Uniform integers drawn from a seeded PCG64 raw word stream."""

    def __init__(self, seed: int, block: int = 4096):
        self._gen = np.random.PCG64(seed & (2**64 - 1))
        self._block = block
        self._buf = []
        self._pos = 0

    def word(self) -> int:
        if self._pos >= len(self._buf):
            self._buf = self._gen.random_raw(self._block).tolist()
            self._pos = 0
        w = self._buf[self._pos]
        self._pos += 1
        return w

    def bits(self, n: int) -> int:
        value = 0
        got = 0
        while got < n:
            value |= self.word() << got
            got += 64
        return value & ((1 << n) - 1)

    def below(self, bound: int) -> int:
        """Uniform in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        n = (bound - 1).bit_length()
        while True:
            x = self.bits(n)
            if x < bound:
                return x

    def between(self, lo: int, hi: int) -> int:
        """Uniform in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class SampleSpec:
    strategy: str
    n: int
    seed: int = 0
    max_ones: int = 8
    max_position: Optional[int] = None

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; pick one of {STRATEGIES}")
        if self.n < 1:
            raise ValueError("n must be positive")

    def describe(self) -> dict:
        d = {"strategy": self.strategy, "n": self.n, "seed": self.seed}
        if self.strategy == "random-sparse":
            d["max_ones"] = self.max_ones
            if self.max_position is not None:
                d["max_position"] = str(self.max_position)
        return d


def sample_vertices(chain: LevelChain, level: int, spec: SampleSpec) -> list:
    """Distinct vertices of H_level, in increasing order."""
    if spec.n > chain.size(level):
        raise RankOutOfRange(f"n = {spec.n} exceeds N_{level} = {chain.size(level)}")
    if level == 2:
        return _sample_base(chain, spec)
    length = chain.vertex_length(level)
    if spec.strategy == "first-n":
        return [vertex_from_value(chain, level, i) for i in range(spec.n)]
    rng = WordStream(spec.seed)
    out = set()
    attempts = 0
    if spec.strategy == "random-dense":
        if not chain.dense_ok(level):
            raise ResourceLimit(f"level-{level} vectors have length {length} > dense budget {chain.dense_budget}")
        while len(out) < spec.n:
            attempts += 1
            if attempts > _ATTEMPTS_PER_VERTEX * spec.n:
                raise NotEnoughDistinct(f"could not draw {spec.n} distinct vertices")
            out.add(BitVertex(level, length, bits=rng.bits(length)))
        return sorted(out)
    if spec.max_ones < 1:
        raise ValueError("max_ones must be at least 1")
    top = length
    if spec.max_position is not None:
        top = min(length, spec.max_position) if not isinstance(length, PowerOfTwo) else spec.max_position
        if isinstance(length, PowerOfTwo) and not spec.max_position <= length:
            raise RankOutOfRange("max_position exceeds the vector length")
    if isinstance(top, PowerOfTwo):
        raise ResourceLimit(f"positions up to {length} cannot be drawn; pass max_position")
    if sum(comb(top, j) for j in range(1, min(spec.max_ones, top) + 1)) < spec.n:
        raise NotEnoughDistinct(f"fewer than {spec.n} vectors with at most {spec.max_ones} ones")
    while len(out) < spec.n:
        attempts += 1
        if attempts > _ATTEMPTS_PER_VERTEX * spec.n:
            raise NotEnoughDistinct(f"could not draw {spec.n} distinct vertices")
        count = rng.between(1, min(spec.max_ones, top))
        ones = set()
        while len(ones) < count:
            ones.add(rng.between(1, top))
        out.add(BitVertex(level, length, ones=tuple(sorted(ones))))
    return sorted(out)


def _sample_base(chain: LevelChain, spec: SampleSpec) -> list:
    if spec.strategy == "first-n":
        return restrict(chain, spec.n)
    rng = WordStream(spec.seed)
    ranks = set()
    while len(ranks) < spec.n:
        ranks.add(rng.between(1, chain.n2))
    return [unrank_base(chain, r) for r in sorted(ranks)]
