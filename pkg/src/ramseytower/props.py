"""Randomized checks of the stepping-up delta properties.

These are theorems about binary order, so any counterexample means a bug in
``delta`` or ``compare``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chain import LevelChain, PowerOfTwo
from .errors import ResourceLimit
from .sampling import WordStream
from .vertex import BitVertex, delta, delta_sequence

PROPERTIES = ("A", "B", "C", "D", "extremum")
MAX_CHAIN = 8


def property_a(a, b, c) -> bool:
    """delta(a, b) != delta(b, c) for a < b < c."""
    return delta(a, b) != delta(b, c)


def property_b(chain: Sequence) -> bool:
    """delta(first, last) is the minimum of the consecutive deltas."""
    return delta(chain[0], chain[-1]) == min(delta_sequence(chain))


def property_c(chain: Sequence) -> bool:
    ds = delta_sequence(chain)
    return ds.count(min(ds)) == 1


def property_d(a1, a2, a3, a4) -> bool:
    d1, d2, d3 = delta_sequence((a1, a2, a3, a4))
    return not (d1 < d2) or d1 != d3


def has_extremum(ds: Sequence[int]) -> bool:
    return any(ds[s - 1] < ds[s] > ds[s + 1] or ds[s - 1] > ds[s] < ds[s + 1] for s in range(1, len(ds) - 1))


def property_extremum(chain: Sequence) -> bool:
    """Every non-monotone delta sequence has an interior local extremum."""
    ds = delta_sequence(chain)
    pairs = list(zip(ds, ds[1:]))
    if all(x < y for x, y in pairs) or all(x > y for x, y in pairs):
        return True
    return has_extremum(ds)


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: int = 0
    counterexample: Optional[list] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Drawer:
    def __init__(self, chain: LevelChain, level: int, seed: int, max_ones: int, max_position):
        self.level = level
        self.length = chain.vertex_length(level)
        self.dense = chain.dense_ok(level)
        self.rng = WordStream(seed)
        self.max_ones = max_ones
        top = self.length if max_position is None else max_position
        if isinstance(top, PowerOfTwo):
            raise ResourceLimit(f"positions up to {self.length} cannot be drawn; pass max_position")
        if not self.dense and top > self.length:
            raise ValueError("max_position exceeds the vector length")
        self.top = top
        self.space = chain.size(level)

    def vertex(self) -> BitVertex:
        if self.dense:
            return BitVertex(self.level, self.length, bits=self.rng.bits(self.length))
        count = self.rng.between(1, min(self.max_ones, self.top))
        ones = set()
        while len(ones) < count:
            ones.add(self.rng.between(1, self.top))
        return BitVertex(self.level, self.length, ones=tuple(sorted(ones)))

    def chain(self, r: int) -> list:
        if r > self.space:
            raise ValueError(f"cannot draw {r} distinct vertices from {self.space}")
        out = set()
        while len(out) < r:
            out.add(self.vertex())
        return sorted(out)


def fuzz_properties(
    chain: LevelChain,
    level: int,
    trials: int,
    seed: int,
    *,
    max_ones: int = 8,
    max_position: Optional[int] = None,
) -> dict:
    """Run ``trials`` random instances of each property at ``level``.

    Returns a dict name -> PropertyResult; ``counterexample`` holds the first
    failing tuple, if any.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    draw = _Drawer(chain, level, seed, max_ones, max_position)
    results = {name: PropertyResult(name) for name in PROPERTIES}

    def record(name, verts, ok):
        res = results[name]
        res.trials += 1
        if not ok:
            res.failures += 1
            if res.counterexample is None:
                res.counterexample = list(verts)

    r_hi = min(MAX_CHAIN, draw.space) if isinstance(draw.space, int) else MAX_CHAIN
    for _ in range(trials):
        t = draw.chain(3)
        record("A", t, property_a(*t))
        c = draw.chain(draw.rng.between(3, r_hi))
        record("B", c, property_b(c))
        c = draw.chain(draw.rng.between(3, r_hi))
        record("C", c, property_c(c))
        f = draw.chain(4)
        record("D", f, property_d(*f))
        c = draw.chain(draw.rng.between(4, r_hi))
        record("extremum", c, property_extremum(c))
    return results
