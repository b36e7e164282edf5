"""The parameter tower N_2 = C(m, t), N_{i+1} = 2**N_i.

Sizes are exact Python integers while the exponent stays below
``EXACT_EXPONENT_CAP`` bits; past that they are kept symbolically as
:class:`PowerOfTwo` so that comparisons against concrete positions still work.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb
from typing import Union

from .errors import ResourceLimit

EXACT_EXPONENT_CAP = 4096
DEFAULT_DENSE_BUDGET = 4096
DEFAULT_SPARSE_BUDGET = 1 << 16
DEFAULT_MAX_LEVEL = 8


@functools.total_ordering
class PowerOfTwo:
    """The natural number 2**exponent, too large to materialize."""

    __slots__ = ("exponent",)

    def __init__(self, exponent: Size):
        if isinstance(exponent, int) and exponent < 0:
            raise ValueError("exponent must be non-negative")
        self.exponent = exponent

    def _cmp(self, other) -> int:
        if isinstance(other, PowerOfTwo):
            a, b = self.exponent, other.exponent
            return (a > b) - (a < b)
        if isinstance(other, int):
            if other <= 0:
                return 1
            if isinstance(self.exponent, PowerOfTwo):
                return 1
            # other < 2**e  iff  other.bit_length() <= e, other == 2**e iff exact power
            if other.bit_length() <= self.exponent:
                return 1
            if other == 1 << self.exponent:
                return 0
            return -1
        return NotImplemented

    def __eq__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r == 0

    def __lt__(self, other):
        r = self._cmp(other)
        return r if r is NotImplemented else r < 0

    def __hash__(self):
        return hash(("PowerOfTwo", self.exponent))

    def __str__(self):
        e = str(self.exponent)
        if isinstance(self.exponent, PowerOfTwo):
            e = f"({e})"
        return f"2^{e}"

    def __repr__(self):
        return f"PowerOfTwo({self.exponent!r})"


Size = Union[int, PowerOfTwo]


def size_to_str(n: Size) -> str:
    """Decimal string for exact sizes, ``2^...`` notation for symbolic ones."""
    return str(n)


def parse_size(text: str) -> Size:
    text = text.strip()
    if text.startswith("2^"):
        inner = text[2:]
        if inner.startswith("(") and inner.endswith(")"):
            inner = inner[1:-1]
        e = parse_size(inner)
        if isinstance(e, int) and e <= EXACT_EXPONENT_CAP:
            return 1 << e
        return PowerOfTwo(e)
    return int(text)


def two_to_the(n: Size) -> Size:
    if isinstance(n, int) and n <= EXACT_EXPONENT_CAP:
        return 1 << n
    return PowerOfTwo(n)


@dataclass(frozen=True)
class LevelChain:
    """Parameters (m, t) and the tower of vertex counts N_2, N_3, ...

    ``dense_budget`` is the largest vector length stored as a bit array;
    ``sparse_budget`` bounds the number of one-positions a converted vertex
    may carry.
    """

    m: int
    t: int
    max_level: int = DEFAULT_MAX_LEVEL
    dense_budget: int = DEFAULT_DENSE_BUDGET
    sparse_budget: int = DEFAULT_SPARSE_BUDGET
    levels: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.t < 1 or self.m <= self.t:
            raise ValueError(f"need 1 <= t < m, got m={self.m}, t={self.t}")
        if self.max_level < 2:
            raise ValueError("max_level must be at least 2")
        sizes = [comb(self.m, self.t)]
        for _ in range(3, self.max_level + 1):
            sizes.append(two_to_the(sizes[-1]))
        object.__setattr__(self, "levels", tuple(sizes))

    @property
    def n2(self) -> int:
        return self.levels[0]

    def size(self, level: int) -> Size:
        """N_level, the number of vertices of the level-``level`` hypergraph."""
        self.require(level)
        return self.levels[level - 2]

    def require(self, level: int) -> None:
        if level < 2:
            raise ValueError(f"levels start at 2, got {level}")
        if level > self.max_level:
            raise ResourceLimit(f"chain only reaches level {self.max_level}, asked for {level}")

    def vertex_length(self, level: int) -> Size:
        """Length of the 0/1 vectors that are the vertices at ``level`` >= 3."""
        if level < 3:
            raise ValueError("level-2 vertices are t-subsets, not bit vectors")
        return self.size(level - 1)

    def dense_ok(self, level: int) -> bool:
        length = self.vertex_length(level)
        return isinstance(length, int) and length <= self.dense_budget

    def with_budget(self, dense_budget: int) -> "LevelChain":
        return LevelChain(self.m, self.t, self.max_level, dense_budget, self.sparse_budget)
