"""Stepping-up vertices, the delta function and rank/index identifications.

Positions are 1-based with position 1 the most significant coordinate, so a
vertex read left to right is the binary numeral of its place in the order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .chain import LevelChain, PowerOfTwo, Size
from .errors import EqualVertices, LevelMismatch, RankOutOfRange, ResourceLimit

MAX_VALUE_BITS = 1 << 20


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class BaseVertex:
    """A t-subset of [m], i.e. a vertex of K_{N_2}."""

    m: int
    elements: tuple

    def __post_init__(self):
        els = tuple(self.elements)
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els and (els[0] < 1 or els[-1] > self.m):
            raise ValueError(f"elements must lie in 1..{self.m}: {els}")
        object.__setattr__(self, "elements", els)

    @property
    def t(self) -> int:
        return len(self.elements)

    @functools.cached_property
    def key(self) -> int:
        """The characteristic vector as a binary integer, coordinate 1 first."""
        return sum(1 << (self.m - e) for e in self.elements)

    @property
    def bits(self) -> tuple:
        s = set(self.elements)
        return tuple(int(i in s) for i in range(1, self.m + 1))

    def __eq__(self, other):
        if not isinstance(other, BaseVertex):
            return NotImplemented
        return self.m == other.m and self.elements == other.elements

    def __lt__(self, other):
        if not isinstance(other, BaseVertex):
            return NotImplemented
        if self.m != other.m:
            raise LevelMismatch(f"m differs: {self.m} vs {other.m}")
        return self.key < other.key

    def __hash__(self):
        return hash((self.m, self.elements))

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


class BitVertex:
    """A 0/1 vector of length N_{level-1}: a vertex of H_level for level >= 3.

    A vertex is either dense (the vector held as one int, bit ``length - p``
    standing for position ``p``) or sparse (a sorted tuple of 1-positions).
    Both forms of the same vector compare and hash equal.
    """

    __slots__ = ("level", "length", "_ones", "_bits", "_hash")

    def __init__(self, level: int, length: Size, *, ones=None, bits=None):
        self.level = level
        self.length = length
        self._ones = ones
        self._bits = bits
        self._hash = None

    @classmethod
    def sparse(cls, level: int, length: Size, ones: Iterable[int]) -> "BitVertex":
        ones = tuple(ones)
        if any(b <= a for a, b in zip(ones, ones[1:])):
            raise ValueError("one-positions must be strictly increasing")
        if ones and (ones[0] < 1 or ones[-1] > length):
            raise ValueError(f"one-positions must lie in [1, {length}]")
        return cls(level, length, ones=ones)

    @classmethod
    def dense(cls, level: int, length: int, bits: int | Sequence[int] | str) -> "BitVertex":
        if isinstance(length, PowerOfTwo):
            raise ResourceLimit("dense form needs a concrete length")
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        if not isinstance(bits, int):
            seq = list(bits)
            if len(seq) != length:
                raise ValueError(f"expected {length} coordinates, got {len(seq)}")
            value = 0
            for b in seq:
                if b not in (0, 1):
                    raise ValueError("coordinates must be 0 or 1")
                value = (value << 1) | b
            bits = value
        if bits < 0 or bits >> length:
            raise ValueError(f"value does not fit in {length} bits")
        return cls(level, length, bits=bits)

    @property
    def is_dense(self) -> bool:
        return self._bits is not None

    @property
    def ones(self) -> tuple:
        if self._ones is None:
            v, n = self._bits, self.length
            out = []
            while v:
                low = v & -v
                out.append(n - low.bit_length() + 1)
                v ^= low
            self._ones = tuple(reversed(out))
        return self._ones

    @property
    def value(self) -> int:
        """The vector read as a binary integer (dense or small sparse only)."""
        if self._bits is None:
            if isinstance(self.length, PowerOfTwo) or self.length > MAX_VALUE_BITS:
                raise ResourceLimit("vector too long to read as an integer")
            self._bits = sum(1 << (self.length - p) for p in self._ones)
        return self._bits

    def to_sparse(self) -> "BitVertex":
        return BitVertex(self.level, self.length, ones=self.ones)

    def to_dense(self) -> "BitVertex":
        return BitVertex(self.level, self.length, bits=self.value)

    def bitstring(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __eq__(self, other):
        if not isinstance(other, BitVertex):
            return NotImplemented
        if self.length != other.length:
            return False
        if self._bits is not None and other._bits is not None:
            return self._bits == other._bits
        return self.ones == other.ones

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.length, self.ones))
        return self._hash

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __repr__(self):
        if self._bits is not None and self.length <= 64:
            return f"BitVertex({self.bitstring()})"
        return f"BitVertex(level={self.level}, ones={list(self.ones)})"


def _check_pair(a: BitVertex, b: BitVertex) -> None:
    if a.length != b.length or a.level != b.level:
        raise LevelMismatch(f"level/length differ: ({a.level}, {a.length}) vs ({b.level}, {b.length})")


def _first_difference(a: BitVertex, b: BitVertex):
    """Return (delta, sign) with sign > 0 when ``a`` holds the 1 at delta."""
    if a._bits is not None and b._bits is not None:
        x = a._bits ^ b._bits
        if not x:
            return None, 0
        d = a.length - x.bit_length() + 1
        return d, (1 if (a._bits >> (a.length - d)) & 1 else -1)
    oa, ob = a.ones, b.ones
    for x, y in zip(oa, ob):
        if x != y:
            return (x, 1) if x < y else (y, -1)
    if len(oa) == len(ob):
        return None, 0
    if len(oa) > len(ob):
        return oa[len(ob)], 1
    return ob[len(oa)], -1


def delta(a: BitVertex, b: BitVertex) -> int:
    """Minimum position at which ``a`` and ``b`` differ."""
    _check_pair(a, b)
    d, _ = _first_difference(a, b)
    if d is None:
        raise EqualVertices(f"delta of a vertex with itself: {a!r}")
    return d


def compare(a: BitVertex, b: BitVertex) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b`` in binary order."""
    _check_pair(a, b)
    return _first_difference(a, b)[1]


def delta_sequence(edge: Sequence[BitVertex]) -> tuple:
    """Consecutive deltas along an edge given in increasing order."""
    return tuple(delta(x, y) for x, y in zip(edge, edge[1:]))


def sort_edge(edge: Iterable) -> tuple:
    out = tuple(sorted(edge))
    for x, y in zip(out, out[1:]):
        if x == y:
            raise EqualVertices(f"repeated vertex in edge: {x!r}")
    return out


def unrank_base(chain: LevelChain, rank: int) -> BaseVertex:
    """The ``rank``-th smallest t-subset of [m] (1-based rank)."""
    m, t = chain.m, chain.t
    if not 1 <= rank <= chain.n2:
        raise RankOutOfRange(f"rank {rank} outside [1, {chain.n2}]")
    r = rank
    left = t
    elements = []
    for i in range(1, m + 1):
        if left == 0:
            break
        zeros_first = comb(m - i, left)
        if r <= zeros_first:
            continue
        r -= zeros_first
        elements.append(i)
        left -= 1
    return BaseVertex(m, tuple(elements))


def rank_base(chain: LevelChain, v: BaseVertex) -> int:
    """Inverse of :func:`unrank_base`."""
    if v.m != chain.m or v.t != chain.t:
        raise LevelMismatch(f"vertex {v!r} is not a {chain.t}-subset of [{chain.m}]")
    rank = 1
    left = chain.t
    s = set(v.elements)
    for i in range(1, chain.m + 1):
        if left == 0:
            break
        if i in s:
            rank += comb(chain.m - i, left)
            left -= 1
    return rank


def index_to_bitvertex(chain: LevelChain, level: int, index: int) -> BitVertex:
    """The ``index``-th vertex of H_{level-1}, for a position of a level vertex.

    Positions of level-``level`` vectors run over [N_{level-1}]; position i
    stands for the i-th smallest vertex one level down, which is the binary
    expansion of ``i - 1`` padded to length N_{level-2}.
    """
    if level < 4:
        raise ValueError("positions of level-3 vectors name t-subsets; use unrank_base")
    bound = chain.size(level - 1)
    if not 1 <= index <= bound:
        raise RankOutOfRange(f"index {index} outside [1, {bound}]")
    return vertex_from_value(chain, level - 1, index - 1)


def vertex_from_value(chain: LevelChain, level: int, value: int) -> BitVertex:
    """The level-``level`` vertex whose vector is the binary expansion of ``value``."""
    length = chain.vertex_length(level)
    if isinstance(length, PowerOfTwo):
        raise ResourceLimit(f"level-{level} vectors are too long to address")
    if chain.dense_ok(level):
        return BitVertex(level, length, bits=value)
    if value.bit_count() > chain.sparse_budget:
        raise ResourceLimit(f"sparse form needs {value.bit_count()} one-positions")
    ones = []
    while value:
        low = value & -value
        ones.append(length - low.bit_length() + 1)
        value ^= low
    ones.reverse()
    return BitVertex(level, length, ones=tuple(ones))
