"""Stepping-up colorings chi_3, chi_4, ..., chi_k and their shape classifiers.

An edge of H_k is k vertices of {0,1}^{N_{k-1}}. Its color pairs the color
of the delta-values one level down (the deltas are positions in
[N_{k-1}], i.e. vertices of H_{k-1}) with the shape of the delta sequence:
a sign for k = 3 and a ``Phi`` token for k >= 4.

When two non-adjacent deltas coincide the delta-values do not form an edge
one level down; the inner coordinate is then ``Repeat`` carrying the
multiplicity pattern of the sequence.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence, Union

from .base import Color2, chi2, color_space_size2
from .chain import LevelChain
from .errors import AdjacentEqual, IllFormed, LevelMismatch, ResourceLimit
from .vertex import BaseVertex, BitVertex, delta_sequence, index_to_bitvertex, sort_edge, unrank_base

EAGER_TABLE_LIMIT = 50_000


@dataclass(frozen=True)
class Phi:
    """Shape of a delta sequence of length >= 3.

    ``kind`` is one of "I", "D", "A", "B"; ``index`` is the 1-based position
    of the first local extremum (0 for I and D); ``sign`` is +1/-1 for B and
    0 otherwise.
    """

    kind: str
    index: int = 0
    sign: int = 0

    def __str__(self):
        if self.kind in ("I", "D"):
            return f"{self.kind}0"
        if self.kind == "A":
            return f"A({self.index})"
        return f"B({self.index},{'+' if self.sign > 0 else '-'})"


I0 = Phi("I")
D0 = Phi("D")


@dataclass(frozen=True)
class Repeat:
    pattern: str

    def __str__(self):
        return f"REPEAT({self.pattern})"


@dataclass(frozen=True)
class ColorK:
    level: int
    inner: Union[Color2, "ColorK", Repeat]
    shape: Union[int, Phi]

    def __str__(self):
        shape = f"{self.shape:+d}" if isinstance(self.shape, int) else str(self.shape)
        return f"M{self.level}({self.inner},{shape})"


def sign(deltas: Sequence[int]) -> int:
    a, b = deltas
    if a == b:
        raise AdjacentEqual(f"adjacent deltas are equal: {a}")
    return 1 if a < b else -1


def phi(deltas: Sequence[int]) -> Phi:
    d = tuple(deltas)
    if len(d) < 3:
        raise ValueError(f"phi needs at least 3 deltas, got {len(d)}")
    for x, y in zip(d, d[1:]):
        if x == y:
            raise AdjacentEqual(f"adjacent deltas are equal: {d}")
    if all(x < y for x, y in zip(d, d[1:])):
        return I0
    if all(x > y for x, y in zip(d, d[1:])):
        return D0
    for s in range(1, len(d) - 1):
        before, here, after = d[s - 1], d[s], d[s + 1]
        if before > here < after:
            return Phi("A", s + 1)
        if before < here > after:
            if before == after:
                raise IllFormed(f"local maximum with equal neighbours in {d}")
            return Phi("B", s + 1, 1 if before < after else -1)
    raise AssertionError("non-monotone sequence without an interior extremum")


def phi_alphabet(k: int) -> list[Phi]:
    """All shape tokens for k-edges (k >= 4): 3k - 7 of them."""
    out = [I0, D0]
    for ell in range(2, k - 1):
        out += [Phi("A", ell), Phi("B", ell, 1), Phi("B", ell, -1)]
    return out


def repeat_pattern(values: Sequence) -> str:
    """Letters assigned in first-occurrence order, e.g. (2, 1, 2) -> "aba"."""
    names: dict = {}
    for v in values:
        names.setdefault(v, chr(ord("a") + len(names)))
    return "".join(names[v] for v in values)


def sentinel_pattern_count(length: int) -> int:
    """Multiplicity patterns of ``length`` values, adjacent ones distinct, with a repeat."""
    if length < 3:
        return 0
    # ways[j] = patterns using exactly j letters; a new value either reuses one
    # of the j - 1 letters other than its predecessor or opens a new letter
    ways = [0, 1]
    for _ in range(length - 1):
        ways = [0] + [ways[j] * (j - 1) + ways[j - 1] for j in range(1, len(ways))] + [ways[-1]]
    return sum(ways) - 1


ALL_COORDS = (1, 2, 3, 4)


class Chi2Coloring:
    """chi_2 over the t-subsets of [m], memoized by rank pair.

    ``coords`` drops chi_2 coordinates for census experiments; colorings
    built that way carry none of the guarantees of the full one.
    """

    k = 2

    def __init__(self, chain: LevelChain, coords: tuple = ALL_COORDS):
        self.chain = chain
        self.coords = tuple(sorted(set(coords)))
        if not self.coords or not set(self.coords) <= set(ALL_COORDS):
            raise ValueError(f"coordinates must be a non-empty subset of {ALL_COORDS}")
        self._vertices = {}
        self._table = {}

    def _color(self, u: BaseVertex, v: BaseVertex) -> Color2:
        c = chi2(u, v)
        return c if self.coords == ALL_COORDS else c.project(self.coords)

    def __call__(self, u: BaseVertex, v: BaseVertex) -> Color2:
        return self._color(u, v)

    def vertex(self, rank: int) -> BaseVertex:
        v = self._vertices.get(rank)
        if v is None:
            v = self._vertices[rank] = unrank_base(self.chain, rank)
        return v

    def at_positions(self, positions: tuple) -> Color2:
        c = self._table.get(positions)
        if c is None:
            a, b = positions
            c = self._table[positions] = self._color(self.vertex(a), self.vertex(b))
        return c

    def precompute(self) -> None:
        n = self.chain.n2
        if comb(n, 2) <= EAGER_TABLE_LIMIT:
            for pair in combinations(range(1, n + 1), 2):
                self.at_positions(pair)


class StepColoring:
    """chi_k for k >= 3, built on the level-(k-1) coloring ``lower``."""

    def __init__(self, chain: LevelChain, k: int, lower):
        if k < 3:
            raise ValueError("stepping-up colorings start at k = 3")
        chain.require(k)
        self.chain = chain
        self.k = k
        self.lower = lower
        self._table = {}

    def __call__(self, *edge: BitVertex) -> ColorK:
        if len(edge) == 1 and not isinstance(edge[0], BitVertex):
            edge = tuple(edge[0])
        if len(edge) != self.k:
            raise ValueError(f"a level-{self.k} edge has {self.k} vertices, got {len(edge)}")
        length = self.chain.vertex_length(self.k)
        for a in edge:
            if a.level != self.k or a.length != length:
                raise LevelMismatch(f"vertex {a!r} is not a level-{self.k} vertex")
        ds = delta_sequence(sort_edge(edge))
        return self.color_of_deltas(ds)

    def color_of_deltas(self, ds: tuple) -> ColorK:
        shape = sign(ds) if self.k == 3 else phi(ds)
        if len(set(ds)) < len(ds):
            inner = Repeat(repeat_pattern(ds))
        else:
            inner = self.lower.at_positions(tuple(sorted(ds)))
        return ColorK(self.k, inner, shape)

    def vertex(self, index: int) -> BitVertex:
        """The vertex of H_k named by a position of level-(k+1) vectors."""
        return index_to_bitvertex(self.chain, self.k + 1, index)

    def at_positions(self, positions: tuple) -> ColorK:
        c = self._table.get(positions)
        if c is None:
            c = self._table[positions] = self(*(self.vertex(p) for p in positions))
        return c

    def precompute(self) -> None:
        self.lower.precompute()
        try:
            n = self.chain.size(self.k)
        except ResourceLimit:
            return
        if isinstance(n, int) and comb(n, self.k) <= EAGER_TABLE_LIMIT:
            for ranks in combinations(range(1, n + 1), self.k):
                self.at_positions(ranks)


@functools.lru_cache(maxsize=None)
def tower(chain: LevelChain, k: int, chi2_coords: tuple = ALL_COORDS):
    """The (memoized) coloring chi_k of the chain's level-k hypergraph."""
    if k == 2:
        return Chi2Coloring(chain, chi2_coords)
    return StepColoring(chain, k, tower(chain, k - 1, chi2_coords))


def chi3(chain: LevelChain, edge) -> ColorK:
    return tower(chain, 3)(*edge)


def chik(chain: LevelChain, edge) -> ColorK:
    edge = tuple(edge)
    if len(edge) < 3:
        raise ValueError("chik needs k >= 3")
    return tower(chain, len(edge))(*edge)


def color_space_bound(chain: LevelChain, k: int) -> int:
    """Upper bound on the number of colors chi_k can use."""
    chain.require(k)
    if k == 2:
        return color_space_size2(chain)
    if k == 3:
        return 2 * color_space_size2(chain)
    return (3 * k - 7) * (color_space_bound(chain, k - 1) + sentinel_pattern_count(k - 1))
