"""Mubayi's edge-coloring of K_{N_2} on the t-subsets of [m]."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .chain import LevelChain
from .errors import EqualVertices, NotASubset, RankOutOfRange
from .vertex import BaseVertex, unrank_base


@dataclass(frozen=True)
class Color2:
    c1: Optional[int]
    c2: Optional[int]
    c3: Optional[int]
    c4: Optional[int]

    def __str__(self):
        parts = ("_" if c is None else str(c) for c in (self.c1, self.c2, self.c3, self.c4))
        return f"M2({','.join(parts)})"

    def project(self, coords) -> "Color2":
        """Keep only the listed coordinates (1-based); the rest print as "_"."""
        vals = (self.c1, self.c2, self.c3, self.c4)
        return Color2(*(v if i + 1 in coords else None for i, v in enumerate(vals)))


def canonical_fB(B: BaseVertex, S) -> int:
    """Bijection 2^B -> [2^t]: the j-th smallest element of B sets bit j (MSB first)."""
    S = set(S)
    if not S <= set(B.elements):
        raise NotASubset(f"{sorted(S)} is not a subset of {B!r}")
    value = 0
    for e in B.elements:
        value = (value << 1) | (e in S)
    return value + 1


def chi2(u: BaseVertex, v: BaseVertex) -> Color2:
    if u == v:
        raise EqualVertices(f"chi2 of a vertex with itself: {u!r}")
    S, T = (u, v) if u < v else (v, u)
    s, t = set(S.elements), set(T.elements)
    # S < T, so the first coordinate where they differ is a 1 of T
    c1 = min(s ^ t)
    assert c1 in t
    # |S| = |T| and they agree before c1, so S has an unmatched 1 after c1
    c2 = min(j for j in s - t if j > c1)
    common = s & t
    return Color2(c1, c2, canonical_fB(S, common), canonical_fB(T, common))


def choose_params(n: int) -> tuple[int, int]:
    """(m, t) with t = ceil(sqrt(log2 n)) and m minimal such that C(m, t) >= n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    t = 1
    # t >= sqrt(log2 n)  <=>  2**(t*t) >= n, checked exactly
    while (1 << (t * t)) < n:
        t += 1
    m = t + 1
    while comb(m, t) < n:
        m += 1
    return m, t


def restrict(chain: LevelChain, n: int) -> list[BaseVertex]:
    """The n smallest vertices of K_{N_2}; chi2 restricted to them colors K_n."""
    if not 1 <= n <= chain.n2:
        raise RankOutOfRange(f"n = {n} outside [1, {chain.n2}]")
    return [unrank_base(chain, r) for r in range(1, n + 1)]


def color_space_size2(chain: LevelChain) -> int:
    return chain.m ** 2 * 2 ** (2 * chain.t)
