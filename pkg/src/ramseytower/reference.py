"""Slow from-definitions colorings used as a test oracle.

Nothing here touches the memo tables, rank arithmetic or bit tricks of the
main modules: vertices are explicit sets of one-positions, the t-subset
order is produced by sorting every subset, and shapes are read off the case
table directly. Colors come back as canonical strings so they can be
compared against ``str()`` of the fast path.
"""

from __future__ import annotations

from functools import cmp_to_key
from itertools import combinations
from math import comb


def base_order(m: int, t: int) -> list:
    subsets = list(combinations(range(1, m + 1), t))
    return sorted(subsets, key=lambda s: int("".join("1" if i in s else "0" for i in range(1, m + 1)), 2))


def char_vector(m: int, s) -> list:
    return [1 if i in s else 0 for i in range(1, m + 1)]


def f_bijection(B, S) -> int:
    bits = "".join("1" if b in S else "0" for b in sorted(B))
    return int(bits, 2) + 1


def chi2_string(m: int, S, T) -> str:
    v, w = char_vector(m, S), char_vector(m, T)
    if int("".join(map(str, v)), 2) > int("".join(map(str, w)), 2):
        S, T, v, w = T, S, w, v
    c1 = next(i for i in range(1, m + 1) if v[i - 1] == 0 and w[i - 1] == 1)
    c2 = next(j for j in range(c1 + 1, m + 1) if v[j - 1] == 1 and w[j - 1] == 0)
    common = set(S) & set(T)
    return f"M2({c1},{c2},{f_bijection(S, common)},{f_bijection(T, common)})"


def delta(a: frozenset, b: frozenset) -> int:
    return min(a ^ b)


def less(a: frozenset, b: frozenset) -> bool:
    d = delta(a, b)
    return d in b


def sort_vertices(vs) -> list:
    return sorted(vs, key=cmp_to_key(lambda a, b: -1 if less(a, b) else 1))


def shape(ds) -> str:
    if len(ds) == 2:
        return "+1" if ds[0] < ds[1] else "-1"
    if all(ds[i] < ds[i + 1] for i in range(len(ds) - 1)):
        return "I0"
    if all(ds[i] > ds[i + 1] for i in range(len(ds) - 1)):
        return "D0"
    for ell in range(2, len(ds)):
        prev, cur, nxt = ds[ell - 2], ds[ell - 1], ds[ell]
        if prev > cur and cur < nxt:
            return f"A({ell})"
        if prev < cur and cur > nxt:
            return f"B({ell},+)" if prev < nxt else f"B({ell},-)"
    raise AssertionError(ds)


def pattern(ds) -> str:
    firsts = []
    for d in ds:
        if d not in firsts:
            firsts.append(d)
    return "".join("abcdefghijklmnopqrstuvwxyz"[firsts.index(d)] for d in ds)


def level_size(m: int, t: int, level: int) -> int:
    n = comb(m, t)
    for _ in range(level - 2):
        n = 2**n
    return n


def position_vertex(m: int, t: int, level: int, pos: int):
    """The vertex one level below ``level`` named by position ``pos``."""
    if level == 3:
        return base_order(m, t)[pos - 1]
    width = level_size(m, t, level - 2)
    digits = format(pos - 1, f"0{width}b")
    return frozenset(i + 1 for i, ch in enumerate(digits) if ch == "1")


def color_string(m: int, t: int, level: int, edge) -> str:
    """chi_level of ``edge`` (t-subsets for level 2, one-position sets above)."""
    if level == 2:
        S, T = edge
        return chi2_string(m, S, T)
    verts = sort_vertices([frozenset(v) for v in edge])
    ds = [delta(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
    if len(set(ds)) < len(ds):
        inner = f"REPEAT({pattern(ds)})"
    else:
        lower = [position_vertex(m, t, level, d) for d in sorted(ds)]
        inner = color_string(m, t, level - 1, lower)
    return f"M{level}({inner},{shape(ds)})"


def verify_pq(color_fn, vertices, k: int, p: int, q: int):
    """Plain loop over p-subsets; returns (checked, min colors, violating index tuples)."""
    checked = 0
    low = None
    bad = []
    for clique in combinations(range(len(vertices)), p):
        colors = {color_fn([vertices[i] for i in e]) for e in combinations(clique, k)}
        checked += 1
        low = len(colors) if low is None else min(low, len(colors))
        if len(colors) < q:
            bad.append(clique)
    return checked, low, bad
