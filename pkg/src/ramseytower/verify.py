"""Exhaustive (p, q)-coloring certification over a finite vertex set.

Every k-edge of the vertex set is colored once; colors are interned to small
integers and laid out by colex rank of the edge. Each p-subset is then
checked with numpy: gather its C(p, k) edge colors, sort, count distinct.

Work is split by the first (smallest) vertex of the p-subset. Partial results
are merged in that order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import chain as iter_chain
from itertools import combinations, islice
from math import comb
from typing import Sequence

import numpy as np

from .errors import LevelMismatch, TooFewVertices
from .vertex import sort_edge

DEFAULT_VIOLATION_CAP = 100
CHUNK_ROWS = 1 << 17


@dataclass
class EdgeColors:
    """Colors of all k-edges of a sorted vertex list."""

    vertices: list
    k: int
    ids: np.ndarray  # color id per edge, indexed by colex rank
    palette: list  # id -> color object
    counts: np.ndarray  # id -> number of edges

    @property
    def labels(self) -> list:
        return [str(c) for c in self.palette]

    def census(self) -> dict:
        out = {str(c): int(n) for c, n in zip(self.palette, self.counts)}
        return dict(sorted(out.items()))


@dataclass
class VerifyReport:
    k: int
    p: int
    q: int
    parameters: dict
    cliques_checked: int
    min_colors_seen: int
    violation_count: int
    violations: list  # (clique vertices, sorted color labels), lex order, capped
    census: dict
    census_is_lower_bound: bool = True
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0


def binom_table(n: int, k: int) -> np.ndarray:
    table = np.zeros((max(n, 1), k + 1), dtype=np.int64)
    for c in range(n):
        for j in range(k + 1):
            table[c, j] = comb(c, j)
    return table


def _combos(n: int, r: int, offset: int = 0) -> np.ndarray:
    count = comb(n, r)
    flat = np.fromiter(iter_chain.from_iterable(combinations(range(offset, offset + n), r)), dtype=np.int64, count=count * r)
    return flat.reshape(count, r)


def _check_vertices(vertices: Sequence) -> list:
    verts = list(sort_edge(vertices))
    if verts and hasattr(verts[0], "level"):
        levels = {v.level for v in verts}
        if len(levels) > 1:
            raise LevelMismatch(f"vertices from several levels: {sorted(levels)}")
    return verts


def edge_colors(coloring, vertices: Sequence) -> EdgeColors:
    k = coloring.k
    verts = _check_vertices(vertices)
    n = len(verts)
    if n < k:
        raise TooFewVertices(f"need at least {k} vertices for a {k}-edge, got {n}")
    binom = binom_table(n, k)
    edges = _combos(n, k)
    ranks = sum(binom[edges[:, j], j + 1] for j in range(k))
    ids = np.empty(len(edges), dtype=np.int32)
    index: dict = {}
    palette = []
    for row, edge in enumerate(edges.tolist()):
        c = coloring(*(verts[i] for i in edge))
        cid = index.get(c)
        if cid is None:
            cid = index[c] = len(palette)
            palette.append(c)
        ids[ranks[row]] = cid
    counts = np.bincount(ids, minlength=len(palette))
    return EdgeColors(verts, k, ids, palette, counts)


def census(coloring, vertices: Sequence) -> dict:
    """Exact color frequencies over every k-edge of ``vertices``."""
    return edge_colors(coloring, vertices).census()


# worker state; set directly for in-process runs, by the pool initializer otherwise
_STATE: dict = {}


def _init_worker(ids, binom, n, p, k, q, cap):
    _STATE.update(ids=ids, binom=binom, n=n, p=p, k=k, q=q, cap=cap)
    _STATE["sub"] = np.array(list(combinations(range(p), k)), dtype=np.int64)


def _scan_first(first: int):
    ids, binom = _STATE["ids"], _STATE["binom"]
    n, p, k, q, cap, sub = (_STATE[key] for key in ("n", "p", "k", "q", "cap", "sub"))
    rest = combinations(range(first + 1, n), p - 1)
    checked = 0
    min_seen = None
    bad = 0
    witnesses = []
    while True:
        block = list(islice(rest, CHUNK_ROWS))
        if not block:
            break
        cl = np.empty((len(block), p), dtype=np.int64)
        cl[:, 0] = first
        if p > 1:
            cl[:, 1:] = np.asarray(block, dtype=np.int64).reshape(len(block), p - 1)
        edges = cl[:, sub]  # (rows, C(p,k), k)
        ranks = binom[edges[:, :, 0], 1]
        for j in range(1, k):
            ranks = ranks + binom[edges[:, :, j], j + 1]
        cols = np.sort(ids[ranks], axis=1)
        distinct = 1 + np.count_nonzero(np.diff(cols, axis=1), axis=1)
        checked += len(block)
        low = int(distinct.min())
        min_seen = low if min_seen is None else min(min_seen, low)
        hits = np.flatnonzero(distinct < q)
        bad += len(hits)
        for h in hits[: max(0, cap - len(witnesses))]:
            witnesses.append((tuple(cl[h].tolist()), tuple(cols[h].tolist())))
    return checked, min_seen, bad, witnesses


def verify_pq(
    coloring,
    vertices: Sequence,
    p: int,
    q: int,
    *,
    workers: int = 1,
    violation_cap: int = DEFAULT_VIOLATION_CAP,
    parameters: dict | None = None,
    census_is_lower_bound: bool = True,
) -> VerifyReport:
    """Check that every p-subset of ``vertices`` sees at least q colors."""
    start = time.perf_counter()
    k = coloring.k
    if p < k:
        raise ValueError(f"p = {p} is smaller than the edge size k = {k}")
    verts = _check_vertices(vertices)
    n = len(verts)
    if n < p:
        raise TooFewVertices(f"need at least p = {p} vertices, got {n}")
    table = edge_colors(coloring, verts)
    binom = binom_table(n, k)
    state = (table.ids, binom, n, p, k, q, violation_cap)
    firsts = range(n - p + 1)
    if workers > 1:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker, initargs=state) as pool:
            parts = list(pool.map(_scan_first, firsts))
    else:
        _init_worker(*state)
        parts = [_scan_first(f) for f in firsts]
        _STATE.clear()

    checked = sum(part[0] for part in parts)
    min_seen = min(part[1] for part in parts)
    bad = sum(part[2] for part in parts)
    labels = table.labels
    violations = []
    for part in parts:
        for clique, cols in part[3]:
            if len(violations) >= violation_cap:
                break
            violations.append(([verts[i] for i in clique], sorted(labels[c] for c in cols)))
    return VerifyReport(
        k=k,
        p=p,
        q=q,
        parameters=dict(parameters or {}),
        cliques_checked=checked,
        min_colors_seen=min_seen,
        violation_count=bad,
        violations=violations,
        census=table.census(),
        census_is_lower_bound=census_is_lower_bound,
        elapsed=time.perf_counter() - start,
    )
