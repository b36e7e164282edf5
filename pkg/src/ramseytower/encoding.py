"""Text encodings for vertices, records and reports (JSON lines).

Level-2 vertices are written as "e1,e2,...". Bit vertices are objects with
``level``, ``length`` and ``ones``; numbers that can outgrow 64 bits are
decimal strings.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .chain import LevelChain, parse_size, size_to_str
from .vertex import BaseVertex, BitVertex


def encode_vertex(v):
    if isinstance(v, BaseVertex):
        return ",".join(map(str, v.elements))
    return {"level": v.level, "length": size_to_str(v.length), "ones": [str(p) for p in v.ones]}


def decode_vertex(obj, chain: LevelChain, level: int | None = None):
    """Inverse of :func:`encode_vertex`; also takes a bare 0/1 string when ``level`` is given."""
    if isinstance(obj, str):
        text = obj.strip()
        if text.startswith("{"):
            return decode_vertex(json.loads(text), chain, level)
        if level is not None and level >= 3:
            return BitVertex.dense(level, chain.vertex_length(level), text)
        return BaseVertex(chain.m, tuple(int(x) for x in text.split(",") if x))
    lv = int(obj["level"])
    length = parse_size(obj["length"])
    if length != chain.vertex_length(lv):
        raise ValueError(f"length {length} does not match N_{lv - 1} = {chain.vertex_length(lv)}")
    v = BitVertex.sparse(lv, chain.vertex_length(lv), (int(p) for p in obj["ones"]))
    return v.to_dense() if chain.dense_ok(lv) else v


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_lines(fh: IO[str], records: Iterable[dict]) -> None:
    for rec in records:
        fh.write(dumps(rec))
        fh.write("\n")


def report_records(report, config: dict, exit_status: int, bound: int | None = None) -> list:
    summary = {
        "type": "summary",
        "k": report.k,
        "p": report.p,
        "q": report.q,
        "cliques_checked": report.cliques_checked,
        "min_colors_seen": report.min_colors_seen,
        "violation_count": report.violation_count,
        "violations_reported": len(report.violations),
        "census_colors": len(report.census),
        "census_edges": sum(report.census.values()),
        "census_is_lower_bound": report.census_is_lower_bound,
        "passed": report.passed,
    }
    if bound is not None:
        summary["color_space_bound"] = str(bound)
    out = [{"type": "header", "config": config}, summary]
    for clique, colors in report.violations:
        out.append({"type": "violation", "clique": [encode_vertex(v) for v in clique], "colors": colors})
    for color, count in report.census.items():
        out.append({"type": "census", "color": color, "count": count})
    out.append({"type": "footer", "exit_status": exit_status})
    return out
