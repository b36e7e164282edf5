"""Command-line interface: ``ramseytower <subcommand> [options]``.

Exit codes: 0 success / no violation, 1 property violation found, 2 usage
error, 3 resource limit, 4 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from collections import Counter
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Optional

from .base import choose_params
from .chain import DEFAULT_DENSE_BUDGET, DEFAULT_MAX_LEVEL, LevelChain, size_to_str
from .encoding import decode_vertex, dumps, encode_vertex, report_records, write_lines
from .errors import RamseyTowerError, ResourceLimit
from .props import fuzz_properties
from .sampling import STRATEGIES, SampleSpec, sample_vertices
from .step import ALL_COORDS, color_space_bound, tower
from .verify import DEFAULT_VIOLATION_CAP, edge_colors, verify_pq

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4
ENV_DENSE_BUDGET = "RAMSEYTOWER_DENSE_BUDGET"
ENV_WORKERS = "RAMSEYTOWER_WORKERS"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    k: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    m: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    seed: int = 0
    strategy: Optional[str] = None
    max_ones: int = 8
    max_position: Optional[int] = None
    dense_budget: int = DEFAULT_DENSE_BUDGET
    workers: int = 1
    output: Optional[str] = None
    violation_cap: int = DEFAULT_VIOLATION_CAP
    level: Optional[int] = None
    trials: Optional[int] = None
    chi2_coords: Optional[tuple] = None

    def echo(self) -> dict:
        """Everything that determines the result; workers and output path do not."""
        d = asdict(self)
        d.pop("workers")
        d.pop("output")
        if d["max_position"] is not None:
            d["max_position"] = str(d["max_position"])
        return {key: val for key, val in d.items() if val is not None}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramseytower", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    chain_args = argparse.ArgumentParser(add_help=False)
    chain_args.add_argument("--m", type=_positive)
    chain_args.add_argument("--t", type=_positive)
    chain_args.add_argument("--dense-budget", type=_positive, default=None)
    chain_args.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    sample_args = argparse.ArgumentParser(add_help=False)
    sample_args.add_argument("--k", type=int, required=True, help="edge size (hypergraph level)")
    sample_args.add_argument("--strategy", choices=STRATEGIES, default="first-n")
    sample_args.add_argument("--n", type=_positive, required=True, help="number of vertices")
    sample_args.add_argument("--seed", type=int, default=0)
    sample_args.add_argument("--max-ones", type=_positive, default=8)
    sample_args.add_argument("--max-position", type=_positive, default=None)

    p = sub.add_parser("params", parents=[chain_args], help="print the N_2..N_k chain and color bounds")
    p.add_argument("--n", type=int, required=True, help="target number of level-2 vertices")
    p.add_argument("--k", type=int, default=2)

    p = sub.add_parser("verify", parents=[chain_args, sample_args], help="certify the (p,q) property on a vertex set")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--workers", type=_positive, default=None)
    p.add_argument("--violation-cap", type=int, default=DEFAULT_VIOLATION_CAP)

    p = sub.add_parser("census", parents=[chain_args], help="color frequencies over a vertex set or export file")
    p.add_argument("--input", "-i", default=None, help="count colors of an export file instead of sampling")
    p.add_argument("--k", type=int)
    p.add_argument("--strategy", choices=STRATEGIES, default="first-n")
    p.add_argument("--n", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-ones", type=_positive, default=8)
    p.add_argument("--max-position", type=_positive, default=None)
    p.add_argument("--chi2-coords", default=None,
                   help="experiment: keep only these chi_2 coordinates, e.g. 1,4")

    sub.add_parser("export", parents=[chain_args, sample_args], help="write every k-edge with its color")

    p = sub.add_parser("color", parents=[chain_args], help="color a single edge")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vertex", "-v", action="append", required=True,
                   help="a vertex: 'e1,e2,..' (k=2), a 0/1 string, or a JSON object")

    p = sub.add_parser("props", parents=[chain_args], help="fuzz the delta properties")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trials", type=_positive, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-ones", type=_positive, default=8)
    p.add_argument("--max-position", type=_positive, default=None)
    return parser


def _config(args) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{key: val for key, val in vars(args).items() if key in fields and val is not None})
    cfg.dense_budget = args.dense_budget or _env_int(ENV_DENSE_BUDGET, DEFAULT_DENSE_BUDGET)
    if getattr(args, "workers", None) is None:
        cfg.workers = _env_int(ENV_WORKERS, 1)
    if cfg.chi2_coords is not None:
        try:
            cfg.chi2_coords = tuple(sorted({int(c) for c in str(cfg.chi2_coords).split(",") if c}))
        except ValueError:
            raise UsageError(f"--chi2-coords takes a list like 1,4, got {cfg.chi2_coords!r}")
    return cfg


def _chain(cfg: RunConfig) -> LevelChain:
    if cfg.m is None or cfg.t is None:
        raise UsageError("--m and --t are required")
    if not 1 <= cfg.t < cfg.m:
        raise UsageError(f"need 1 <= t < m, got m={cfg.m}, t={cfg.t}")
    top = max(DEFAULT_MAX_LEVEL, cfg.k or 2, cfg.level or 2)
    return LevelChain(cfg.m, cfg.t, max_level=top, dense_budget=cfg.dense_budget)


def _check_k(cfg: RunConfig) -> None:
    if cfg.k is None or cfg.k < 2:
        raise UsageError("--k must be at least 2")


def _vertices(cfg: RunConfig, chain: LevelChain) -> list:
    spec = SampleSpec(cfg.strategy, cfg.n, cfg.seed, cfg.max_ones, cfg.max_position)
    return sample_vertices(chain, cfg.k, spec)


@contextlib.contextmanager
def _sink(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc
    try:
        yield fh
    finally:
        fh.close()


class _IOFailure(Exception):
    pass


def cmd_params(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.n < 2:
        raise UsageError("--n must be at least 2")
    _check_k(cfg)
    if cfg.m is None or cfg.t is None:
        cfg.m, cfg.t = choose_params(cfg.n)
    chain = _chain(cfg)
    records = [{"type": "header", "config": cfg.echo()}, {"type": "params", "m": chain.m, "t": chain.t}]
    for level in range(2, cfg.k + 1):
        records.append({
            "type": "level",
            "level": level,
            "size": size_to_str(chain.size(level)),
            "color_space_bound": str(color_space_bound(chain, level)),
        })
    with _sink(cfg.output) as fh:
        write_lines(fh, records)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    _check_k(cfg)
    if cfg.p is None or cfg.q is None or cfg.p < cfg.k or cfg.q < 1:
        raise UsageError("need --p >= --k and --q >= 1")
    chain = _chain(cfg)
    coloring = tower(chain, cfg.k)
    coloring.precompute()
    verts = _vertices(cfg, chain)
    full = cfg.n == chain.size(cfg.k)
    report = verify_pq(
        coloring, verts, cfg.p, cfg.q,
        workers=cfg.workers,
        violation_cap=cfg.violation_cap,
        parameters=cfg.echo(),
        census_is_lower_bound=not full,
    )
    status = EXIT_OK if report.passed else EXIT_VIOLATION
    with _sink(cfg.output) as fh:
        write_lines(fh, report_records(report, cfg.echo(), status, color_space_bound(chain, cfg.k)))
    print(
        f"verify k={cfg.k} p={cfg.p} q={cfg.q}: {report.cliques_checked} cliques, "
        f"min colors {report.min_colors_seen}, {report.violation_count} violations "
        f"({report.elapsed:.2f}s)",
        file=sys.stderr,
    )
    return status


def _export_records(cfg: RunConfig, chain: LevelChain) -> list:
    coloring = tower(chain, cfg.k)
    verts = _vertices(cfg, chain)
    out = [{"header": cfg.echo()}]
    encoded = [encode_vertex(v) for v in verts]
    for edge in combinations(range(len(verts)), cfg.k):
        color = coloring(*(verts[i] for i in edge))
        out.append({"edge": [encoded[i] for i in edge], "color": str(color)})
    return out


def cmd_export(cfg: RunConfig) -> int:
    _check_k(cfg)
    chain = _chain(cfg)
    records = _export_records(cfg, chain)
    with _sink(cfg.output) as fh:
        write_lines(fh, records)
    return EXIT_OK


def read_export_census(path: str) -> dict:
    counts: Counter = Counter()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            rec = json.loads(line)
            if "color" in rec:
                counts[rec["color"]] += 1
    return dict(sorted(counts.items()))


def cmd_census(cfg: RunConfig, source: Optional[str]) -> int:
    bound = None
    if source is not None:
        try:
            counts = read_export_census(source)
        except OSError as exc:
            raise _IOFailure(str(exc)) from exc
        lower = True
    else:
        _check_k(cfg)
        if cfg.n is None:
            raise UsageError("--n is required without --input")
        chain = _chain(cfg)
        coloring = tower(chain, cfg.k, cfg.chi2_coords or ALL_COORDS)
        counts = edge_colors(coloring, _vertices(cfg, chain)).census()
        lower = cfg.n != chain.size(cfg.k)
        bound = color_space_bound(chain, cfg.k)
    summary = {"type": "census_summary", "colors": len(counts), "edges": sum(counts.values()),
               "census_is_lower_bound": lower}
    if bound is not None:
        summary["color_space_bound"] = str(bound)
    records = [{"type": "header", "config": cfg.echo()}, summary]
    records += [{"type": "census", "color": c, "count": n} for c, n in counts.items()]
    with _sink(cfg.output) as fh:
        write_lines(fh, records)
    return EXIT_OK


def cmd_color(cfg: RunConfig, raw_vertices: list) -> int:
    _check_k(cfg)
    chain = _chain(cfg)
    if len(raw_vertices) != cfg.k:
        raise UsageError(f"a {cfg.k}-edge needs {cfg.k} --vertex values, got {len(raw_vertices)}")
    try:
        verts = [decode_vertex(v, chain, cfg.k) for v in raw_vertices]
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad vertex: {exc}") from exc
    color = tower(chain, cfg.k)(*verts)
    with _sink(cfg.output) as fh:
        fh.write(str(color) + "\n")
    return EXIT_OK


def cmd_props(cfg: RunConfig) -> int:
    chain = _chain(cfg)
    if cfg.level is None or cfg.level < 3:
        raise UsageError("--level must be at least 3")
    results = fuzz_properties(chain, cfg.level, cfg.trials, cfg.seed,
                              max_ones=cfg.max_ones, max_position=cfg.max_position)
    records = [{"type": "header", "config": cfg.echo()}]
    for res in results.values():
        rec = {"type": "property", "name": res.name, "trials": res.trials, "failures": res.failures}
        if res.counterexample is not None:
            rec["counterexample"] = [encode_vertex(v) for v in res.counterexample]
        records.append(rec)
    status = EXIT_OK if all(r.passed for r in results.values()) else EXIT_VIOLATION
    records.append({"type": "footer", "exit_status": status})
    with _sink(cfg.output) as fh:
        write_lines(fh, records)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.subcommand == "params":
            return cmd_params(cfg)
        if args.subcommand == "verify":
            return cmd_verify(cfg)
        if args.subcommand == "export":
            return cmd_export(cfg)
        if args.subcommand == "census":
            return cmd_census(cfg, args.input)
        if args.subcommand == "color":
            return cmd_color(cfg, args.vertex)
        return cmd_props(cfg)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (_IOFailure, OSError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, RamseyTowerError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
