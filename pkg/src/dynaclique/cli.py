"""Command-line front end: ingestion, updates, verification, benchmarking.

Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from ._kernels import BACKEND
from .batch import IndependenceMode
from .dynamic import insert_edge_update
from .filtration import (
    EdgeStream,
    build_edge_stream,
    load_edge_stream,
    load_point_cloud,
    run_filtration,
)
from .graph import load_edge_list
from .index import (
    KCliqueIndex,
    MaximalCliqueIndex,
    format_enumeration,
    parse_enumeration,
)
from .kclique import k_insert_edge_update
from .oracle import enumerate_maximal_cliques, enumerate_maximal_k_cliques
from .reports import Method, report_row, write_reports_csv


def _positive_k(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("k must be >= 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynaclique",
        description="Maintain the exact maximal clique enumeration of a growing graph.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bootstrap", help="enumerate the maximal cliques of an edge list")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--k", type=_positive_k, help="size bound for the k-clique enumeration")
    p.add_argument("--enum-out", help="write the enumeration here instead of stdout")
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser("insert", help="apply one edge insertion to an enumeration")
    p.add_argument("graph", help="edge-list file with the pre-insertion graph")
    p.add_argument("enum", help="enumeration file matching the graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.PROPOSED.value)
    p.add_argument("--k", type=_positive_k)
    p.add_argument("--enum-out", help="write the updated enumeration here instead of stdout")
    p.add_argument("--stats-out", help="write the report row as CSV")
    p.add_argument("--no-timings", action="store_true", help="zero the elapsed column")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("stream", help="replay a point cloud or ordered edge list")
    p.add_argument("input")
    p.add_argument("--format", choices=["points", "edges"], default="points")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.PROPOSED.value)
    p.add_argument("--k", type=_positive_k)
    p.add_argument(
        "--parallel",
        choices=["off", "conservative", "aggressive"],
        default="off",
        help="schedule equal-weight runs as independent rounds",
    )
    p.add_argument("--stats-out", help="write the per-step CSV here")
    p.add_argument("--enum-out", help="write the final enumeration here instead of stdout")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("bench", help="run both methods over one stream and compare")
    p.add_argument("input", nargs="?", help="point cloud or edge stream file")
    p.add_argument("--format", choices=["points", "edges"], default="points")
    p.add_argument("--random-cloud", type=int, metavar="N", help="generate N random plane points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stats-out", help="write the comparative CSV here instead of stdout")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="diff an enumeration against the from-scratch oracle")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("enum", help="enumeration file to check")
    p.add_argument("--k", type=_positive_k)
    p.set_defaults(func=cmd_verify)
    return parser


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_bootstrap(args) -> int:
    g = load_edge_list(args.graph)
    if args.k is None:
        cliques = enumerate_maximal_cliques(g)
    else:
        cliques = enumerate_maximal_k_cliques(g, args.k)
    _write_text(args.enum_out, format_enumeration(cliques))
    return 0


def cmd_insert(args) -> int:
    if args.k is not None and args.method != Method.PROPOSED.value:
        raise ValueError("the k-bounded engine only runs the one-sided method")
    g = load_edge_list(args.graph)
    cliques = parse_enumeration(_read_text(args.enum))
    if args.k is None:
        ix = MaximalCliqueIndex.from_cliques(cliques)
        report = insert_edge_update(g, ix, (args.u, args.v), method=Method(args.method))
    else:
        kix = KCliqueIndex.from_cliques(cliques, args.k)
        report = k_insert_edge_update(g, kix, (args.u, args.v))
        ix = kix
    _write_text(args.enum_out, ix.enumeration_text())
    if args.stats_out:
        write_reports_csv(
            args.stats_out, [report], include_k=args.k is not None,
            timings=not args.no_timings,
        )
    return 0


def _load_stream(path: str, fmt: str) -> EdgeStream:
    if fmt == "points":
        return build_edge_stream(load_point_cloud(path))
    return load_edge_stream(path)


def cmd_stream(args) -> int:
    if args.k is not None and args.method != Method.PROPOSED.value:
        raise ValueError("the k-bounded engine only runs the one-sided method")
    if args.k is not None and args.parallel != "off":
        raise ValueError("--parallel cannot be combined with --k")
    stream = _load_stream(args.input, args.format)
    parallel = None if args.parallel == "off" else IndependenceMode(args.parallel)
    run = run_filtration(stream, method=Method(args.method), k=args.k, parallel=parallel)
    if args.stats_out:
        write_reports_csv(
            args.stats_out,
            run.reports,
            include_k=args.k is not None,
            include_weight=True,
            include_round=parallel is not None,
            timings=not args.no_timings,
        )
    _write_text(args.enum_out, run.index.enumeration_text())
    return 0


BENCH_COLUMNS = (
    "step",
    "u",
    "v",
    "weight",
    "proposed_candidates_generated",
    "proposed_candidates_after_dedup",
    "proposed_elapsed_ns",
    "existing_candidates_generated",
    "existing_candidates_after_dedup",
    "existing_elapsed_ns",
    "num_added",
    "num_removed",
    "total_cliques",
)


def cmd_bench(args) -> int:
    if args.random_cloud is not None:
        if args.input is not None:
            raise ValueError("give either an input file or --random-cloud, not both")
        if args.random_cloud < 2:
            raise ValueError("--random-cloud needs at least 2 points")
        rng = random.Random(args.seed)
        points = [(rng.random(), rng.random()) for _ in range(args.random_cloud)]
        stream = build_edge_stream(points)
    elif args.input is not None:
        stream = _load_stream(args.input, args.format)
    else:
        raise ValueError("bench needs an input file or --random-cloud")

    proposed = run_filtration(stream, method=Method.PROPOSED)
    existing = run_filtration(stream, method=Method.EXISTING)
    import csv as _csv
    import io

    buf = io.StringIO()
    writer = _csv.writer(buf)
    writer.writerow(BENCH_COLUMNS)
    for step, (rp, re_) in enumerate(zip(proposed.reports, existing.reports), start=1):
        u, v = rp.edge
        writer.writerow(
            [
                step,
                u,
                v,
                "" if rp.weight is None else repr(rp.weight),
                rp.candidates_generated,
                rp.candidates_after_dedup,
                rp.elapsed_ns if not args.no_timings else 0,
                re_.candidates_generated,
                re_.candidates_after_dedup,
                re_.elapsed_ns if not args.no_timings else 0,
                rp.num_added,
                rp.num_removed,
                rp.total_cliques,
            ]
        )
    _write_text(args.stats_out, buf.getvalue())
    total_p = sum(r.candidates_generated for r in proposed.reports)
    total_e = sum(r.candidates_generated for r in existing.reports)
    print(
        f"# {len(stream)} insertions, {BACKEND} kernels: "
        f"proposed generated {total_p} candidates, existing {total_e}",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args) -> int:
    g = load_edge_list(args.graph)
    claimed = format_enumeration(parse_enumeration(_read_text(args.enum)))
    if args.k is None:
        expected = format_enumeration(enumerate_maximal_cliques(g))
    else:
        expected = format_enumeration(enumerate_maximal_k_cliques(g, args.k))
    if claimed == expected:
        print("OK")
        return 0
    claimed_set = set(claimed.splitlines())
    expected_set = set(expected.splitlines())
    for line in sorted(expected_set - claimed_set):
        print(f"missing: {line}")
    for line in sorted(claimed_set - expected_set):
        print(f"unexpected: {line}")
    return 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
