"""Command-line pipeline driver.

Subcommands:
  layout    ingest a graph, run the three stages, emit SVG and/or layout JSON
  bench     run the synthetic gap-count experiment and write a CSV
  validate  check an emitted layout JSON document

Exit codes: 0 ok, 2 usage errors, 3 unreadable/invalid input, 4 validation
failures.  Diagnostics go to stderr; when no output path is given the
layout JSON goes to stdout so it can be piped into the viewer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .axisorder import AnnealSchedule, BRUTE_FORCE_MAX_K, inter_group_weights, optimize_order
from .graph import GraphInputError, load_edgelist, load_graph_json
from .layout import class_counts, layout_from_groups, validate_layout
from .minimize import minimize_crossings
from .partition import partition_auto, partition_with_k
from .render import RenderStyle, compute_geometry, export_layout_json, render_svg
from .schema import validate_layout_doc

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_VALIDATION = 4

CONFIG_ENV_VAR = "HIVEPLOT_CONFIG"


def _load_config_defaults(path: str | None) -> dict:
    config_path = path or os.environ.get(CONFIG_ENV_VAR)
    if not config_path:
        return {}
    try:
        with open(config_path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphInputError(f"cannot read config {config_path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise GraphInputError(f"config {config_path} must hold a JSON object")
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiveplot",
        description="Hive-plot layout engine: partition, order axes, minimize crossings.",
    )
    parser.add_argument(
        "--config", help=f"JSON config file with flag defaults (or ${CONFIG_ENV_VAR})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lay = sub.add_parser("layout", help="compute a hive plot for one graph")
    lay.add_argument("-i", "--input", required=True, help="input graph file")
    lay.add_argument(
        "--format",
        choices=["edgelist", "json"],
        help="input format (default: by file extension)",
    )
    lay.add_argument("-k", type=int, help="axis count (default: detect communities)")
    lay.add_argument("-g", type=int, default=1, help="gaps per axis (default 1)")
    lay.add_argument("--seed", type=int, default=0, help="seed for all randomized stages")
    lay.add_argument("--max-iter", type=int, default=20, help="phase-1 sweep cycles")
    lay.add_argument("--max-iter-intra", type=int, default=10, help="phase-2 iterations per axis")
    lay.add_argument(
        "--brute-force-max-k",
        type=int,
        default=BRUTE_FORCE_MAX_K,
        help="largest k ordered exactly; annealing beyond",
    )
    lay.add_argument("--anneal-t-start", type=float, help="annealing start temperature")
    lay.add_argument("--anneal-t-min", type=float, default=1e-3)
    lay.add_argument("--anneal-cooling", type=float, default=0.995)
    lay.add_argument("--anneal-restarts", type=int, default=3)
    lay.add_argument("--anneal-moves", type=int, help="proposals per temperature (default k)")
    lay.add_argument("-o", "--svg", help="write SVG rendering here")
    lay.add_argument("--json", dest="json_out", help="write layout JSON here")
    lay.add_argument(
        "--expand",
        action="append",
        default=[],
        metavar="AXIS",
        help="axis id to render expanded, or 'all' (repeatable)",
    )
    lay.add_argument("--scale-degree", action="store_true", help="scale vertices by degree")
    lay.add_argument("--labels", choices=["on", "off"], default="on")
    lay.add_argument("--canvas", type=int, default=900, help="SVG canvas size in px")

    ben = sub.add_parser("bench", help="run the synthetic gap experiment")
    ben.add_argument("--n-min", type=int, default=60)
    ben.add_argument("--n-max", type=int, default=510)
    ben.add_argument("--n-step", type=int, default=30)
    ben.add_argument("--graphs-per-step", type=int, default=5)
    ben.add_argument("--partitions", type=int, default=6)
    ben.add_argument("--gaps", default="1,2,3", help="comma-separated gap counts")
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--max-iter", type=int, default=20)
    ben.add_argument("--csv", required=True, help="output CSV path")

    val = sub.add_parser("validate", help="validate an emitted layout JSON document")
    val.add_argument("-i", "--input", required=True, help="layout JSON file")

    return parser


def _apply_config_defaults(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    # Parse once to find --config, load it, then re-parse with new defaults.
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    defaults = _load_config_defaults(known.config)
    if defaults:
        for action in parser._subparsers._group_actions:  # type: ignore[union-attr]
            for sub in action.choices.values():
                usable = {
                    key: value for key, value in defaults.items()
                    if any(key == a.dest for a in sub._actions)
                }
                sub.set_defaults(**usable)
    return parser.parse_args(argv)


def parse_args(argv: list[str]) -> argparse.Namespace:
    return _apply_config_defaults(build_parser(), argv)


def _read_graph(args):
    path = Path(args.input)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from exc
    fmt = args.format
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "edgelist"
    if fmt == "json":
        return load_graph_json(text)
    return load_edgelist(text)


def _expanded_axes(tokens: list[str], k: int) -> frozenset[int]:
    if any(t == "all" for t in tokens):
        return frozenset(range(k))
    axes = frozenset(int(t) for t in tokens)
    bad = [a for a in axes if not 0 <= a < k]
    if bad:
        raise GraphInputError(f"--expand axis {bad[0]} out of range 0..{k - 1}")
    return axes


def run_layout(args) -> int:
    if args.g < 1:
        print("error: -g must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.k is not None and args.k < 2:
        print("error: -k must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        graph, groups = _read_graph(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    start = time.perf_counter()
    try:
        if groups is not None:
            membership = groups  # partition supplied with the input
        elif args.k is not None:
            membership = list(partition_with_k(graph, args.k).membership)
        else:
            membership = list(partition_auto(graph, seed=args.seed).membership)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    from .partition import partition_from_membership

    partition = partition_from_membership(membership)
    weights = inter_group_weights(graph, partition)
    schedule = AnnealSchedule(
        t_start=args.anneal_t_start,
        t_min=args.anneal_t_min,
        cooling=args.anneal_cooling,
        moves_per_temp=args.anneal_moves,
        restarts=args.anneal_restarts,
    )
    order = optimize_order(
        weights, seed=args.seed, brute_force_max_k=args.brute_force_max_k, schedule=schedule
    )
    layout = layout_from_groups(list(partition.membership), axis_order=order, gaps=args.g)
    counts = class_counts(layout, graph)
    result = minimize_crossings(
        layout, graph, max_iter=args.max_iter, max_iter_intra=args.max_iter_intra, seed=args.seed
    )
    problems = validate_layout(result.layout)
    if problems:
        for p in problems:
            print(f"error: layout invariant: {p}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        expanded = _expanded_axes(args.expand, layout.k)
    except (GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    style = RenderStyle(
        canvas_size=args.canvas,
        expanded_axes=expanded,
        scale_degree=args.scale_degree,
        show_labels=args.labels == "on",
    )
    geometry = compute_geometry(result.layout, style, labels=graph.labels)
    doc_text = export_layout_json(result.layout, geometry, seed=args.seed, report=result.report)
    elapsed = time.perf_counter() - start

    if args.svg:
        Path(args.svg).write_text(render_svg(geometry, style))
    if args.json_out:
        Path(args.json_out).write_text(doc_text)
    if not args.svg and not args.json_out:
        sys.stdout.write(doc_text)

    print(
        f"{graph.n} vertices, {graph.m} edges "
        f"({counts['intra']} intra / {counts['proper']} proper / {counts['long']} long), "
        f"k={layout.k}, g={args.g}, "
        f"crossings inter={result.report.inter_axis} intra={result.report.intra_axis}, "
        f"{elapsed:.3f}s",
        file=sys.stderr,
    )
    return EXIT_OK


def run_bench(args) -> int:
    from .bench import SynthConfig, run_gap_experiment

    try:
        gap_counts = tuple(int(t) for t in str(args.gaps).split(",") if t)
    except ValueError:
        print(f"error: bad --gaps value {args.gaps!r}", file=sys.stderr)
        return EXIT_USAGE
    cfg = SynthConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        n_step=args.n_step,
        partitions=args.partitions,
        graphs_per_step=args.graphs_per_step,
        gap_counts=gap_counts,
        seed=args.seed,
        max_iter=args.max_iter,
    )
    records = run_gap_experiment(cfg, csv_path=args.csv)
    print(f"wrote {len(records)} records to {args.csv}", file=sys.stderr)
    return EXIT_OK


def run_validate(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    problems = validate_layout_doc(doc)
    if problems:
        for p in problems:
            print(f"invalid: {p}", file=sys.stderr)
        return EXIT_VALIDATION
    print("ok")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = parse_args(sys.argv[1:] if argv is None else argv)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "layout":
        return run_layout(args)
    if args.command == "bench":
        return run_bench(args)
    return run_validate(args)


if __name__ == "__main__":
    sys.exit(main())
