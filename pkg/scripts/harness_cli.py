#!/usr/bin/env python3
"""
Topological index toolkit - command line front end.

Subcommands:
  index    compute M1, M2, F, HM1, RM2 of a graph
  product  build a graph product and write it as an edge list
  verify   check every closed form against the explicitly built products
  table    tabulate a worked P_l / C_m expression next to the direct value

Graph sources are edge-list files or generator specs such as path:5,
cycle:6, complete:4 (k:4), star:3, empty:2 or random:8:0.4:17.

Exit codes: 0 all values matched, 1 at least one mismatch, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

from closed_forms import EXAMPLE_INDICES, EXAMPLE_PRODUCTS
from graph_core import Graph, GraphError, is_generator_spec, load_edge_list, parse_generator_spec, write_edge_list
from indices import IndexKind, compute_indices
from products import ProductKind, build_product
from verification import (
    DEFAULT_FUZZ,
    DEFAULT_MAX_ORDER,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    run_verification,
    table_cells,
    table_to_csv,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_FORMAT = "csv"


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line, independent of argparse"""

    command: str
    graph: str | None = None
    g1: str | None = None
    g2: str | None = None
    kinds: tuple[str, ...] = ()
    product: str | None = None
    seed: int = DEFAULT_SEED
    fuzz: int = DEFAULT_FUZZ
    max_order: int = DEFAULT_MAX_ORDER
    workers: int = DEFAULT_WORKERS
    include_catalog: bool = True
    output_format: str = DEFAULT_FORMAT
    out: str | None = None
    l_range: str | None = None
    m_range: str | None = None


def setup_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Set up command line arguments"""
    parser = argparse.ArgumentParser(description="Topological indices of corona-variant graph products")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors")

    subparsers = parser.add_subparsers(dest="command", required=True, help="Command to execute")

    index_parser = subparsers.add_parser("index", help="Compute topological indices of a graph")
    index_parser.add_argument("--graph", required=True, help="Edge-list file or generator spec")
    index_parser.add_argument(
        "--kind", action="append", default=[],
        help="Index to compute (M1, M2, F, HM1, RM2); repeatable, default all",
    )

    product_parser = subparsers.add_parser("product", help="Build a graph product")
    product_parser.add_argument("kind", help="join, corona, subdivision, corona-join or sdvj")
    product_parser.add_argument("--g1", required=True, help="First factor")
    product_parser.add_argument("--g2", help="Second factor (not used by subdivision)")
    product_parser.add_argument("--out", help="Output edge-list path, default stdout")

    verify_parser = subparsers.add_parser("verify", help="Run the differential verification suite")
    verify_parser.add_argument(
        "--catalog", action=argparse.BooleanOptionalAction, default=True,
        help="Include the path/cycle/complete/star catalog pairs",
    )
    verify_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Fuzz seed (default {DEFAULT_SEED})")
    verify_parser.add_argument("--fuzz", type=int, default=DEFAULT_FUZZ, help=f"Random factor pairs (default {DEFAULT_FUZZ})")
    verify_parser.add_argument(
        "--max-order", type=int, default=DEFAULT_MAX_ORDER,
        help=f"Largest fuzzed factor order (default {DEFAULT_MAX_ORDER})",
    )
    verify_parser.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Worker threads")
    verify_parser.add_argument("--format", choices=("csv", "json"), default=DEFAULT_FORMAT, help="Report format")
    verify_parser.add_argument("--out", help="Report path, default stdout")

    table_parser = subparsers.add_parser("table", help="Tabulate a worked P_l / C_m example")
    table_parser.add_argument("--kind", required=True, help="F, HM1 or RM2")
    table_parser.add_argument("--product", required=True, help="corona-join or sdvj")
    table_parser.add_argument("--l", dest="l_range", default="3..8", help="Path lengths, e.g. 3..5 or 4")
    table_parser.add_argument("--m", dest="m_range", default="3..8", help="Cycle lengths, e.g. 3..5 or 4")
    table_parser.add_argument("--out", help="CSV path, default stdout")

    return parser.parse_args(argv)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if command == "index":
        return RunConfig(command, graph=args.graph, kinds=tuple(args.kind))
    if command == "product":
        return RunConfig(command, product=args.kind, g1=args.g1, g2=args.g2, out=args.out)
    if command == "verify":
        if args.fuzz < 0:
            raise GraphError(f"--fuzz must be nonnegative, got {args.fuzz}")
        return RunConfig(
            command, seed=args.seed, fuzz=args.fuzz, max_order=args.max_order, workers=args.workers,
            include_catalog=args.catalog, output_format=args.format, out=args.out,
        )
    return RunConfig(
        command, kinds=(args.kind,), product=args.product,
        l_range=args.l_range, m_range=args.m_range, out=args.out,
    )


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)


def load_graph(source: str) -> Graph:
    """Generator spec or edge-list file"""
    if is_generator_spec(source):
        return parse_generator_spec(source)
    return load_edge_list(source)


def parse_range(text: str) -> range:
    """'3..5' -> 3, 4, 5; '4' -> 4"""
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError:
        raise GraphError(f"bad range {text!r}, expected 'a..b' or 'a'") from None
    if stop < start:
        raise GraphError(f"empty range {text!r}")
    return range(start, stop + 1)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)
    logger.info("✓ Wrote %s", out)


def cmd_index(config: RunConfig) -> int:
    """Print the requested indices of one graph as exact integers"""
    try:
        graph = load_graph(config.graph)
        kinds = [IndexKind.parse(kind) for kind in config.kinds] or list(IndexKind)
    except (GraphError, OSError) as e:
        print(f"Error reading graph: {e}", file=sys.stderr)
        return EXIT_USAGE

    values = compute_indices(graph, kinds)
    if len(kinds) == 1:
        print(values[kinds[0]])
    else:
        for kind in kinds:
            print(f"{kind.value} {values[kind]}")
    return EXIT_OK


def cmd_product(config: RunConfig) -> int:
    """Build a product and write it in the edge-list format"""
    try:
        kind = ProductKind.parse(config.product)
        g1 = load_graph(config.g1)
        g2 = None if config.g2 is None else load_graph(config.g2)
        product = build_product(kind, g1, g2)
        _emit(write_edge_list(product.graph), config.out)
    except (GraphError, OSError) as e:
        print(f"Error building product: {e}", file=sys.stderr)
        return EXIT_USAGE

    if config.out is not None:
        print(f"order {product.graph.order} size {product.graph.size}")
    else:
        logger.info("order %d size %d", product.graph.order, product.graph.size)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Differential suite; exit 0 only if every record and every degree lemma holds"""
    try:
        report = run_verification(
            include_catalog=config.include_catalog,
            seed=config.seed,
            fuzz=config.fuzz,
            max_order=config.max_order,
            workers=config.workers,
        )
        _emit(report.render(config.output_format), config.out)
    except (ValueError, OSError) as e:
        print(f"Error running verification: {e}", file=sys.stderr)
        return EXIT_USAGE

    if report.passed:
        return EXIT_OK
    first = report.first_mismatch()
    if first is not None:
        print(
            f"✗ First mismatch: {first.index} of {first.product} {first.g1} x {first.g2}: "
            f"direct {first.direct}, closed form {first.closed_form}",
            file=sys.stderr,
        )
    for failure in report.lemma_failures[:10]:
        print(
            f"✗ Degree lemma: {failure.product} {failure.g1} x {failure.g2} vertex {failure.vertex}: "
            f"actual {failure.actual}, predicted {failure.predicted}",
            file=sys.stderr,
        )
    return EXIT_MISMATCH


def cmd_table(config: RunConfig) -> int:
    """Worked-example grid, each cell checked against the built product"""
    try:
        index = IndexKind.parse(config.kinds[0])
        product = ProductKind.parse(config.product)
        if index not in EXAMPLE_INDICES or product not in EXAMPLE_PRODUCTS:
            raise GraphError(f"no worked example for {index.value} of {product.value}")
        cells = table_cells(index, product, parse_range(config.l_range), parse_range(config.m_range))
        _emit(table_to_csv(cells), config.out)
    except (GraphError, OSError) as e:
        print(f"Error building table: {e}", file=sys.stderr)
        return EXIT_USAGE

    flagged = [cell for cell in cells if cell.flagged]
    if flagged:
        print(f"✗ {len(flagged)} of {len(cells)} cells differ", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


COMMANDS = {
    "index": cmd_index,
    "product": cmd_product,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    args = setup_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        config = build_run_config(args)
    except GraphError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return COMMANDS[config.command](config)


if __name__ == "__main__":
    sys.exit(main())
