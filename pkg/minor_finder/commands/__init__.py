import logging
import sys
from fractions import Fraction
from typing import NoReturn, TextIO

import click

from minor_finder import __version__
from minor_finder.minor_finder.algorithm.config import Config, GFunction
from minor_finder.minor_finder.algorithm.driver import MinorFinder
from minor_finder.minor_finder.certificate.certificate import verify_model
from minor_finder.minor_finder.cli_io.formats import (
    parse_edge_list,
    parse_g_table,
    parse_model,
    serialize_edge_list,
    serialize_model,
)
from minor_finder.minor_finder.cli_io.generators import gen_planted, gen_random
from minor_finder.minor_finder.constants import EXIT_NOT_FOUND
from minor_finder.minor_finder.exceptions import MinorFinderError, ParseError
from minor_finder.minor_finder.graph.graph import Graph
from minor_finder.minor_finder.graph.trace import TraceFileWriter, Tracer
from minor_finder.minor_finder.handlers import handle_minor_error
from minor_finder.minor_finder.logger import (
    add_file_handler,
    minor_logger,
    set_log_level,
)
from minor_finder.minor_finder.oracle.minor_oracle import exhaustive_minor
from minor_finder.minor_finder.report.bench_report.bench_report import bench_run
from minor_finder.minor_finder.utils import parse_rational

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class ClickEchoHandler(logging.Handler):
    """Writes log records to whatever stderr click currently sees."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ParseError as error:
            self.fail(str(error), param, ctx)


RATIONAL = RationalType()


def parse_sizes(ctx: click.Context, param: click.Parameter, value: str) -> list[int]:
    try:
        sizes = [int(size) for size in value.split(",") if size.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if any(size <= 0 for size in sizes):
        raise click.BadParameter("sizes must be positive")

    return sizes


def exit_with(error: MinorFinderError, command: str) -> NoReturn:
    click.echo(f"{type(error).__name__}: {error}", err=True)
    sys.exit(handle_minor_error(error, command))


def read_graph(stream: TextIO) -> Graph:
    return parse_edge_list(stream.read())


@click.command("find")
@click.option("--t", "t", type=int, required=True, help="Order of the clique minor.")
@click.option(
    "--epsilon", type=RATIONAL, required=True, help="Density slack, p or p/q."
)
@click.option("--g-table", type=click.File("r"), help="Per-t overrides of g(t).")
@click.option("--strict", is_flag=True, help="Require g(t) >= max(t, 2t/epsilon).")
@click.option(
    "--trace", "trace_file", type=click.File("w"), help="Write mutation events here."
)
@click.option("--ops", is_flag=True, help="Print the operation count to stderr.")
@click.argument("graph_file", type=click.File("r"))
def find(
    t: int,
    epsilon: Fraction,
    g_table: TextIO | None,
    strict: bool,
    trace_file: TextIO | None,
    ops: bool,
    graph_file: TextIO,
) -> None:
    """Find a K_t minor in a dense graph and print its branch sets."""
    try:
        graph = read_graph(graph_file)
        g = GFunction(parse_g_table(g_table.read()) if g_table else None)
        tracer = None
        if trace_file is not None:
            tracer = Tracer()
            tracer.attach(TraceFileWriter(trace_file))

        cfg = Config(t=t, epsilon=epsilon, g=g, strict=strict, trace=tracer)
        finder = MinorFinder(graph, cfg)
        model = finder.run()
    except MinorFinderError as error:
        exit_with(error, "find")

    click.echo(serialize_model(model), nl=False)
    if ops:
        click.echo(
            f"ops={finder.ops} rounds={finder.rounds} step={finder.found_at}", err=True
        )


@click.command("verify")
@click.option("--t", "t", type=int, required=True)
@click.argument("graph_file", type=click.File("r"))
@click.argument("model_file", type=click.File("r"))
def verify(t: int, graph_file: TextIO, model_file: TextIO) -> None:
    """Check a minor model file against a graph."""
    try:
        graph = read_graph(graph_file)
        verdict = verify_model(graph, parse_model(model_file.read()), t)
    except MinorFinderError as error:
        exit_with(error, "verify")

    if verdict.valid:
        click.echo("valid")
        return

    for violation in verdict.violations:
        click.echo(violation)
    sys.exit(EXIT_NOT_FOUND)


@click.command("oracle")
@click.option("--t", "t", type=int, required=True)
@click.argument("graph_file", type=click.File("r"))
def oracle(t: int, graph_file: TextIO) -> None:
    """Exhaustive K_t minor search, for small graphs."""
    try:
        model = exhaustive_minor(read_graph(graph_file), t)
    except MinorFinderError as error:
        exit_with(error, "oracle")

    if model is None:
        click.echo(f"no K_{t} minor")
        sys.exit(EXIT_NOT_FOUND)
    click.echo(serialize_model(model), nl=False)


@click.group("gen")
def gen() -> None:
    """Generate seeded graphs as edge lists."""


@gen.command("random")
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
def gen_random_command(n: int, m: int, seed: int) -> None:
    """Uniform graph with exactly m edges."""
    try:
        graph = gen_random(n, m, seed)
    except MinorFinderError as error:
        exit_with(error, "gen random")

    click.echo(serialize_edge_list(graph), nl=False)


@gen.command("planted")
@click.option("--n", "n", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--noise", type=int, default=0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--model-out", type=click.File("w"), help="Write the planted model here.")
def gen_planted_command(
    n: int, t: int, noise: int, seed: int, model_out: TextIO | None
) -> None:
    """Graph with a planted K_t minor."""
    try:
        graph, model = gen_planted(n, t, noise, seed)
    except MinorFinderError as error:
        exit_with(error, "gen planted")

    click.echo(serialize_edge_list(graph), nl=False)
    if model_out is not None:
        model_out.write(serialize_model(model))


@click.command("bench")
@click.option("--t", "t", type=int, required=True)
@click.option("--epsilon", type=RATIONAL, required=True)
@click.option("--sizes", required=True, callback=parse_sizes, help="e.g. 10000,20000")
@click.option("--seed", type=int, default=0, show_default=True)
def bench(t: int, epsilon: Fraction, sizes: list[int], seed: int) -> None:
    """Run the finder on seeded random graphs of growing size."""
    try:
        report = bench_run(sizes, t, epsilon, seed)
    except MinorFinderError as error:
        exit_with(error, "bench")

    click.echo(report.to_table(), nl=False)
    click.echo(report.to_lines(), nl=False)


commands = [find, verify, oracle, gen, bench]


@click.group("minor-finder")
@click.version_option(__version__, prog_name="minor-finder")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.option("--log-file", type=click.Path(dir_okay=False), help="Rotating log file.")
def cli(log_level: str, log_file: str | None) -> None:
    """Linear-time K_t minor finder."""
    set_log_level(log_level)
    if not any(isinstance(h, ClickEchoHandler) for h in minor_logger.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        minor_logger.addHandler(handler)
    if log_file:
        add_file_handler(log_file)


for command in commands:
    cli.add_command(command)
