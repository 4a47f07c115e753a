"""Text formats: edge lists, minor models and g-tables.

Every format is line based; text after '#' is a comment and blank lines are
ignored.
"""

from __future__ import annotations

from fractions import Fraction

from ..constants import COMMENT_PREFIX, MODEL_LINE_PREFIX
from ..exceptions import ParseError
from ..graph.graph import Graph, build_graph
from ..graph.minor_model import MinorModel
from ..logger import minor_logger
from ..utils import parse_rational, strip_comment


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw, COMMENT_PREFIX)
        if line:
            lines.append((number, line))

    return lines


def _parse_vertex(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", line) from None
    if value < 0:
        raise ParseError(f"negative vertex id: {value}", line)

    return value


def parse_edge_list(text: str) -> Graph:
    """Parses "u v" lines into a Graph on vertices 0..max id.

    Args:
        text (str): The edge-list text

    Raises:
        ParseError: On a malformed line, with its line number

    Returns:
        Graph: The parsed graph; duplicates and self-loops are dropped
    """
    edges = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", number)
        v, w = (_parse_vertex(token, number) for token in tokens)
        edges.append((v, w))

    n = max((max(edge) for edge in edges), default=-1) + 1
    graph = build_graph(edges, n=n)
    if graph.dropped_duplicates or graph.dropped_loops:
        minor_logger.warning(
            f"dropped {graph.dropped_duplicates} duplicate edges and "
            f"{graph.dropped_loops} self-loops"
        )

    return graph


def serialize_edge_list(graph: Graph) -> str:
    """One "u v" line per edge, ascending; isolated vertices are not written."""
    return "".join(f"{v} {w}\n" for v, w in sorted(graph.edges()))


def parse_model(text: str) -> MinorModel:
    """Parses "B<i>: v1 v2 ..." lines into a MinorModel, in line order."""
    sets = []
    for number, line in _content_lines(text):
        label, separator, body = line.partition(":")
        if not separator or not label.startswith(MODEL_LINE_PREFIX):
            raise ParseError(f"expected 'B<i>: ...', got {line!r}", number)
        sets.append({_parse_vertex(token, number) for token in body.split()})

    return MinorModel.from_sets(sets)


def serialize_model(model: MinorModel) -> str:
    return "".join(
        f"{MODEL_LINE_PREFIX}{i}: {' '.join(map(str, members))}\n"
        for i, members in enumerate(model.sorted_sets(), start=1)
    )


def parse_g_table(text: str) -> dict[int, Fraction]:
    """Parses "t value" lines; value is an integer or "p/q"."""
    table = {}
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 't value', got {line!r}", number)
        t = _parse_vertex(tokens[0], number)
        try:
            value = parse_rational(tokens[1])
        except ParseError as error:
            raise ParseError(str(error), number) from None
        if value <= 0:
            raise ParseError(f"g({t}) must be positive, got {value}", number)
        table[t] = value

    return table
