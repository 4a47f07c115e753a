from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from ...algorithm.config import Config
from ...algorithm.driver import MinorFinder
from ...cli_io.generators import gen_random
from ...exceptions import MinorFinderError
from ...logger import minor_logger
from ...utils import ceil_fraction


def execute(
    filters: dict[str, Any] | None = None
) -> tuple[list[dict[str, Any]], list[dict[str, Any]]]:
    return BenchReport(filters).run()


@dataclass
class BenchRow:
    n: int
    m: int
    ops: int = 0
    ms: float = 0.0
    found: bool = False
    rounds: int = 0
    error: str | None = None


def bench_edges(n: int, cfg: Config) -> int:
    """Edge count for a bench row: ceil(D*n/2) + n, just above the threshold."""
    return ceil_fraction(cfg.threshold * n / 2) + n


def bench_row(n: int, m: int, cfg: Config) -> BenchRow:
    """Time one finder run on gen_random(n, m, cfg.seed)."""
    row = BenchRow(n=n, m=m)
    started = time.perf_counter()
    try:
        finder = MinorFinder(gen_random(n, m, cfg.seed), cfg)
        finder.run()
        row.found = True
        row.ops, row.rounds = finder.ops, finder.rounds
    except MinorFinderError as error:
        row.error = type(error).__name__
        minor_logger.warning(f"bench row n={n} m={m} failed: {error}")
    row.ms = (time.perf_counter() - started) * 1000

    return row


class BenchReport:
    def __init__(self, filters: dict[str, Any] | None = None) -> None:
        self.filters = dict(filters or {})
        self.columns = [
            {"fieldname": "n", "label": "n", "fieldtype": "Int"},
            {"fieldname": "m", "label": "m", "fieldtype": "Int"},
            {"fieldname": "ops", "label": "Ops", "fieldtype": "Int"},
            {"fieldname": "ms", "label": "Time (ms)", "fieldtype": "Float"},
            {"fieldname": "found", "label": "Found", "fieldtype": "Check"},
            {"fieldname": "rounds", "label": "Rounds", "fieldtype": "Int"},
            {"fieldname": "error", "label": "Error", "fieldtype": "Data"},
        ]
        self.rows: list[BenchRow] = []
        self.data: list[dict[str, Any]] = []

    def run(self) -> tuple[list[dict[str, Any]], list[dict[str, Any]]]:
        self.fetch_data()
        return self.columns, self.data

    def fetch_data(self) -> None:
        cfg = Config(
            t=int(self.filters.get("t", 4)),
            epsilon=Fraction(self.filters.get("epsilon", 2)),
            seed=int(self.filters.get("seed", 0)),
        )
        edges = self.filters.get("m")

        for n in self.filters.get("sizes") or []:
            m = int(edges) if edges is not None else bench_edges(n, cfg)
            self.rows.append(bench_row(n, m, cfg))

        self.data = [asdict(row) for row in self.rows]

    def to_table(self) -> str:
        """Aligned text table, one line per row."""
        cells = [[column["label"] for column in self.columns]]
        for record in self.data:
            cells.append([_format_cell(record, column) for column in self.columns])
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]

        return "".join(
            "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
            + "\n"
            for row in cells
        )

    def to_lines(self) -> str:
        """Machine-readable "n=<..> ops=<..> ms=<..>" lines."""
        return "".join(
            f"n={row.n} ops={row.ops} ms={row.ms:.1f}\n" for row in self.rows
        )


def bench_run(
    sizes: list[int],
    t: int,
    epsilon: Fraction,
    seed: int,
    m: int | None = None,
) -> BenchReport:
    """Run the finder once per size on a seeded random graph.

    Args:
        sizes (list[int]): Vertex counts, one row each, in order
        t (int): The clique order
        epsilon (Fraction): The density slack
        seed (int): Generator seed
        m (int | None, optional): Edge count override for every row.
            Defaults to ceil(D*n/2) + n.

    Returns:
        BenchReport: The filled report
    """
    report = BenchReport(
        {"sizes": sizes, "t": t, "epsilon": epsilon, "seed": seed, "m": m}
    )
    report.run()

    return report


def _format_cell(record: dict[str, Any], column: dict[str, Any]) -> str:
    value = record[column["fieldname"]]
    if value is None:
        return "-"
    if column["fieldtype"] == "Float":
        return f"{value:.1f}"
    if column["fieldtype"] == "Check":
        return "yes" if value else "no"

    return str(value)
