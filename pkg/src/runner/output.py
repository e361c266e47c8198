"""CSV tables and JSON summaries under the output directory."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.typing import NDArray
from tabulate import tabulate

from core.config import config

logger = logging.getLogger(__name__)

CSV_FORMAT = "%.17e"


@dataclass(frozen=True, eq=False)
class Table:
    """Named numeric table; one CSV file per table."""

    name: str
    headers: tuple[str, ...]
    rows: NDArray[np.float64]

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float).reshape(-1, len(self.headers))
        object.__setattr__(self, "rows", rows)

    @property
    def filename(self) -> str:
        return f"{self.name}.csv"

    def column(self, header: str) -> NDArray[np.float64]:
        return self.rows[:, self.headers.index(header)]

    def format(self, max_rows: int = 20) -> str:
        return tabulate(self.rows[:max_rows], headers=self.headers, floatfmt=".6g")


def output_root(out: str | Path | None = None) -> Path:
    return Path(out) if out is not None else Path(config.output_dir)


def write_table(table: Table, directory: Path) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / table.filename
    np.savetxt(path, table.rows, fmt=CSV_FORMAT, delimiter=",", header=",".join(table.headers), comments="")
    return path


def _json_default(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def write_summary(summary: dict, directory: Path) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / "summary.json"
    path.write_text(json.dumps(summary, indent=2, sort_keys=True, default=_json_default) + "\n")
    return path


def write_outputs(name: str, tables: list[Table], summary: dict, out: str | Path | None = None) -> list[Path]:
    """Write `<out>/<name>/<table>.csv` for every table plus `summary.json`."""
    directory = output_root(out) / name
    paths = [write_table(table, directory) for table in tables]
    paths.append(write_summary(summary, directory))
    logger.info(f"Wrote {len(paths)} files to {directory}")
    return paths
