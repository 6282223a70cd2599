"""Deterministic CSV emission and parsing.

Every emitted file starts with ``# key = value`` metadata lines that
record enough of the producing configuration to reproduce the run,
followed by a column-name line and plain comma-separated rows.  Floats
are always rendered with the fixed ``%.12e`` format so identical
configurations yield byte-identical bodies; files are written to a
temporary sibling and renamed into place, so a crash never leaves a
half-written file at the target path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = ["FLOAT_FORMAT", "CsvTable", "format_value", "write_csv", "read_csv"]

FLOAT_FORMAT = "%.12e"


def format_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % float(value)
    return str(value)


@dataclass(frozen=True)
class CsvTable:
    """Parsed CSV content: metadata mapping, column names, float columns."""

    metadata: dict[str, str]
    columns: tuple[str, ...]
    data: np.ndarray  # shape (n_rows, n_columns)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.data[:, self.columns.index(name)]
        except ValueError:
            raise KeyError(
                f"no column {name!r}; file has {', '.join(self.columns)}"
            ) from None


def write_csv(
    path: str | os.PathLike,
    metadata: Mapping[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> Path:
    """Write one table atomically; returns the final path."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="ascii") as fh:
            for key, value in metadata.items():
                fh.write(f"# {key} = {format_value(value)}\n")
            fh.write(",".join(columns) + "\n")
            for row in rows:
                if len(row) != len(columns):
                    raise ValueError(
                        f"row of width {len(row)} does not match "
                        f"{len(columns)} declared columns"
                    )
                fh.write(",".join(format_value(v) for v in row) + "\n")
        os.replace(tmp, path)
    finally:
        tmp.unlink(missing_ok=True)
    return path


def read_csv(path: str | os.PathLike) -> CsvTable:
    """Parse a numeric table produced by :func:`write_csv`.

    Every body field must parse as a float; tables with text columns
    (such as the period summary's label column) need a custom reader.
    """
    metadata: dict[str, str] = {}
    columns: tuple[str, ...] | None = None
    rows: list[list[float]] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if columns is not None:
                    raise ValueError(
                        f"{path}:{lineno}: comment after the header section"
                    )
                key, sep, value = line[1:].partition("=")
                if not sep:
                    raise ValueError(
                        f"{path}:{lineno}: metadata line without '='"
                    )
                metadata[key.strip()] = value.strip()
                continue
            if columns is None:
                columns = tuple(name.strip() for name in line.split(","))
                continue
            fields = line.split(",")
            if len(fields) != len(columns):
                raise ValueError(
                    f"{path}:{lineno}: expected {len(columns)} fields, "
                    f"got {len(fields)}"
                )
            try:
                rows.append([float(f) for f in fields])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    if columns is None:
        raise ValueError(f"{path}: no column header line found")
    data = np.array(rows, dtype=float) if rows else np.empty((0, len(columns)))
    return CsvTable(metadata=metadata, columns=columns, data=data)
