"""Shared CSV loading for the figure-rendering scripts.

The scripts consume only the CSV files produced by the `lambdaprobe` CLI:
'# config: key=value' comment lines, a header row, then data rows.  No
physics is computed here; everything is read straight from the files.
"""

from __future__ import annotations

import math


class FigureDataError(Exception):
    """Input CSV is missing, empty, or lacks a required column."""


def load_table(path):
    """Read one CLI CSV file.

    Returns:
        (config, columns): the '# config:' entries as a string dict, and a
        column-name -> list-of-strings mapping for the data rows.

    Raises:
        FigureDataError: on empty files or files without data rows.
        OSError: if the file cannot be read.
    """
    config: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[str]] = []
    with open(path, "r", encoding="utf-8") as stream:
        for raw in stream:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("config:"):
                    key, _, value = body[len("config:"):].strip().partition("=")
                    config[key.strip()] = value.strip()
                continue
            if header is None:
                header = line.split(",")
            else:
                rows.append(line.split(","))
    if header is None:
        raise FigureDataError(f"{path}: no header row")
    if not rows:
        raise FigureDataError(f"{path}: no data rows")
    columns = {name: [row[k] if k < len(row) else "" for row in rows]
               for k, name in enumerate(header)}
    return config, columns


def numeric(columns, name, path="<csv>"):
    """One column as floats; blank entries become NaN.

    Raises:
        FigureDataError: if the column is absent.
    """
    if name not in columns:
        raise FigureDataError(f"{path}: column {name!r} not found "
                              f"(have {', '.join(sorted(columns))})")
    values = []
    for cell in columns[name]:
        try:
            values.append(float(cell))
        except ValueError:
            values.append(math.nan)
    return values


#: Curve styles in caption order: solid, dashed, dash-dotted.
LINESTYLES = ("-", "--", "-.")


def curve_label(config, key):
    """Human-readable curve label from the pinned parameter in the header."""
    return f"{key} = {config.get(key, '?')}"
