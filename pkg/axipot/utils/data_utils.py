"""
axipot/utils/data_utils.py

Reading and writing the files the command line exchanges, and parsing its compact arguments.

Contains:
- write_json_file(), read_json_file(): Pretty JSON documents
- format_field_csv(), write_field_csv(): Field grids as x,y,tau,theta,re,im rows
- read_trace_csv(): Boundary samples as theta,re,im rows
- parse_complex(), parse_pair(), parse_grid(): "re,im", "x,y" and "start:stop:step" arguments
"""

import csv
import io
import json
from pathlib import Path
from typing import Any

import numpy as np

from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

FIELD_CSV_HEADER = ("x", "y", "tau", "theta", "re", "im")


# Private functions _______________________________________________________________________________

def _number(value: float) -> str:
    """17 significant digits; non-finite values as nan/inf."""
    return f"{value:.17g}"


def _grid_axis(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid axis must read start:stop:step, got {text!r}")
    start, stop, step = (float(part) for part in parts)
    if not step > 0.0 or stop < start:
        raise ValueError(f"grid axis needs step > 0 and stop >= start, got {text!r}")
    count = int(round((stop - start) / step)) + 1
    return start + step * np.arange(count)


# Exports _________________________________________________________________________________________

def write_json_file(path: str | Path, obj: Any) -> None:
    """
    Write pretty JSON file.
    Args:
        path (str | Path): The path to the file to write to.
        obj (Any): The object to write to the file.
    """
    with open(path, mode="w", encoding="utf-8") as f:
        json.dump(obj, f, ensure_ascii=False, indent=2)


def read_json_file(path: str | Path) -> Any:
    """Load a JSON document."""
    with open(path, mode="r", encoding="utf-8") as f:
        return json.load(f)


def format_field_csv(
    x: np.ndarray,
    y: np.ndarray,
    tau: np.ndarray,
    theta: np.ndarray,
    values: np.ndarray,
) -> str:
    """
    Field samples as CSV text with header x,y,tau,theta,re,im.
    Arrays share one shape and are written in row-major order.
    """
    columns = [np.asarray(column).reshape(-1) for column in (x, y, tau, theta)]
    values = np.asarray(values, dtype=complex).reshape(-1)
    if any(column.size != values.size for column in columns):
        raise ValueError("field columns must have the same number of samples")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(FIELD_CSV_HEADER)
    for xi, yi, ti, hi, value in zip(*columns, values):
        writer.writerow([_number(xi), _number(yi), _number(ti), _number(hi), _number(value.real), _number(value.imag)])
    return buffer.getvalue()


def write_field_csv(
    path: str | Path,
    x: np.ndarray,
    y: np.ndarray,
    tau: np.ndarray,
    theta: np.ndarray,
    values: np.ndarray,
) -> None:
    """Write format_field_csv() output to path."""
    text = format_field_csv(x, y, tau, theta, values)
    Path(path).write_text(text, encoding="utf-8")
    logger.info("wrote %d field samples to %s", text.count("\n") - 1, path)


def read_trace_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """
    Boundary samples from theta,re,im rows; a non-numeric first row is taken as a header.
    Returns:
        tuple[np.ndarray, np.ndarray]: Angles and complex values.
    Raises:
        ValueError: A row without three numbers, or angles that are not 2*pi*j/J.
    """
    with open(path, mode="r", encoding="utf-8", newline="") as f:
        rows = [row for row in csv.reader(f) if row]
    if rows:
        try:
            float(rows[0][0])
        except ValueError:
            rows = rows[1:]
    if not rows:
        raise ValueError(f"no samples in {path}")
    if any(len(row) != 3 for row in rows):
        raise ValueError(f"trace rows must read theta,re,im in {path}")
    table = np.array([[float(cell) for cell in row] for row in rows])
    theta = table[:, 0]
    expected = 2.0 * np.pi * np.arange(len(theta)) / len(theta)
    if not np.allclose(theta, expected, rtol=0.0, atol=1e-9):
        raise ValueError(f"trace angles in {path} are not uniform 2*pi*j/J samples")
    return theta, table[:, 1] + 1j * table[:, 2]


def parse_complex(text: str | float | complex) -> complex:
    """'re,im' or 're' (numbers pass through)."""
    if not isinstance(text, str):
        return complex(text)
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) != 2:
        raise ValueError(f"expected re,im, got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def parse_pair(text: str) -> tuple[float, float]:
    """'x,y' as two floats."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected x,y, got {text!r}")
    return float(parts[0]), float(parts[1])


def parse_grid(text: str) -> tuple[np.ndarray, np.ndarray]:
    """
    'x0:x1:dx,y0:y1:dy' as meshgrid arrays with x varying slowest (row-major in x).
    Both stops are included when they fall on the step.
    """
    axes = text.split(",")
    if len(axes) != 2:
        raise ValueError(f"grid must read x0:x1:dx,y0:y1:dy, got {text!r}")
    xs, ys = (_grid_axis(axis) for axis in axes)
    return np.meshgrid(xs, ys, indexing="ij")
