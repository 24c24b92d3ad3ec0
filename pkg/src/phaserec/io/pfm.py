"""Portable float map (PFM) codec for scalar fields.

Grayscale only ("Pf").  Header: magic line, "width height" line, scale
line whose sign encodes endianness (negative = little-endian), then
width*height 4-byte floats row-major, bottom row first.  Field row 0 is
the bottom of the domain, so field rows map to file rows directly.
"""

from __future__ import annotations

import numpy as np

from ..errors import FormatError
from ..grid import GridSpec, ScalarField

MAX_SAMPLES = 100_000_000


def write_pfm(path, values: np.ndarray) -> None:
    """Write a 2D float array as little-endian grayscale PFM."""
    arr = np.asarray(values, dtype="<f4")
    if arr.ndim != 2:
        raise FormatError("PFM writer expects a 2D array")
    n, m = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"Pf\n{m} {n}\n-1.0\n".encode("ascii"))
        fh.write(arr.tobytes())


def read_pfm(path) -> np.ndarray:
    """Read a grayscale PFM into a float32 array of shape (height, width)."""
    with open(path, "rb") as fh:
        data = fh.read()

    def next_line(start):
        end = data.find(b"\n", start)
        if end < 0:
            raise FormatError("malformed-header: unterminated header line", offset=start)
        return data[start:end], end + 1

    magic, pos = next_line(0)
    if magic != b"Pf":
        raise FormatError(f"malformed-header: expected 'Pf', got {magic!r}", offset=0)
    dims, pos2 = next_line(pos)
    try:
        m, n = (int(t) for t in dims.split())
    except ValueError:
        raise FormatError(f"malformed-header: bad dimensions line {dims!r}", offset=pos)
    if m <= 0 or n <= 0 or m * n > MAX_SAMPLES:
        raise FormatError(f"dimension-overflow: {m} x {n}", offset=pos)
    scale_line, pos3 = next_line(pos2)
    try:
        scale = float(scale_line)
    except ValueError:
        raise FormatError(f"malformed-header: bad scale line {scale_line!r}", offset=pos2)
    if scale == 0.0:
        raise FormatError("malformed-header: zero scale", offset=pos2)

    need = m * n * 4
    payload = data[pos3 : pos3 + need]
    if len(payload) < need:
        raise FormatError(
            f"truncated-payload: expected {need} bytes, found {len(payload)}",
            offset=pos3 + len(payload),
        )
    dtype = "<f4" if scale < 0 else ">f4"
    arr = np.frombuffer(payload, dtype=dtype).reshape(n, m).astype(np.float32)
    if abs(scale) != 1.0:
        arr = arr * np.float32(abs(scale))
    return arr


def write_field(path, field: ScalarField) -> None:
    write_pfm(path, field.values)


def read_field(path, grid: GridSpec) -> ScalarField:
    arr = read_pfm(path)
    return ScalarField(grid, arr.astype(np.float64))
