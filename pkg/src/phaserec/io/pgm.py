"""Binary PGM (P5) writer/reader for human-inspectable grayscale maps.

Lossy by design: samples are linearly mapped to [0, maxval] and the
min/max mapping is recorded in a sidecar text file next to the image.
PFM is the lossless interchange format; PGM is for looking at.
"""

from __future__ import annotations

import numpy as np

from ..errors import FormatError

MAX_SAMPLES = 100_000_000


def write_pgm(path, values: np.ndarray, maxval: int = 65535) -> None:
    """Write a float array as P5 with linear min/max scaling.

    PGM stores the top row first, so the field (bottom row first) is
    flipped on the way out.  A sidecar ``<path>.meta.txt`` records the
    mapping.
    """
    if not 0 < maxval < 65536:
        raise FormatError(f"maxval {maxval} out of range")
    arr = np.asarray(values, dtype=np.float64)
    lo, hi = float(arr.min()), float(arr.max())
    span = hi - lo if hi > lo else 1.0
    scaled = np.round((arr - lo) / span * maxval)
    dtype = ">u2" if maxval > 255 else "u1"
    img = np.flipud(scaled).astype(dtype)
    n, m = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{m} {n}\n{maxval}\n".encode("ascii"))
        fh.write(img.tobytes())
    with open(f"{path}.meta.txt", "w") as fh:
        fh.write(f"min = {lo!r}\nmax = {hi!r}\nmaxval = {maxval}\n")


def read_pgm(path) -> np.ndarray:
    """Read a P5 file; returns floats in [0, 1] (value / maxval), bottom
    row first."""
    with open(path, "rb") as fh:
        data = fh.read()

    pos = 0
    tokens = []
    # header: three whitespace-separated tokens after the magic, comments allowed
    if not data.startswith(b"P5"):
        raise FormatError(f"malformed-header: expected 'P5', got {data[:2]!r}", offset=0)
    pos = 2
    while len(tokens) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if pos == start:
            raise FormatError("malformed-header: missing header token", offset=pos)
        tokens.append(data[start:pos])
    pos += 1  # single whitespace byte before the payload
    try:
        m, n, maxval = (int(t) for t in tokens)
    except ValueError:
        raise FormatError(f"malformed-header: bad tokens {tokens!r}", offset=2)
    if m <= 0 or n <= 0 or m * n > MAX_SAMPLES:
        raise FormatError(f"dimension-overflow: {m} x {n}", offset=2)
    if not 0 < maxval < 65536:
        raise FormatError(f"malformed-header: bad maxval {maxval}", offset=2)

    dtype = ">u2" if maxval > 255 else "u1"
    need = m * n * (2 if maxval > 255 else 1)
    payload = data[pos : pos + need]
    if len(payload) < need:
        raise FormatError(
            f"truncated-payload: expected {need} bytes, found {len(payload)}",
            offset=pos + len(payload),
        )
    img = np.frombuffer(payload, dtype=dtype).reshape(n, m).astype(np.float64)
    return np.flipud(img) / maxval
