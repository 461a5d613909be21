"""Binary PGM (P5) reading and writing for 8-bit grayscale images."""

from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path

import numpy as np

_TOKEN = re.compile(rb"(?:\s*(?:#[^\n]*\n)?)*\s*(\S+)")


def parse_pgm(data: bytes) -> np.ndarray:
    pos = 0
    fields = []
    for _ in range(4):
        m = _TOKEN.match(data, pos)
        if m is None:
            raise ValueError("truncated PGM header")
        fields.append(m.group(1))
        pos = m.end()
    magic, width, height, maxval = fields
    if magic != b"P5":
        raise ValueError(f"not a binary PGM (magic {magic!r})")
    width, height, maxval = int(width), int(height), int(maxval)
    if not 0 < maxval < 256:
        raise ValueError(f"only 8-bit PGM is supported (maxval {maxval})")
    # Exactly one whitespace byte separates the header from the raster.
    pos += 1
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise ValueError("PGM raster is shorter than its header declares")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def read_pgm(path) -> np.ndarray:
    return parse_pgm(Path(path).read_bytes())


def encode_pgm(img) -> bytes:
    img = np.asarray(img)
    if img.ndim != 2 or img.dtype != np.uint8:
        raise ValueError("expected a 2-D uint8 array")
    h, w = img.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(img).tobytes()


def atomic_write(path, data: bytes) -> None:
    """Write ``data`` so that ``path`` appears only once it is complete."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def write_pgm(path, img) -> None:
    atomic_write(path, encode_pgm(img))
