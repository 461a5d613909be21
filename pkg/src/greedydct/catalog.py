"""
Registry of the printed 8-point low-complexity matrices.

Every entry keeps an integer matrix. Matrices with half-integer entries (LO)
are stored doubled, with ``prescale = 1/2`` recorded so the true matrix is
``prescale * t``; the orthogonalized approximation does not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import UnknownTransformError
from .linalg import (
    ApproxTransform,
    exact_dct_matrix,
    orthogonalize,
    printed_dct_matrix,
    row_normalized,
    scalar_scaled,
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    t: np.ndarray
    scaling_kind: str
    citation: str
    entry_set: frozenset
    prescale: Fraction = Fraction(1)

    @property
    def matrix(self) -> np.ndarray:
        """The matrix as printed (``prescale * t``), as floats."""
        return float(self.prescale) * self.t.astype(float)


def _int(rows) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    a.flags.writeable = False
    return a


T1 = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 2, 1, 0, 0, -1, -2, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [1, 0, -2, -2, 2, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [2, -2, 0, 1, -1, 0, 2, -2],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [0, -1, 2, -2, 2, -2, 1, 0],
])

T2 = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 2, 0, 0, -2, -1, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [2, 0, -2, -1, 1, 2, 0, -2],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 2, -2, 0, 2, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [0, -2, 1, -2, 2, -1, 2, 0],
])

RDCT = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, -1, -1, -1],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [1, 0, -1, -1, 1, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 0, 1, -1, 0, 1, -1],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, -1, 1, -1, 1, -1, 1, 0],
])

BAS_2008B = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 0, -1, 0, 0, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, 0, 0, -1, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
])

# LO doubled: the printed matrix has +-1/2 entries.
LO_X2 = _int([
    [2, 2, 2, 2, 2, 2, 2, 2],
    [2, 2, 2, 0, 0, -2, -2, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [2, 0, -2, -2, 2, 2, 0, -2],
    [2, -2, -2, 2, 2, -2, -2, 2],
    [2, -2, 0, 2, -2, 0, 2, -2],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [0, -2, 2, -2, 2, -2, 2, 0],
])

T6 = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 1, 0, 0, -1, -1, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [1, 0, -2, -1, 1, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 1, -1, 0, 2, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [0, -1, 1, -2, 2, -1, 1, 0],
])

T4 = _int([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 0, -1, -1, 1, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 0, 1, -1, 0, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [0, -1, 1, -1, 1, -1, 1, 0],
])


def sdct_matrix() -> np.ndarray:
    """Entrywise sign of the 8-point DCT; every entry is +1 or -1."""
    return _int(np.sign(printed_dct_matrix()).astype(np.int64))


_P1 = frozenset({0, 1, -1})
_P2 = frozenset({0, 1, -1, 2, -2})

_ENTRIES = {
    e.name: e
    for e in [
        CatalogEntry("T1", T1, "diagonal-row-norm", "greedy angle search over {0,+-1,+-2}^8", _P2),
        CatalogEntry("T2", T2, "diagonal-row-norm", "greedy angle search over {0,+-1,+-2}^8", _P2),
        CatalogEntry("RDCT", RDCT, "diagonal-row-norm", "rounded DCT, entries in {0,+-1}", _P1),
        CatalogEntry("T4", T4, "diagonal-row-norm", "integer approximation over {0,+-1}", _P1),
        CatalogEntry("T6", T6, "diagonal-row-norm", "integer approximation over {0,+-1,+-2}", _P2),
        CatalogEntry("BAS-2008b", BAS_2008B, "row-norm", "multiplierless approximation, entries in {0,+-1} (2008)", _P1),
        CatalogEntry("LO", LO_X2, "diagonal-row-norm", "scale-aware approximation with half-integer entries (2004)",
                     frozenset({0, 1, -1, 2, -2}), Fraction(1, 2)),
        CatalogEntry("SDCT", sdct_matrix(), "scalar", "signed DCT (2001)", _P1),
    ]
}

NAMES = ("DCT",) + tuple(_ENTRIES)
APPROXIMATIONS = tuple(_ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownTransformError(name, NAMES) from None


def get_transform(name: str) -> ApproxTransform:
    """Look up a transform by name and return its orthogonal (or scaled) approximation."""
    if name == "DCT":
        c = exact_dct_matrix(8)
        return ApproxTransform("DCT", c, np.eye(8), c, "scalar", "exact orthonormal DCT-II")
    e = entry(name)
    if e.scaling_kind == "scalar":
        return scalar_scaled(e.t, 1 / np.sqrt(8), e.name, e.citation)
    if e.scaling_kind == "row-norm":
        # Rows are not mutually orthogonal; the published figures use plain row normalization.
        return row_normalized(e.t, e.name, e.citation)
    return orthogonalize(e.t, e.name, e.citation)


def format_matrix(t, scale: Fraction | None = None, comments=()) -> str:
    """Plain-text form: one row per line, space-separated integers."""
    t = np.asarray(t)
    lines = [f"# {c}" for c in comments]
    if scale is not None and scale != 1:
        lines.append(f"# scale {scale.numerator}/{scale.denominator}")
    width = max(len(str(int(v))) for v in t.ravel())
    lines += [" ".join(f"{int(v):>{width}d}" for v in row) for row in t]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[np.ndarray, Fraction]:
    """Inverse of :func:`format_matrix`; returns ``(t, scale)``."""
    rows = []
    scale = Fraction(1)
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] == "scale":
                scale = Fraction(words[1])
            continue
        rows.append([int(w) for w in line.split()])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix text must contain equal-length integer rows")
    return np.array(rows, dtype=np.int64), scale
