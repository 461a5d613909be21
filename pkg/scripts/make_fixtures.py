"""
Regenerate the PGM test fixtures from scikit-image's bundled sample images.

Only needed when the fixtures change; the package itself does not import
scikit-image. Run from the repository root:

    python3 scripts/make_fixtures.py
"""

from pathlib import Path

import numpy as np
from skimage import data

from greedydct.pgm import write_pgm

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

# camera and moon are 512x512; coins is 303x384, which is not a multiple of 8.
SOURCES = {
    "camera": data.camera,
    "moon": data.moon,
    "coins": data.coins,
    "page": data.page,
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, load in SOURCES.items():
        img = np.asarray(load())
        if img.dtype != np.uint8 or img.ndim != 2:
            raise SystemExit(f"{name}: expected 8-bit grayscale, got {img.dtype} {img.shape}")
        write_pgm(OUT / f"{name}.pgm", img)
        print(f"{name}: {img.shape[1]}x{img.shape[0]}")


if __name__ == "__main__":
    main()
