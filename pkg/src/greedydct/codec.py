"""
JPEG-like block compression used to compare transforms.

Each 8x8 block ``A`` is transformed to ``B = C @ A @ C.T``, only the first
``r`` coefficients in zig-zag order are kept, and the block is rebuilt with
``C.T @ B' @ C``. No quantization and no entropy coding: ``r`` alone sets the
rate at ``r / 8`` bits per pixel.

Reconstructions are clipped to ``[0, 255]`` but not rounded, so a lossless
setting (``r = 64``) reproduces the input to floating-point accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError
from .linalg import ApproxTransform, has_orthonormal_rows

BLOCK = 8
PEAK = 255.0

# SSIM settings: 8x8 uniform window over the valid region.
SSIM_WINDOW = 8
SSIM_K1 = 0.01
SSIM_K2 = 0.03


def forward_2d(c_hat, block) -> np.ndarray:
    """2-D transform of one block, or of a stack of blocks in the last two axes."""
    c_hat = np.asarray(c_hat, dtype=float)
    return c_hat @ np.asarray(block, dtype=float) @ c_hat.T


def inverse_2d(c_hat, coeffs) -> np.ndarray:
    c_hat = np.asarray(c_hat, dtype=float)
    if not has_orthonormal_rows(c_hat, 1e-10):
        raise PreconditionError("inverse_2d needs a transform with orthonormal rows")
    return c_hat.T @ np.asarray(coeffs, dtype=float) @ c_hat


def zigzag_order(n: int = BLOCK) -> list[tuple[int, int]]:
    """JPEG zig-zag scan as ``(row, col)`` pairs."""
    order = []
    for s in range(2 * n - 1):
        cells = [(i, s - i) for i in range(n) if 0 <= s - i < n]
        # odd diagonals run top-right to bottom-left, even ones the reverse
        order.extend(cells if s % 2 else cells[::-1])
    return order


def retention_mask(r: int, n: int = BLOCK) -> np.ndarray:
    if not 1 <= r <= n * n:
        raise ValueError(f"r must lie in 1..{n * n}, got {r}")
    mask = np.zeros((n, n), dtype=bool)
    for i, j in zigzag_order(n)[:r]:
        mask[i, j] = True
    return mask


def zigzag_retain(coeffs, r: int) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=float)
    return np.where(retention_mask(r, coeffs.shape[-1]), coeffs, 0.0)


def _pad(img: np.ndarray) -> np.ndarray:
    h, w = img.shape
    return np.pad(img, ((0, -h % BLOCK), (0, -w % BLOCK)), mode="edge")


def _to_blocks(img: np.ndarray) -> np.ndarray:
    h, w = img.shape
    return img.reshape(h // BLOCK, BLOCK, w // BLOCK, BLOCK).swapaxes(1, 2)


def _from_blocks(blocks: np.ndarray) -> np.ndarray:
    bh, bw = blocks.shape[:2]
    return blocks.swapaxes(1, 2).reshape(bh * BLOCK, bw * BLOCK)


def reconstruct(img, c_hat, r: int) -> np.ndarray:
    """Forward transform, zig-zag truncation and inverse over every block."""
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError("expected a 2-D grayscale image")
    h, w = img.shape
    blocks = _to_blocks(_pad(img).astype(float))
    kept = zigzag_retain(forward_2d(c_hat, blocks), r)
    out = _from_blocks(inverse_2d(c_hat, kept))[:h, :w]
    return np.clip(out, 0.0, PEAK)


def image_mse(a, b) -> float:
    d = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    return float(np.mean(d * d))


def psnr_from_mse(m: float) -> float:
    return float("inf") if m == 0 else float(10 * np.log10(PEAK**2 / m))


def _box_mean(x: np.ndarray, k: int) -> np.ndarray:
    s = np.zeros((x.shape[0] + 1, x.shape[1] + 1))
    s[1:, 1:] = x.cumsum(0).cumsum(1)
    return (s[k:, k:] - s[:-k, k:] - s[k:, :-k] + s[:-k, :-k]) / (k * k)


def ssim(a, b, window: int = SSIM_WINDOW) -> float:
    """Mean structural similarity over all ``window x window`` positions."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"image shapes differ: {a.shape} vs {b.shape}")
    if min(a.shape) < window:
        raise ValueError("image smaller than the SSIM window")
    c1 = (SSIM_K1 * PEAK) ** 2
    c2 = (SSIM_K2 * PEAK) ** 2
    mu_a = _box_mean(a, window)
    mu_b = _box_mean(b, window)
    # Second moments from centred data keep the box sums well conditioned;
    # (co)variances do not depend on the shift, the means above do.
    shift = 0.5 * (a.mean() + b.mean())
    ac = a - shift
    bc = b - shift
    mc_a = mu_a - shift
    mc_b = mu_b - shift
    var_a = np.maximum(_box_mean(ac * ac, window) - mc_a**2, 0.0)
    var_b = np.maximum(_box_mean(bc * bc, window) - mc_b**2, 0.0)
    cov = _box_mean(ac * bc, window) - mc_a * mc_b
    num = (2 * mu_a * mu_b + c1) * (2 * cov + c2)
    den = (mu_a**2 + mu_b**2 + c1) * (var_a + var_b + c2)
    return float(np.mean(num / den))


@dataclass(frozen=True)
class CompressionResult:
    image: str
    transform: str
    r: int
    mse: float
    psnr: float
    ssim: float

    COLUMNS = ("image", "transform", "r", "bpp", "mse", "psnr_db", "ssim")

    @property
    def bpp(self) -> float:
        return self.r / 8


def compress_image(img, transform: ApproxTransform, r: int, image_name: str = ""):
    """Return ``(reconstruction, CompressionResult)`` for one image and one ``r``."""
    img = np.asarray(img)
    recon = reconstruct(img, transform.c_hat, r)
    m = image_mse(img, recon)
    return recon, CompressionResult(image_name, transform.name, r, m, psnr_from_mse(m), ssim(img, recon))


def relative_difference(mu_dct: float, mu_hat: float) -> float:
    """``(mu_dct - mu_hat) / mu_dct``; negative when the approximation scores higher."""
    if mu_dct == 0:
        raise DomainError("relative difference undefined for a zero reference")
    return (mu_dct - mu_hat) / mu_dct
