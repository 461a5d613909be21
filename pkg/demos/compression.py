"""
Block compression with zig-zag truncation: PSNR and SSIM against the number
of retained coefficients for the DCT and T1 on the bundled camera image.
"""

from pathlib import Path

from greedydct import catalog
from greedydct.codec import compress_image, relative_difference
from greedydct.pgm import read_pgm

img = read_pgm(Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "camera.pgm")
dct = catalog.get_transform("DCT")
t1 = catalog.get_transform("T1")

print(f"{'r':>3s} {'bpp':>6s} {'PSNR DCT':>9s} {'PSNR T1':>9s} {'SSIM DCT':>9s} {'SSIM T1':>9s} {'rel':>8s}")
for r in (1, 3, 6, 10, 15, 21, 28, 36, 45):
    _, a = compress_image(img, dct, r)
    _, b = compress_image(img, t1, r)
    print(f"{r:3d} {a.bpp:6.3f} {a.psnr:9.3f} {b.psnr:9.3f} {a.ssim:9.4f} {b.ssim:9.4f} "
          f"{relative_difference(a.psnr, b.psnr):8.4f}")
