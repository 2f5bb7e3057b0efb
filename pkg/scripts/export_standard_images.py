"""Write the 512x512 images bundled with scikit-image as 8-bit grayscale PGMs.

    python scripts/export_standard_images.py images/
"""

import sys
from pathlib import Path

import numpy as np
from skimage import color, data

from zonaldct.imageio import GrayImage, save_pgm

NAMES = ("camera", "astronaut", "moon", "brick", "grass", "gravel", "immunohistochemistry")


def main(out="images"):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        im = getattr(data, name)()
        if im.ndim == 3:
            im = np.round(color.rgb2gray(im[..., :3]) * 255)
        save_pgm(GrayImage(np.asarray(im, dtype=np.uint8)), out / f"{name}.pgm")
        print(out / f"{name}.pgm", file=sys.stderr)


if __name__ == "__main__":
    main(*sys.argv[1:])
