"""Average PSNR / NZ per transform over a directory of PGM images.

    python scripts/export_standard_images.py images/
    python scripts/corpus_metrics.py images/
"""

import sys
from pathlib import Path

from zonaldct import codec
from zonaldct.imageio import load_pgm

PUBLISHED = {  # transform -> (psnr, nz, pruned psnr, pruned nz)
    "dct": (33.10, 81.83, 30.40, 86.19),
    "sdct": (29.28, 80.20, 27.14, 86.27),
    "rdct": (31.91, 81.03, 28.93, 86.45),
    "modified-rdct": (30.94, 79.83, 26.37, 86.75),
}


def main(directory="images"):
    images = {p.stem: load_pgm(p) for p in sorted(Path(directory).glob("*.pgm"))}
    avg = codec.corpus_average(images, codec.default_configs())
    print(f"{len(images)} images")
    print(f"{'method':15}{'PSNR':>8}{'NZ%':>8}{'PSNR*':>8}{'NZ%*':>8}   published")
    for t, pub in PUBLISHED.items():
        full, pruned = avg[(t, False)], avg[(t, True)]
        print(f"{t:15}{full.psnr:8.2f}{full.nz:8.2f}{pruned.psnr:8.2f}{pruned.nz:8.2f}   {pub}")
    print("* pruned: only the 4x4 low-frequency coefficients kept")


if __name__ == "__main__":
    main(*sys.argv[1:])
