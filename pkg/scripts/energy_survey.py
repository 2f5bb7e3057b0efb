"""Energy held by the 16 low-frequency modified-RDCT coefficients, per image."""

import sys
from pathlib import Path

from zonaldct.codec import pad_to_blocks
from zonaldct.imageio import load_pgm
from zonaldct.zonal2d import image_energy_compaction

paths = sorted(Path(sys.argv[1] if len(sys.argv) > 1 else "images").glob("*.pgm"))
weighted = []
for p in paths:
    r = image_energy_compaction(pad_to_blocks(load_pgm(p).pixels))
    weighted.append(r.weighted)
    print(f"{p.stem:24} weighted {r.weighted:.4f}  unweighted {r.unweighted:.4f}")
if weighted:
    print(f"{'mean':24} weighted {sum(weighted) / len(weighted):.4f}")
