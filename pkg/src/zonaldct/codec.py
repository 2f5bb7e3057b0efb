"""JPEG-like block compression experiment: transform, quantize, reconstruct, measure."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import zonal2d
from .imageio import GrayImage
from .kernels import TransformSpec, get_spec, prune

# JPEG Annex K luminance table
JPEG_LUMINANCE = np.array([
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99],
])

CSV_HEADER = "transform,pruned,image,psnr_db,nz_pct,energy_compaction"


@dataclass(frozen=True, eq=False)
class QuantTable:
    steps: np.ndarray = field(default_factory=lambda: JPEG_LUMINANCE.copy())

    def __post_init__(self):
        steps = np.asarray(self.steps)
        if steps.shape != (8, 8):
            raise ValueError(f"quantization table must be 8x8, got {steps.shape}")
        if not np.all(steps >= 1):
            raise ValueError("quantization steps must all be >= 1")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def uniform(cls, step: int = 1) -> "QuantTable":
        return cls(np.full((8, 8), step))

    def merged(self, spec: TransformSpec) -> np.ndarray:
        """Steps with the scaling diagonal folded in: q_ij / (d_i d_j).

        Dividing unscaled integer coefficients by this table is the same as
        dividing the orthonormal coefficients by the base steps.
        """
        n = spec.rows
        return self.steps[:n, :n] / zonal2d.scale_outer(spec)


@dataclass(frozen=True)
class CodecConfig:
    transform: str = "modified-rdct"
    pruned: bool = False
    level_shift: bool = False
    quant: QuantTable = field(default_factory=QuantTable, compare=False)

    def __post_init__(self):
        get_spec(self.transform)

    def forward_spec(self) -> TransformSpec:
        spec = get_spec(self.transform)
        return prune(spec) if self.pruned and spec.rows == 8 else spec

    @property
    def full_name(self) -> str:
        # the pruned 4x8 kernel belongs to the modified RDCT row of every table
        return "modified-rdct" if self.transform == "pruned" else self.transform

    @property
    def is_pruned(self) -> bool:
        return self.pruned or get_spec(self.transform).rows < 8


@dataclass(frozen=True)
class ImageMetrics:
    psnr: float  # dB, inf for identical images
    nz: float  # percent of zero quantized coefficients
    energy_compaction: float


# --- quantization -----------------------------------------------------------

_TIE_EPS = 1e-9


def round_half_away(v) -> np.ndarray:
    """Round to nearest integer, ties away from zero.

    Values within floating noise of a .5 tie are treated as ties, so that
    algebraically equal quotients computed in different orders round alike.
    """
    v = np.asarray(v, dtype=float)
    twice = 2 * v
    near = np.rint(twice)
    snapped = np.where(np.abs(twice - near) <= _TIE_EPS * np.maximum(1.0, np.abs(twice)), near / 2, v)
    return (np.sign(snapped) * np.floor(np.abs(snapped) + 0.5)).astype(np.int64)


def quantize_scaled(coeffs, steps) -> np.ndarray:
    """Quantize orthonormal (scaled) coefficients by the base steps."""
    return round_half_away(np.asarray(coeffs) / steps)


def quantize_merged(int_coeffs, merged_steps) -> np.ndarray:
    """Quantize unscaled integer coefficients by a merged table."""
    return round_half_away(np.asarray(int_coeffs) / merged_steps)


# --- block and image pipeline -----------------------------------------------


def _pad(q: np.ndarray, n: int) -> np.ndarray:
    if q.shape[-1] == 8:
        return q
    out = np.zeros(q.shape[:-2] + (8, 8), dtype=q.dtype)
    out[..., :n, :n] = q
    return out


def compress_blocks(blocks, cfg: CodecConfig) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized block pipeline.  Returns (quantized (N,8,8) ints, reconstructed (N,8,8) uint8)."""
    spec = cfg.forward_spec()
    n = spec.rows
    blocks = np.asarray(blocks)
    x = blocks.astype(np.int64) - (128 if cfg.level_shift else 0)
    if spec.multiplierless:
        quant = quantize_merged(zonal2d.forward_2d_batch(spec, x), cfg.quant.merged(spec))
    else:
        coeffs = zonal2d.forward_2d_batch(spec, x, scaled=True)
        quant = quantize_scaled(coeffs, cfg.quant.steps[:n, :n])
    quant = _pad(quant, n)
    if cfg.pruned:
        quant[:, 4:, :] = 0
        quant[:, :, 4:] = 0
    full = get_spec(spec.parent) if spec.parent else spec
    rec = zonal2d.inverse_2d_batch(full, quant * cfg.quant.steps, scaled=True)
    if cfg.level_shift:
        rec = rec + 128
    rec = np.clip(np.rint(rec), 0, 255).astype(np.uint8)
    return quant, rec


def compress_block(a, cfg: CodecConfig) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a)
    if a.shape != (8, 8):
        raise ValueError(f"expected an 8x8 block, got {a.shape}")
    if a.min() < 0 or a.max() > 255:
        raise ValueError("block samples must lie in [0, 255]")
    q, rec = compress_blocks(a[None], cfg)
    return q[0], rec[0]


def psnr(original, reconstructed) -> float:
    diff = np.asarray(original, dtype=float) - np.asarray(reconstructed, dtype=float)
    mse = float(np.mean(diff * diff))
    if mse == 0:
        return math.inf
    return 10 * math.log10(255.0**2 / mse)


def pad_to_blocks(pixels: np.ndarray) -> np.ndarray:
    h, w = pixels.shape
    return np.pad(pixels, ((0, -h % 8), (0, -w % 8)), mode="edge")


def _as_pixels(img) -> np.ndarray:
    if isinstance(img, GrayImage):
        return img.pixels
    p = np.asarray(img)
    if p.size == 0 or p.ndim != 2:
        raise ValueError(f"expected a nonempty 2-D grayscale image, got shape {p.shape}")
    if p.dtype != np.uint8:
        raise ValueError(f"expected 8-bit samples, got dtype {p.dtype}")
    return p


def compress_image(img, cfg: CodecConfig) -> tuple[GrayImage, ImageMetrics]:
    """Compress an 8-bit grayscale image block by block.

    Edges are replicated up to a multiple of 8; PSNR is measured on the
    original extent, NZ over every quantized position of every block.
    """
    pixels = _as_pixels(img)
    h, w = pixels.shape
    padded = pad_to_blocks(pixels)
    quant, rec = compress_blocks(zonal2d.image_blocks(padded), cfg)
    out = zonal2d.merge_blocks(rec, *padded.shape)[:h, :w]
    nz = 100.0 * np.count_nonzero(quant == 0) / quant.size
    try:
        ec = zonal2d.image_energy_compaction(padded).weighted
    except zonal2d.ZeroEnergyError:
        ec = math.nan
    return GrayImage(np.ascontiguousarray(out)), ImageMetrics(psnr(pixels, out), nz, ec)


# --- corpus -----------------------------------------------------------------


@dataclass(frozen=True)
class CorpusRow:
    transform: str
    pruned: bool
    image: str
    metrics: ImageMetrics

    def csv(self) -> str:
        m = self.metrics
        return (f"{self.transform},{str(self.pruned).lower()},{self.image},"
                f"{m.psnr:.4f},{m.nz:.4f},{m.energy_compaction:.4f}")


def default_configs(transforms: Sequence[str] = ("dct", "sdct", "rdct", "modified-rdct")) -> list[CodecConfig]:
    return [CodecConfig(t, pruned=p) for t in transforms for p in (False, True)]


def corpus_rows(images: dict, configs: Iterable[CodecConfig]) -> list[CorpusRow]:
    """Per-image metrics, sorted by (image, transform, pruned)."""
    if not images:
        raise ValueError("corpus is empty")
    configs = list(configs)
    rows = []
    for name in sorted(images):
        for cfg in configs:
            _, m = compress_image(images[name], cfg)
            rows.append(CorpusRow(cfg.full_name, cfg.is_pruned, name, m))
    rows.sort(key=lambda r: (r.image, r.transform, r.pruned))
    return rows


def average_rows(rows: Sequence[CorpusRow]) -> list[CorpusRow]:
    """Arithmetic mean of each metric per (transform, pruned), image = 'average'."""
    groups: dict[tuple[str, bool], list[ImageMetrics]] = {}
    for r in rows:
        groups.setdefault((r.transform, r.pruned), []).append(r.metrics)
    out = []
    for (t, p), ms in sorted(groups.items()):
        out.append(CorpusRow(t, p, "average", ImageMetrics(
            float(np.mean([m.psnr for m in ms])),
            float(np.mean([m.nz for m in ms])),
            float(np.mean([m.energy_compaction for m in ms])),
        )))
    return out


def corpus_average(images: dict, configs: Iterable[CodecConfig]) -> dict[tuple[str, bool], ImageMetrics]:
    """Averaged result per configuration: {(transform, pruned): averaged metrics}."""
    return {(r.transform, r.pruned): r.metrics for r in average_rows(corpus_rows(images, configs))}
