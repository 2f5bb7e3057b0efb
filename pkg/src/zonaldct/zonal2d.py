"""Separable 2-D block transforms, zonal (pruned) variants and energy compaction.

Forward passes run the 1-D schedule over the 8 columns first and then over the
``spec.rows`` rows of the intermediate result, so a pruned 4-row transform costs
8 + 4 one-dimensional invocations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import (
    OpCount,
    TransformSpec,
    build_modified_rdct,
    direct_schedule,
    forward_1d,
    get_spec,
)


class ZeroEnergyError(ValueError):
    """Energy compaction is undefined for a block with no energy."""


def _check_block(a, shape=(8, 8)):
    a = np.asarray(a)
    if a.shape != shape:
        raise ValueError(f"expected block of shape {shape}, got {a.shape}")
    return a


def scale_outer(spec: TransformSpec) -> np.ndarray:
    d = np.asarray(spec.scaling, dtype=float)
    return np.outer(d, d)


def forward_2d(spec: TransformSpec, a, scaled: bool = False) -> tuple[np.ndarray, OpCount]:
    """T A T^T (or D T A T^T D when ``scaled``) for one 8x8 block, with exact op counts."""
    a = _check_block(a)
    count = OpCount()
    cols = []
    for j in range(8):
        out, c = forward_1d(spec, a[:, j].tolist())
        cols.append(out)
        count += c
    tmp = np.array(cols, dtype=object).T  # rows x 8
    result = []
    for i in range(spec.rows):
        out, c = forward_1d(spec, tmp[i, :].tolist())
        result.append(out)
        count += c
    b = np.array(result)
    if b.dtype == object:
        b = b.astype(float)
    if scaled:
        b = b * scale_outer(spec)
    return b, count


def _batch_pass(schedule, x: np.ndarray) -> np.ndarray:
    # transform along axis 1 of an (N, 8, M) stack
    out = schedule([x[:, k, :] for k in range(8)])
    return np.stack(out, axis=1)


def forward_2d_batch(spec: TransformSpec, blocks, scaled: bool = False) -> np.ndarray:
    """Vectorized forward transform of an (N, 8, 8) stack of blocks."""
    blocks = np.asarray(blocks)
    if blocks.ndim != 3 or blocks.shape[1:] != (8, 8):
        raise ValueError(f"expected (N, 8, 8) blocks, got {blocks.shape}")
    # unsigned pixels would wrap on subtraction
    blocks = blocks.astype(np.int64 if np.issubdtype(blocks.dtype, np.integer) else float)
    schedule = spec.schedule or direct_schedule(spec)
    tmp = _batch_pass(schedule, blocks)  # (N, rows, 8): columns transformed
    b = _batch_pass(schedule, tmp.transpose(0, 2, 1)).transpose(0, 2, 1)
    if scaled:
        b = b * scale_outer(spec)
    return b


def synthesis_matrix(spec: TransformSpec) -> np.ndarray:
    """8 x rows matrix S with A = S B S^T for scaled coefficients B.

    A pruned spec reuses the first columns of its parent's full inverse, which
    is the same as zero-padding B and inverting with the full transform.
    """
    if spec.parent is not None:
        return synthesis_matrix(get_spec(spec.parent))[:, : spec.rows]
    return spec.inverse_matrix()


def inverse_2d(spec: TransformSpec, b, scaled: bool = False) -> np.ndarray:
    b = _check_block(b, (spec.rows, spec.rows)).astype(float)
    if not scaled:
        b = b * scale_outer(spec)
    s = synthesis_matrix(spec)
    return s @ b @ s.T


def inverse_2d_batch(spec: TransformSpec, coeffs, scaled: bool = True) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape[1:] != (spec.rows, spec.rows):
        raise ValueError(f"expected (N, {spec.rows}, {spec.rows}) coefficients, got {coeffs.shape}")
    if not scaled:
        coeffs = coeffs * scale_outer(spec)
    s = synthesis_matrix(spec)
    return np.einsum("ik,nkl,jl->nij", s, coeffs, s)


# --- energy compaction ------------------------------------------------------

ZONE = 4


def _low_and_total(blocks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    b = forward_2d_batch(build_modified_rdct(), blocks, scaled=True)
    energy = b * b
    return energy[:, :ZONE, :ZONE].sum(axis=(1, 2)), energy.sum(axis=(1, 2))


def energy_compaction(a) -> float:
    """Fraction of the scaled modified-RDCT energy of a block held by its
    4x4 low-frequency corner."""
    a = _check_block(a).astype(float)
    low, total = _low_and_total(a[None])
    if total[0] == 0:
        raise ZeroEnergyError("energy compaction undefined for an all-zero block")
    return float(min(1.0, low[0] / total[0]))


@dataclass(frozen=True)
class CompactionReport:
    weighted: float  # total low-corner energy over total energy
    unweighted: float  # plain mean of per-block fractions
    blocks: int


def image_blocks(pixels: np.ndarray) -> np.ndarray:
    """Split an (H, W) array with H, W multiples of 8 into (N, 8, 8) blocks, row-major."""
    h, w = pixels.shape
    if h % 8 or w % 8:
        raise ValueError(f"image size {w}x{h} is not a multiple of 8")
    return pixels.reshape(h // 8, 8, w // 8, 8).transpose(0, 2, 1, 3).reshape(-1, 8, 8)


def merge_blocks(blocks: np.ndarray, h: int, w: int) -> np.ndarray:
    return blocks.reshape(h // 8, w // 8, 8, 8).transpose(0, 2, 1, 3).reshape(h, w)


def image_energy_compaction(pixels) -> CompactionReport:
    """Energy compaction over every 8x8 block of an image.

    ``weighted`` weights each block's fraction by its energy, so flat dark
    blocks do not dominate; ``unweighted`` skips zero-energy blocks.
    """
    pixels = np.asarray(pixels, dtype=float)
    low, total = _low_and_total(image_blocks(pixels))
    if total.sum() == 0:
        raise ZeroEnergyError("energy compaction undefined for an all-zero image")
    nz = total > 0
    return CompactionReport(
        weighted=float(low.sum() / total.sum()),
        unweighted=float(np.mean(low[nz] / total[nz])),
        blocks=len(total),
    )
