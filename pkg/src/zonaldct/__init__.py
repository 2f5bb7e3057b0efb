"""Pruned multiplierless 8-point DCT approximation, zonal 2-D transforms and
a JPEG-like compression benchmark."""

from .codec import CodecConfig, ImageMetrics, QuantTable, compress_block, compress_image, corpus_average
from .imageio import GrayImage, read_pgm, synth_image, write_pgm
from .kernels import (
    OpCount,
    TransformSpec,
    build_exact_dct,
    build_modified_rdct,
    build_pruned_T,
    build_rdct,
    build_sdct,
    direct_apply,
    fast_forward_exact,
    fast_forward_modified_rdct,
    fast_forward_pruned,
    get_spec,
)
from .opbench import ComplexityRow, measure, savings_report
from .zonal2d import energy_compaction, forward_2d, inverse_2d

__version__ = "0.1.0"
