"""Arithmetic-operation accounting for 1-D and 2-D transforms, measured or tabulated."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from .kernels import OpCount, direct_schedule, get_spec, prune, run_counted
from .zonal2d import forward_2d

log = logging.getLogger(__name__)

MEASURED = "measured"
DIRECT_FORM = "direct-form"
REFERENCE = "reference"

CSV_HEADER = "method,dim,pruned,mult,add,shift,source"

PROPOSED = "modified-rdct"

# Published counts for fast algorithms this package does not implement.
# key: (method, dim, pruned) -> (mult, add, shift)
REFERENCE_COUNTS: dict[tuple[str, str, bool], tuple[int, int, int]] = {}


def _ref(method, row):
    for i, (dim, pruned) in enumerate([("1D", False), ("1D", True), ("2D", False), ("2D", True)]):
        REFERENCE_COUNTS[(method, dim, pruned)] = tuple(row[3 * i: 3 * i + 3])


_ref("dct-definition", (64, 56, 0, 32, 28, 0, 1024, 896, 0, 384, 336, 0))
_ref("chen", (16, 26, 0, 6, 12, 0, 256, 416, 0, 72, 144, 0))
_ref("sdct", (0, 24, 0, 0, 20, 0, 0, 384, 0, 0, 240, 0))
_ref("bas-2008", (0, 18, 2, 0, 14, 1, 0, 288, 32, 0, 168, 12))
_ref("bas-2009", (0, 18, 0, 0, 14, 0, 0, 288, 0, 0, 168, 0))
_ref("bas-2013", (0, 24, 0, 0, 20, 0, 0, 384, 0, 0, 240, 0))
_ref("rdct", (0, 22, 0, 0, 16, 0, 0, 352, 0, 0, 192, 0))
_ref("modified-rdct", (0, 14, 0, 0, 10, 0, 0, 224, 0, 0, 120, 0))

METHOD_ORDER = ["dct-definition", "chen", "sdct", "bas-2008", "bas-2009", "bas-2013", "rdct", "modified-rdct"]

# method -> (registry transform, use the fast schedule)
_MEASURABLE = {
    "dct-definition": ("dct", False),
    "chen": ("dct", True),
    "sdct": ("sdct", False),
    "rdct": ("rdct", False),
    "modified-rdct": ("modified-rdct", True),
}


@dataclass(frozen=True)
class ComplexityRow:
    method: str
    dim: str  # "1D" or "2D"
    pruned: bool
    mult: int
    add: int
    shift: int
    source: str

    @property
    def total(self) -> int:
        return self.mult + self.add + self.shift

    def csv(self) -> str:
        return (f"{self.method},{self.dim},{str(self.pruned).lower()},"
                f"{self.mult},{self.add},{self.shift},{self.source}")


def _measure_spec(spec, dim: str) -> OpCount:
    # any input works: no schedule branches on data
    if dim == "1D":
        return run_counted(spec.schedule or direct_schedule(spec), list(range(1, 9)))[1]
    return forward_2d(spec, np.arange(64).reshape(8, 8))[1]


def measure(method: str, dim: str = "1D", pruned: bool = False) -> ComplexityRow:
    """Count operations by running the transform on instrumented numbers.

    Methods with a fast schedule are labeled ``measured``; the rest are
    evaluated row by row from their matrix and labeled ``direct-form``.  A
    pruned measurement without a dedicated pruned schedule falls back to the
    direct form of the retained rows.
    """
    if dim not in ("1D", "2D"):
        raise ValueError(f"dim must be '1D' or '2D', got {dim!r}")
    if method not in _MEASURABLE:
        raise KeyError(f"no measurable transform for method {method!r}")
    name, fast = _MEASURABLE[method]
    spec = get_spec(name)
    if pruned:
        spec = prune(spec)
    if not fast:
        spec = replace(spec, schedule=None)
    source = MEASURED if spec.has_fast_schedule else DIRECT_FORM
    c = _measure_spec(spec, dim)
    return ComplexityRow(method, dim, pruned, c.mult, c.add, c.shift, source)


def reference_row(method: str, dim: str, pruned: bool) -> ComplexityRow:
    mult, add, shift = REFERENCE_COUNTS[(method, dim, pruned)]
    return ComplexityRow(method, dim, pruned, mult, add, shift, REFERENCE)


def complexity_table() -> list[ComplexityRow]:
    """Every (method, dim, pruned) cell: measured where a schedule exists, direct-form for
    matrices evaluated by definition, reference constants otherwise."""
    rows = []
    for method in METHOD_ORDER:
        for dim in ("1D", "2D"):
            for pruned in (False, True):
                got = None
                if method in _MEASURABLE:
                    m = measure(method, dim, pruned)
                    # a direct-form count of a fast-algorithm method is not its published figure
                    if m.source == MEASURED or method == "dct-definition":
                        got = m
                    else:
                        rows.append(m)
                rows.append(got or reference_row(method, dim, pruned))
    return rows


@dataclass(frozen=True)
class Saving:
    competitor: str
    dim: str
    competitor_pruned: bool
    competitor_ops: int
    proposed_ops: int

    @property
    def reduction_pct(self) -> float:
        return 100.0 * (self.competitor_ops - self.proposed_ops) / self.competitor_ops

    def csv(self) -> str:
        return (f"{self.competitor},{self.dim},{str(self.competitor_pruned).lower()},"
                f"{self.competitor_ops},{self.proposed_ops},{self.reduction_pct:.4f}")


SAVINGS_HEADER = "competitor,dim,competitor_pruned,competitor_ops,proposed_ops,reduction_pct"


def savings_report(baselines: dict | None = None) -> list[Saving]:
    """Percentage fewer operations (mult + add + shift) of the pruned proposal
    against every baseline, for both full and pruned baselines."""
    if baselines is None:
        baselines = REFERENCE_COUNTS
    out = []
    for dim in ("1D", "2D"):
        proposed = measure(PROPOSED, dim, pruned=True).total
        for method in METHOD_ORDER:
            for pruned in (False, True):
                counts = baselines.get((method, dim, pruned))
                if counts is None:
                    log.warning("no baseline for %s %s pruned=%s; row omitted", method, dim, pruned)
                    continue
                out.append(Saving(method, dim, pruned, sum(counts), proposed))
    return out
