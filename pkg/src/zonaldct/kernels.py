"""Transform matrices, scaling diagonals and fast 1-D forward schedules.

Every fast schedule is written once, generically over the element type: it only
uses ``+``, ``-`` and ``*`` on the eight inputs.  Feeding it plain integers gives
exact results, feeding it numpy arrays evaluates a whole batch at once, and
feeding it :class:`Counted` values tallies the arithmetic actually performed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

TRANSPOSE_ORTHONORMAL = "transpose-orthonormal"
PSEUDO_INVERSE = "pseudo-inverse"


@dataclass(frozen=True)
class OpCount:
    mult: int = 0
    add: int = 0
    shift: int = 0

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(self.mult + other.mult, self.add + other.add, self.shift + other.shift)

    def __mul__(self, k: int) -> "OpCount":
        return OpCount(self.mult * k, self.add * k, self.shift * k)

    __rmul__ = __mul__

    @property
    def total(self) -> int:
        return self.mult + self.add + self.shift


class Tally:
    """Mutable per-invocation counter shared by a group of Counted values."""

    __slots__ = ("mult", "add", "shift")

    def __init__(self):
        self.mult = self.add = self.shift = 0

    def snapshot(self) -> OpCount:
        return OpCount(self.mult, self.add, self.shift)


class Counted:
    """A number that records each arithmetic operation into a Tally.

    Additions and subtractions cost one addition.  Multiplying by a constant
    costs one multiplication unless the constant is 0 or +-1 (sign flips are
    free wiring, the dashed arrows of a flow graph).  Shifts cost one shift.
    """

    __slots__ = ("value", "tally")

    def __init__(self, value, tally: Tally):
        self.value = value
        self.tally = tally

    def _unwrap(self, other):
        if isinstance(other, Counted):
            return other.value
        return other

    def __add__(self, other):
        self.tally.add += 1
        return Counted(self.value + self._unwrap(other), self.tally)

    __radd__ = __add__

    def __sub__(self, other):
        self.tally.add += 1
        return Counted(self.value - self._unwrap(other), self.tally)

    def __rsub__(self, other):
        self.tally.add += 1
        return Counted(self._unwrap(other) - self.value, self.tally)

    def __neg__(self):
        return Counted(-self.value, self.tally)

    def __mul__(self, other):
        k = self._unwrap(other)
        if isinstance(other, Counted) or k not in (0, 1, -1):
            self.tally.mult += 1
        return Counted(self.value * k, self.tally)

    __rmul__ = __mul__

    def __lshift__(self, n):
        self.tally.shift += 1
        return Counted(self.value << n, self.tally)

    def __rshift__(self, n):
        self.tally.shift += 1
        return Counted(self.value >> n, self.tally)

    def __repr__(self):
        return f"Counted({self.value!r})"


def run_counted(schedule: Callable, x: Sequence) -> tuple[list, OpCount]:
    """Evaluate ``schedule`` on ``x`` and return plain outputs plus the tally."""
    tally = Tally()
    out = schedule([Counted(v, tally) for v in x])
    values = [o.value if isinstance(o, Counted) else o for o in out]
    return values, tally.snapshot()


# --- fast schedules ---------------------------------------------------------


def pruned_schedule(x):
    """Four low-frequency outputs of the modified RDCT, 10 additions."""
    x0, x1, x2, x3, x4, x5, x6, x7 = x
    a = x0 + x7
    b = x1 + x6
    c = x2 + x5
    d = x3 + x4
    e = a + d
    return [e + b + c, x0 - x7, a - d, x5 - x2]


def modified_rdct_schedule(x):
    """All eight outputs of the modified RDCT, 14 additions."""
    x0, x1, x2, x3, x4, x5, x6, x7 = x
    a = x0 + x7
    b = x1 + x6
    c = x2 + x5
    d = x3 + x4
    e = a + d
    f = b + c
    return [e + f, x0 - x7, a - d, x5 - x2, e - f, x6 - x1, c - b, x4 - x3]


_HC = [math.cos(k * math.pi / 16) / 2 for k in range(8)]
_C4 = math.cos(math.pi / 4)


def chen_schedule(x):
    """Orthonormal 8-point DCT-II, 16 multiplications and 26 additions.

    Even half: butterflies then one 45-degree and one (2, 6) rotation.
    Odd half: a 45-degree rotation of the middle differences, butterflies
    with the outer ones, then (1, 7) and (3, 5) rotations.
    """
    x0, x1, x2, x3, x4, x5, x6, x7 = x
    s0, s1, s2, s3 = x0 + x7, x1 + x6, x2 + x5, x3 + x4
    o0, o1, o2, o3 = x0 - x7, x1 - x6, x2 - x5, x3 - x4

    e0, e1 = s0 + s3, s1 + s2
    g0, g1 = s0 - s3, s1 - s2
    X0 = (e0 + e1) * _HC[4]
    X4 = (e0 - e1) * _HC[4]
    X2 = g0 * _HC[2] + g1 * _HC[6]
    X6 = g0 * _HC[6] - g1 * _HC[2]

    m1 = (o1 + o2) * _C4
    m2 = (o1 - o2) * _C4
    u, up = o0 + m1, o0 - m1
    v, vp = o3 + m2, o3 - m2
    X1 = u * _HC[1] + v * _HC[7]
    X7 = u * _HC[7] - v * _HC[1]
    X3 = up * _HC[3] - vp * _HC[5]
    X5 = up * _HC[5] + vp * _HC[3]
    return [X0, X1, X2, X3, X4, X5, X6, X7]


# --- transform specs --------------------------------------------------------


@dataclass(frozen=True)
class TransformSpec:
    name: str
    matrix: tuple  # rows x 8 tuple of tuples, int or Fraction or float
    scaling: tuple
    inverse_kind: str = TRANSPOSE_ORTHONORMAL
    schedule: Optional[Callable] = field(default=None, compare=False, repr=False)
    parent: Optional[str] = None  # full transform a pruned spec was cut from

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def has_fast_schedule(self) -> bool:
        return self.schedule is not None

    @property
    def multiplierless(self) -> bool:
        return all(v in (-1, 0, 1) for row in self.matrix for v in row)

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.matrix])

    def scaled_array(self) -> np.ndarray:
        """The orthogonalized matrix D*T as floats."""
        return np.asarray(self.scaling)[:, None] * self.as_array()

    def inverse_matrix(self) -> np.ndarray:
        """Left inverse of D*T, shape 8 x rows."""
        c = self.scaled_array()
        if self.inverse_kind == TRANSPOSE_ORTHONORMAL:
            return c.T
        return np.linalg.pinv(c)


def _row_scaling(matrix) -> tuple:
    return tuple(1.0 / math.sqrt(sum(v * v for v in row)) for row in matrix)


PRUNED_ROWS = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 0, 0, 0, 0, 0, 0, -1),
    (1, 0, 0, -1, -1, 0, 0, 1),
    (0, 0, -1, 0, 0, 1, 0, 0),
)

MODIFIED_RDCT_ROWS = PRUNED_ROWS + (
    (1, -1, -1, 1, 1, -1, -1, 1),
    (0, -1, 0, 0, 0, 0, 1, 0),
    (0, -1, 1, 0, 0, 1, -1, 0),
    (0, 0, 0, -1, 1, 0, 0, 0),
)


def build_pruned_T() -> TransformSpec:
    scaling = (1 / math.sqrt(8), 1 / math.sqrt(2), 0.5, 1 / math.sqrt(2))
    return TransformSpec("pruned", PRUNED_ROWS, scaling, schedule=pruned_schedule,
                         parent="modified-rdct")


def build_modified_rdct() -> TransformSpec:
    return TransformSpec("modified-rdct", MODIFIED_RDCT_ROWS, _row_scaling(MODIFIED_RDCT_ROWS),
                         schedule=modified_rdct_schedule)


def dct_matrix(n: int = 8) -> np.ndarray:
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    c = np.sqrt(2.0 / n) * np.cos((2 * j + 1) * k * np.pi / (2 * n))
    c[0] /= np.sqrt(2.0)
    return c


def build_exact_dct() -> TransformSpec:
    matrix = tuple(tuple(float(v) for v in row) for row in dct_matrix())
    return TransformSpec("dct", matrix, (1.0,) * 8, schedule=chen_schedule)


def build_sdct() -> TransformSpec:
    matrix = tuple(tuple(int(v) for v in row) for row in np.sign(dct_matrix()))
    return TransformSpec("sdct", matrix, _row_scaling(matrix), inverse_kind=PSEUDO_INVERSE)


def build_rdct() -> TransformSpec:
    matrix = tuple(tuple(int(v) for v in row) for row in np.round(2 * dct_matrix()))
    return TransformSpec("rdct", matrix, _row_scaling(matrix))


def prune(spec: TransformSpec, rows: int = 4) -> TransformSpec:
    """Keep the ``rows`` lowest-frequency rows of a full transform."""
    if spec.name == "modified-rdct" and rows == 4:
        return build_pruned_T()
    return TransformSpec(f"{spec.name}-pruned", spec.matrix[:rows], spec.scaling[:rows],
                         inverse_kind=spec.inverse_kind, parent=spec.name)


REGISTRY: dict[str, Callable[[], TransformSpec]] = {
    "pruned": build_pruned_T,
    "modified-rdct": build_modified_rdct,
    "dct": build_exact_dct,
    "sdct": build_sdct,
    "rdct": build_rdct,
}


def get_spec(name: str) -> TransformSpec:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown transform {name!r}; known: {', '.join(REGISTRY)}") from None


# --- application ------------------------------------------------------------


def direct_apply(spec: TransformSpec, x: Sequence) -> list:
    """Plain matrix-vector product with the unscaled matrix (exact for integer input)."""
    if len(x) != 8:
        raise ValueError(f"expected 8 samples, got {len(x)}")
    return [sum(t * v for t, v in zip(row, x) if t != 0) for row in spec.matrix]


def direct_schedule(spec: TransformSpec) -> Callable:
    """Direct-form evaluation as a schedule: one product per nonzero entry and
    (nonzero entries - 1) additions per row."""

    def schedule(x):
        out = []
        for row in spec.matrix:
            terms = [v * t for t, v in zip(row, x) if t != 0]
            acc = terms[0] if terms else 0
            for term in terms[1:]:
                acc = acc + term
            out.append(acc)
        return out

    return schedule


def _check_len(x):
    if len(x) != 8:
        raise ValueError(f"expected 8 samples, got {len(x)}")


def fast_forward_pruned(x: Sequence) -> tuple[list, OpCount]:
    _check_len(x)
    return run_counted(pruned_schedule, x)


def fast_forward_modified_rdct(x: Sequence) -> tuple[list, OpCount]:
    _check_len(x)
    return run_counted(modified_rdct_schedule, x)


def fast_forward_exact(x: Sequence) -> tuple[list, OpCount]:
    _check_len(x)
    return run_counted(chen_schedule, x)


def forward_1d(spec: TransformSpec, x: Sequence) -> tuple[list, OpCount]:
    """Unscaled 1-D forward transform, through the fast schedule when one exists."""
    _check_len(x)
    return run_counted(spec.schedule or direct_schedule(spec), x)


def exact_matrix(spec: TransformSpec) -> list[list[Fraction]]:
    """The matrix as Fractions, for exact Gram checks on integer transforms."""
    return [[Fraction(v) for v in row] for row in spec.matrix]
