"""Binary PGM (Netpbm P5) reading/writing and synthetic test images."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class PGMError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BadMagicError(PGMError):
    pass


class BadHeaderError(PGMError):
    pass


class BadMaxvalError(PGMError):
    pass


class TruncatedError(PGMError):
    pass


@dataclass(frozen=True, eq=False)
class GrayImage:
    pixels: np.ndarray  # (height, width) uint8

    def __post_init__(self):
        p = np.asarray(self.pixels)
        if p.ndim != 2 or p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError(f"grayscale image needs a nonempty 2-D array, got shape {p.shape}")
        if p.dtype != np.uint8:
            raise ValueError(f"expected 8-bit samples, got dtype {p.dtype}")
        object.__setattr__(self, "pixels", p)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def samples(self) -> bytes:
        return self.pixels.tobytes()

    def __eq__(self, other):
        return isinstance(other, GrayImage) and np.array_equal(self.pixels, other.pixels)


_WS = b" \t\n\r\v\f"


def _header_tokens(data: bytes, count: int, pos: int) -> tuple[list[tuple[int, int]], int]:
    """Read ``count`` decimal header fields after the magic, skipping whitespace
    and '#' comments.  Returns [(value, offset)] and the position just past the
    single whitespace byte that terminates the last field."""
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and (data[pos] in _WS or data[pos] == ord("#")):
            if data[pos] == ord("#"):
                while pos < n and data[pos] not in b"\r\n":
                    pos += 1
            else:
                pos += 1
        if pos >= n:
            raise TruncatedError("header ends early", pos)
        start = pos
        while pos < n and data[pos] in b"0123456789":
            pos += 1
        if pos == start:
            raise BadHeaderError(f"expected a decimal number, found {data[pos:pos + 1]!r}", pos)
        tokens.append((int(data[start:pos]), start))
    if pos >= n:
        raise TruncatedError("missing whitespace after header", pos)
    if data[pos] not in _WS:
        raise BadHeaderError(f"expected whitespace after header, found {data[pos:pos + 1]!r}", pos)
    return tokens, pos + 1


def read_pgm(data: bytes) -> GrayImage:
    if data[:2] != b"P5":
        raise BadMagicError(f"not a binary PGM, magic is {data[:2]!r}", 0)
    fields, start = _header_tokens(data, 3, 2)
    (w, w_off), (h, h_off), (maxval, m_off) = fields
    if w < 1:
        raise BadHeaderError("width must be positive", w_off)
    if h < 1:
        raise BadHeaderError("height must be positive", h_off)
    if not 1 <= maxval <= 255:
        raise BadMaxvalError(f"maxval {maxval} not in 1..255", m_off)
    end = start + w * h
    if len(data) < end:
        raise TruncatedError(f"payload has {len(data) - start} of {w * h} bytes", len(data))
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=start).reshape(h, w)
    if pixels.max() > maxval:
        bad = int(np.argmax(pixels.ravel() > maxval))
        raise BadMaxvalError(f"sample {pixels.ravel()[bad]} exceeds maxval {maxval}", start + bad)
    return GrayImage(pixels.copy())


def write_pgm(img: GrayImage) -> bytes:
    return f"P5\n{img.width} {img.height}\n255\n".encode("ascii") + img.samples


def load_pgm(path) -> GrayImage:
    with open(path, "rb") as f:
        return read_pgm(f.read())


def save_pgm(img: GrayImage, path) -> None:
    with open(path, "wb") as f:
        f.write(write_pgm(img))


def synth_image(kind: str, w: int, h: int, seed: int = 0, value: int = 128, tile: int = 8) -> GrayImage:
    """Deterministic synthetic images: flat, gradient, checker or noise."""
    if w < 1 or h < 1:
        raise ValueError(f"image dimensions must be positive, got {w}x{h}")
    y, x = np.mgrid[0:h, 0:w]
    if kind == "flat":
        pixels = np.full((h, w), value)
    elif kind == "gradient":
        pixels = (x + y) * 255 // max(1, w + h - 2)
    elif kind == "checker":
        pixels = np.where(((x // tile) + (y // tile)) % 2, 255, 0)
    elif kind == "noise":
        pixels = np.random.default_rng(seed).integers(0, 256, size=(h, w))
    else:
        raise ValueError(f"unknown synthetic image kind {kind!r}")
    return GrayImage(pixels.astype(np.uint8))
