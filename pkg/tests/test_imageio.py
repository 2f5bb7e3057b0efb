import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from zonaldct.codec import CodecConfig, compress_image
from zonaldct.imageio import (
    BadHeaderError,
    BadMagicError,
    BadMaxvalError,
    GrayImage,
    PGMError,
    TruncatedError,
    read_pgm,
    synth_image,
    write_pgm,
)

images = st.tuples(st.integers(1, 12), st.integers(1, 12)).flatmap(
    lambda hw: arrays(np.uint8, hw).map(GrayImage))


def test_one_pixel():
    data = write_pgm(GrayImage(np.zeros((1, 1), dtype=np.uint8)))
    assert data == b"P5\n1 1\n255\n\x00"


@given(images)
def test_round_trip(img):
    back = read_pgm(write_pgm(img))
    assert back == img
    assert back.samples == img.samples
    assert (back.width, back.height) == (img.width, img.height)


comment = st.text(alphabet=st.characters(blacklist_characters="\r\n", codec="latin-1"), max_size=10)
sep = st.lists(st.sampled_from([" ", "\t", "\n", "\r\n"]), min_size=1, max_size=3).map("".join)


@given(images, st.lists(comment, min_size=3, max_size=3), st.lists(sep, min_size=3, max_size=3))
def test_comments_and_whitespace(img, comments, seps):
    # differential oracle: a decorated header must parse like the plain one
    fields = [str(img.width), str(img.height), "255"]
    header = "P5"
    for c, s, f in zip(comments, seps, fields):
        header += f"{s}#{c}\n{f}"
    data = header.encode("latin-1") + b"\n" + img.samples
    assert read_pgm(data) == read_pgm(write_pgm(img))


@pytest.mark.parametrize("data,exc,offset", [
    (b"P6\n1 1\n255\n\x00", BadMagicError, 0),
    (b"P5\n1 1\n256\n\x00", BadMaxvalError, 7),
    (b"P5\n1 1\n65535\n\x00\x00", BadMaxvalError, 7),
    (b"P5\n2 2\n255\n\x00\x00\x00", TruncatedError, 14),
    (b"P5\n2 2", TruncatedError, 6),
    (b"P5\nx 2\n255\n", BadHeaderError, 3),
    (b"P5\n0 2\n255\n", BadHeaderError, 3),
    (b"P5\n1 1\n255x\x00", BadHeaderError, 10),
    (b"P5\n1 1\n10\n\x0b", BadMaxvalError, 10),
])
def test_errors(data, exc, offset):
    with pytest.raises(exc) as info:
        read_pgm(data)
    assert info.value.offset == offset
    assert isinstance(info.value, PGMError)


def test_extra_trailing_bytes_ignored():
    img = read_pgm(b"P5\n1 2\n255\n\x01\x02\x03")
    assert img.pixels.tolist() == [[1], [2]]


@given(st.binary(max_size=40))
def test_fuzz_never_crashes(data):
    try:
        img = read_pgm(b"P5" + data)
    except PGMError:
        return
    assert img.pixels.size == img.width * img.height


def test_gray_image_validation():
    with pytest.raises(ValueError):
        GrayImage(np.zeros((0, 3), dtype=np.uint8))
    with pytest.raises(ValueError):
        GrayImage(np.zeros((2, 2), dtype=np.uint16))


def test_synth():
    assert np.all(synth_image("flat", 16, 8).pixels == 128)
    a = synth_image("noise", 16, 16, seed=3)
    assert a == synth_image("noise", 16, 16, seed=3)
    assert a != synth_image("noise", 16, 16, seed=4)
    g = synth_image("gradient", 16, 16).pixels
    assert g[0, 0] == 0 and g[-1, -1] == 255
    with pytest.raises(ValueError):
        synth_image("flat", 0, 8)
    with pytest.raises(ValueError):
        synth_image("spiral", 8, 8)


def test_checker_pruned_nz():
    img = synth_image("checker", 64, 64)
    _, m = compress_image(img, CodecConfig("modified-rdct", pruned=True))
    assert m.nz >= 75.0
