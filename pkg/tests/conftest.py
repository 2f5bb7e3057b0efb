import numpy as np
import pytest

from zonaldct.imageio import GrayImage, save_pgm

NATURAL = ("camera", "astronaut", "moon")
# every 512x512 image bundled with scikit-image
STANDARD = ("camera", "astronaut", "moon", "brick", "grass", "gravel", "immunohistochemistry")


def _gray(name: str) -> np.ndarray:
    pytest.importorskip("skimage")
    from skimage import color, data

    im = getattr(data, name)()
    if im.ndim == 3:
        im = np.round(color.rgb2gray(im[..., :3]) * 255)
    return np.asarray(im, dtype=np.uint8)


@pytest.fixture(scope="session")
def standard_images() -> dict:
    return {name: GrayImage(_gray(name)) for name in STANDARD}


@pytest.fixture(scope="session")
def natural_images(standard_images) -> dict:
    return {name: standard_images[name] for name in NATURAL}


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory, standard_images):
    d = tmp_path_factory.mktemp("corpus")
    for name, img in standard_images.items():
        save_pgm(img, d / f"{name}.pgm")
    return d
