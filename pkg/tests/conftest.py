import os

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis.extra.numpy import arrays

from impulse.imaging.image import GrayImage
from impulse.imaging.pgm import load_pgm

hypothesis.settings.register_profile("impulse", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "impulse"))


def images(min_side=3, max_side=6):
    """Strategy for random 8-bit images with sides in [min_side, max_side]."""
    shapes = st.tuples(
        st.integers(min_side, max_side), st.integers(min_side, max_side)
    )
    return shapes.flatmap(
        lambda shape: arrays(np.uint8, shape, elements=st.integers(0, 255))
    ).map(GrayImage)


def windows():
    return st.lists(st.integers(0, 255), min_size=9, max_size=9)


def portrait_like(size=96):
    """Smooth shaded surface with ridges and fine texture, 8-bit."""
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    surface = (
        110
        + 55 * np.sin(x / 9.0) * np.cos(y / 13.0)
        + 0.5 * (x - y)
        + 6 * np.sin(x * 1.3 + y * 0.7)
    )
    return GrayImage(np.clip(np.rint(surface), 0, 255).astype(np.uint8))


@pytest.fixture
def smooth_image():
    return portrait_like()


@pytest.fixture
def ramp_5x5():
    # pixel value = 10 * row + col
    return GrayImage.from_rows([[10 * r + c for c in range(5)] for r in range(5)])


@pytest.fixture
def center_spike():
    return GrayImage.from_flat(3, 3, [10, 20, 30, 40, 255, 60, 70, 80, 90])


@pytest.fixture
def lena():
    """Public 256x256 LENA named by IMPULSE_LENA; tests skip without it."""
    path = os.environ.get("IMPULSE_LENA")
    if not path or not os.path.isfile(path):
        pytest.skip("set IMPULSE_LENA to a 256x256 PGM to run reproduction checks")
    return load_pgm(path)
