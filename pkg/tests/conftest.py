from pathlib import Path

import numpy as np
import pytest

from gld_iqa.image import infer_bit_depth, load_raster, to_grayscale

DATA_DIR = Path(__file__).parent / "data" / "images"


@pytest.fixture(scope="session")
def bundled_paths():
    paths = sorted(DATA_DIR.glob("img*.png"))
    assert len(paths) == 10, "bundled image set is incomplete"
    return paths


@pytest.fixture(scope="session")
def bundled_fields(bundled_paths):
    fields = []
    for path in bundled_paths:
        raster = load_raster(path)
        fields.append(to_grayscale(raster, infer_bit_depth(raster)))
    return fields


@pytest.fixture
def rng():
    return np.random.default_rng(20240614)
