"""Raster types and PNG round-trips."""

import numpy as np
import pytest

from wxbench.errors import MalformedPng, NonBinaryMask, NotFound
from wxbench.raster import (
    GroundTruthMask,
    ImageBuffer,
    SaliencyMap,
    load_image,
    load_mask,
    load_saliency,
    save_png,
)


def test_all_zero_mask_loads(tmp_path):
    path = tmp_path / "mask.png"
    save_png(GroundTruthMask(np.zeros((4, 4), dtype=np.uint8)), path)
    mask = load_mask(path)
    assert mask.data.shape == (4, 4)
    assert (mask.data == 0).all()


def test_nonbinary_mask_rejected(tmp_path):
    path = tmp_path / "bad.png"
    arr = np.zeros((4, 4), dtype=np.uint8)
    arr[1, 2] = 7
    save_png(SaliencyMap(arr), path)
    with pytest.raises(NonBinaryMask):
        load_mask(path)


def test_saliency_roundtrip_random(tmp_path):
    rng = np.random.default_rng(0)
    for i in range(25):
        h, w = int(rng.integers(1, 40)), int(rng.integers(1, 40))
        arr = rng.integers(0, 256, (h, w)).astype(np.uint8)
        path = tmp_path / f"m{i}.png"
        save_png(SaliencyMap(arr), path)
        assert np.array_equal(load_saliency(path).data, arr)


def test_image_roundtrip_rgb(tmp_path):
    rng = np.random.default_rng(1)
    arr = rng.integers(0, 256, (16, 24, 3)).astype(np.uint8)
    path = tmp_path / "img.png"
    save_png(ImageBuffer(arr), path)
    loaded = load_image(path)
    assert loaded.channels == 3
    assert np.array_equal(loaded.data, arr)


def test_mask_roundtrip(tmp_path):
    rng = np.random.default_rng(2)
    arr = np.where(rng.random((20, 20)) < 0.5, 255, 0).astype(np.uint8)
    path = tmp_path / "gt.png"
    save_png(GroundTruthMask(arr), path)
    assert np.array_equal(load_mask(path).data, arr)


def test_missing_file(tmp_path):
    with pytest.raises(NotFound):
        load_image(tmp_path / "nope.png")


def test_non_png_rejected(tmp_path):
    path = tmp_path / "fake.png"
    path.write_bytes(b"definitely not a png")
    with pytest.raises(MalformedPng):
        load_image(path)


def test_rgba_rejected(tmp_path):
    from PIL import Image

    path = tmp_path / "rgba.png"
    Image.new("RGBA", (10, 10)).save(path)
    with pytest.raises(MalformedPng):
        load_image(path)


def test_image_minimum_size():
    with pytest.raises(ValueError):
        ImageBuffer(np.zeros((4, 4, 3), dtype=np.uint8))


def test_image_invariant_data_matches_dims():
    img = ImageBuffer(np.zeros((8, 9, 3), dtype=np.uint8))
    assert img.data.size == img.width * img.height * img.channels
    assert (img.width, img.height, img.channels) == (9, 8, 3)


def test_rasters_are_immutable(photo_image):
    with pytest.raises(ValueError):
        photo_image.data[0, 0, 0] = 1
