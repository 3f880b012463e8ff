import numpy as np
import pytest

from wxbench.raster import GroundTruthMask, ImageBuffer, save_png
from wxbench.synth.noise import value_noise


def make_photo_image(height: int, width: int, seed: int) -> ImageBuffer:
    """Synthetic photographic stand-in: smooth shading plus blocky detail."""
    base = value_noise(height, width, max(8, min(height, width) // 3), seed)
    detail = value_noise(height, width, 5, seed + 1)
    grad = np.linspace(0.2, 0.8, width)[np.newaxis, :]
    channels = []
    for shift in (0.0, 0.12, 0.24):
        plane = 0.5 * base + 0.3 * detail + 0.2 * grad + shift * (base - 0.5)
        channels.append(np.clip(plane, 0.0, 1.0))
    rgb = np.stack(channels, axis=-1)
    return ImageBuffer(np.rint(rgb * 255.0).astype(np.uint8))


def make_blob_mask(height: int, width: int, seed: int) -> GroundTruthMask:
    """Binary mask with one elliptical foreground blob."""
    rng = np.random.default_rng(seed)
    cy = rng.uniform(0.3, 0.7) * height
    cx = rng.uniform(0.3, 0.7) * width
    ry = rng.uniform(0.12, 0.3) * height
    rx = rng.uniform(0.12, 0.3) * width
    ys = np.arange(height)[:, None]
    xs = np.arange(width)[None, :]
    inside = ((ys - cy) / ry) ** 2 + ((xs - cx) / rx) ** 2 <= 1.0
    return GroundTruthMask(np.where(inside, 255, 0).astype(np.uint8))


def write_corpus(base_dir, count: int, height: int = 48, width: int = 64, seed: int = 0):
    """Materialize a toy clean corpus; returns (image_dir, mask_dir, ids)."""
    image_dir = base_dir / "images"
    mask_dir = base_dir / "masks"
    ids = []
    for i in range(count):
        sample_id = f"img{i:03d}"
        save_png(make_photo_image(height, width, seed + 7 * i), image_dir / f"{sample_id}.png")
        save_png(make_blob_mask(height, width, seed + 7 * i + 3), mask_dir / f"{sample_id}.png")
        ids.append(sample_id)
    return image_dir, mask_dir, ids


@pytest.fixture
def photo_image():
    return make_photo_image(64, 80, seed=11)


@pytest.fixture
def blob_mask():
    return make_blob_mask(64, 80, seed=12)
