"""Shared toy-data helpers for the demo scripts."""

import numpy as np

from wxbench.raster import GroundTruthMask, ImageBuffer, save_png
from wxbench.synth.noise import value_noise


def toy_image(height=96, width=128, seed=0) -> ImageBuffer:
    """A photographic stand-in: smooth shading, a gradient, fine detail."""
    base = value_noise(height, width, 24, seed)
    detail = value_noise(height, width, 5, seed + 1)
    grad = np.linspace(0.25, 0.75, width)[np.newaxis, :]
    channels = []
    for shift in (0.0, 0.1, 0.2):
        plane = 0.45 * base + 0.3 * detail + 0.25 * grad + shift * (base - 0.5)
        channels.append(np.clip(plane, 0, 1))
    return ImageBuffer(np.rint(np.stack(channels, -1) * 255).astype(np.uint8))


def toy_mask(height=96, width=128, seed=0) -> GroundTruthMask:
    rng = np.random.default_rng(seed)
    cy, cx = rng.uniform(0.35, 0.65) * height, rng.uniform(0.35, 0.65) * width
    ry, rx = rng.uniform(0.15, 0.3) * height, rng.uniform(0.15, 0.3) * width
    ys, xs = np.arange(height)[:, None], np.arange(width)[None, :]
    inside = ((ys - cy) / ry) ** 2 + ((xs - cx) / rx) ** 2 <= 1.0
    return GroundTruthMask(np.where(inside, 255, 0).astype(np.uint8))


def write_toy_corpus(base_dir, count=20, height=96, width=128, seed=0):
    image_dir = base_dir / "images"
    mask_dir = base_dir / "masks"
    for i in range(count):
        save_png(toy_image(height, width, seed + 3 * i), image_dir / f"img{i:03d}.png")
        save_png(toy_mask(height, width, seed + 3 * i + 1), mask_dir / f"img{i:03d}.png")
    return image_dir, mask_dir
