"""Raster types and lossless 8-bit PNG I/O.

Three kinds of rasters move through the toolkit: RGB input images,
binary ground-truth masks, and continuous saliency maps. All are 8-bit;
masks must be strictly binary (0 or 255) and anything else is rejected
as corrupt rather than silently thresholded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import MalformedPng, NonBinaryMask, NotFound

MIN_IMAGE_SIDE = 8


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.uint8)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class ImageBuffer:
    """RGB (or single-channel) 8-bit image, row-major, immutable."""

    data: np.ndarray  # (H, W, 3) or (H, W), uint8

    def __post_init__(self):
        object.__setattr__(self, "data", _freeze(self.data))
        if self.data.ndim not in (2, 3) or (self.data.ndim == 3 and self.data.shape[2] != 3):
            raise ValueError(f"expected (H, W) or (H, W, 3) array, got {self.data.shape}")
        if self.height < MIN_IMAGE_SIDE or self.width < MIN_IMAGE_SIDE:
            raise ValueError(f"image must be at least {MIN_IMAGE_SIDE}x{MIN_IMAGE_SIDE}")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return 1 if self.data.ndim == 2 else 3

    def __eq__(self, other):
        return isinstance(other, ImageBuffer) and np.array_equal(self.data, other.data)


@dataclass(frozen=True)
class GroundTruthMask:
    """Binary mask; every sample is 0 or 255."""

    data: np.ndarray  # (H, W), uint8

    def __post_init__(self):
        object.__setattr__(self, "data", _freeze(self.data))
        if self.data.ndim != 2:
            raise ValueError(f"mask must be single-channel, got shape {self.data.shape}")
        bad = (self.data != 0) & (self.data != 255)
        if bad.any():
            raise NonBinaryMask(
                f"mask contains {int(bad.sum())} samples outside {{0, 255}}"
            )

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def foreground(self) -> np.ndarray:
        return self.data == 255

    def __eq__(self, other):
        return isinstance(other, GroundTruthMask) and np.array_equal(self.data, other.data)


@dataclass(frozen=True)
class SaliencyMap:
    """Continuous prediction stored as 8-bit samples (value/255 in [0,1])."""

    data: np.ndarray  # (H, W), uint8

    def __post_init__(self):
        object.__setattr__(self, "data", _freeze(self.data))
        if self.data.ndim != 2:
            raise ValueError(f"saliency map must be single-channel, got {self.data.shape}")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def as_unit_float(self) -> np.ndarray:
        return self.data.astype(np.float64) / 255.0

    def __eq__(self, other):
        return isinstance(other, SaliencyMap) and np.array_equal(self.data, other.data)


def _read_png_array(path: str | os.PathLike) -> np.ndarray:
    path = Path(path)
    if not path.is_file():
        raise NotFound(f"no such file: {path}")
    try:
        with Image.open(path) as im:
            if im.format != "PNG":
                raise MalformedPng(f"{path}: not a PNG file (format={im.format})")
            if im.mode not in ("L", "RGB"):
                raise MalformedPng(
                    f"{path}: unsupported mode {im.mode}; expected 8-bit L or RGB"
                )
            return np.asarray(im)
    except UnidentifiedImageError as exc:
        raise MalformedPng(f"{path}: {exc}") from exc


def load_image(path: str | os.PathLike) -> ImageBuffer:
    return ImageBuffer(_read_png_array(path))


def load_mask(path: str | os.PathLike) -> GroundTruthMask:
    arr = _read_png_array(path)
    if arr.ndim != 2:
        raise MalformedPng(f"{path}: mask must be single-channel")
    return GroundTruthMask(arr)


def load_saliency(path: str | os.PathLike) -> SaliencyMap:
    arr = _read_png_array(path)
    if arr.ndim != 2:
        raise MalformedPng(f"{path}: saliency map must be single-channel")
    return SaliencyMap(arr)


def save_png(raster: ImageBuffer | GroundTruthMask | SaliencyMap, path: str | os.PathLike) -> None:
    """Write a raster as 8-bit PNG; round-trips losslessly through load_*."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(raster.data).save(path, format="PNG")
