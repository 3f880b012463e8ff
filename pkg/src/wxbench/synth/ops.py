"""Procedural weather degradations.

All operations are pure functions of (image bytes, params, seed): output
dimensions equal the input's, only photometry changes (so paired masks
stay valid), and repeated calls are bytewise identical.
"""

from __future__ import annotations

import numpy as np

from ..raster import ImageBuffer
from ..seeding import derive_seed
from ..weather import MIXED_PARTS, WeatherClass, WeatherSpec
from .noise import value_noise
from .params import (
    EXPOSURE_LEVELS,
    FOG_LEVELS,
    RAIN_LEVELS,
    SNOW_LEVELS,
    ExposureParams,
    FogParams,
    RainParams,
    SnowParams,
)


def _to_uint8(arr: np.ndarray) -> np.ndarray:
    return np.rint(np.clip(arr, 0.0, 255.0)).astype(np.uint8)


def apply_fog(image: ImageBuffer, params: FogParams, seed: int) -> ImageBuffer:
    """Blend toward a flat airlight through a noisy transmission field.

    Per pixel: out = t * I + (1 - t) * A where
    t(x, y) = 1 - d * (0.3 + 0.7 * P(x, y)) and P is seeded
    low-frequency value noise in [0, 1].
    """
    field = value_noise(image.height, image.width, params.noise_scale, seed)
    t = 1.0 - params.density * (0.3 + 0.7 * field)
    if image.channels == 3:
        t = t[:, :, np.newaxis]
    out = t * image.data.astype(np.float64) + (1.0 - t) * float(params.airlight)
    return ImageBuffer(_to_uint8(out))


def _splat_segment(layer: np.ndarray, cx: float, cy: float, dx: float, dy: float, length: float) -> None:
    """Accumulate an anti-aliased segment into `layer` via bilinear splats."""
    h, w = layer.shape
    steps = max(2, int(np.ceil(length * 2.0)) + 1)
    for k in range(steps):
        f = k / (steps - 1) - 0.5
        px = cx + dx * length * f
        py = cy + dy * length * f
        x0 = int(np.floor(px))
        y0 = int(np.floor(py))
        fx = px - x0
        fy = py - y0
        for oy, wy in ((0, 1.0 - fy), (1, fy)):
            yy = y0 + oy
            if not 0 <= yy < h:
                continue
            for ox, wx in ((0, 1.0 - fx), (1, fx)):
                xx = x0 + ox
                if 0 <= xx < w:
                    layer[yy, xx] += 0.5 * wy * wx


def _shift(arr: np.ndarray, oy: int, ox: int) -> np.ndarray:
    """Shift with zero fill."""
    out = np.zeros_like(arr)
    h, w = arr.shape
    ys = slice(max(oy, 0), min(h + oy, h))
    xs = slice(max(ox, 0), min(w + ox, w))
    yd = slice(max(-oy, 0), min(h - oy, h))
    xd = slice(max(-ox, 0), min(w - ox, w))
    out[ys, xs] = arr[yd, xd]
    return out


def apply_rain(image: ImageBuffer, params: RainParams, seed: int) -> ImageBuffer:
    """Composite bright slanted streaks over the image.

    A seeded coverage layer of anti-aliased segments at one sampled angle
    is box-blurred along the streak direction, then alpha-composited.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    h, w = image.height, image.width
    count = int(round(params.streak_count * h * w / 1e6))
    angle = rng.uniform(params.angle_min, params.angle_max)
    if count == 0 or params.alpha == 0.0:
        return ImageBuffer(image.data.copy())

    rad = np.deg2rad(angle)
    dx = float(np.sin(rad))   # slight horizontal tilt
    dy = float(np.cos(rad))   # mostly downward
    layer = np.zeros((h, w), dtype=np.float64)
    for _ in range(count):
        cx = rng.uniform(0.0, w)
        cy = rng.uniform(0.0, h)
        _splat_segment(layer, cx, cy, dx, dy, float(params.streak_length))
    # 1-pixel box blur along the streak direction (rounded offsets).
    oy, ox = int(round(dy)), int(round(dx))
    layer = (_shift(layer, -oy, -ox) + layer + _shift(layer, oy, ox)) / 3.0
    coverage = np.clip(layer, 0.0, 1.0)

    luminance = rng.uniform(210.0, 250.0)
    a = params.alpha * coverage
    if image.channels == 3:
        a = a[:, :, np.newaxis]
    out = image.data.astype(np.float64) * (1.0 - a) + luminance * a
    return ImageBuffer(_to_uint8(out))


def apply_snow(image: ImageBuffer, params: SnowParams, seed: int) -> ImageBuffer:
    """Composite soft bright disks (flakes) over the image."""
    rng = np.random.Generator(np.random.PCG64(seed))
    h, w = image.height, image.width
    count = int(np.ceil(params.flake_density * h * w / 1e6)) if params.flake_density > 0 else 0
    if count == 0 or params.alpha == 0.0:
        return ImageBuffer(image.data.copy())

    out = image.data.astype(np.float64)
    for _ in range(count):
        cx = rng.uniform(0.0, w)
        cy = rng.uniform(0.0, h)
        radius = rng.uniform(params.radius_min, params.radius_max)
        brightness = rng.uniform(params.brightness_min, params.brightness_max)
        x0 = max(int(np.floor(cx - radius)) - 1, 0)
        x1 = min(int(np.ceil(cx + radius)) + 2, w)
        y0 = max(int(np.floor(cy - radius)) - 1, 0)
        y1 = min(int(np.ceil(cy + radius)) + 2, h)
        ys = np.arange(y0, y1, dtype=np.float64)
        xs = np.arange(x0, x1, dtype=np.float64)
        dist = np.sqrt((ys[:, None] - cy) ** 2 + (xs[None, :] - cx) ** 2)
        coverage = np.clip(radius - dist, 0.0, 1.0)
        a = params.alpha * coverage
        if image.channels == 3:
            a = a[:, :, np.newaxis]
        out[y0:y1, x0:x1] = out[y0:y1, x0:x1] * (1.0 - a) + brightness * a
    return ImageBuffer(_to_uint8(out))


def apply_dark(image: ImageBuffer, params: ExposureParams) -> ImageBuffer:
    """Gamma darkening: out = round(255 * (I/255) ** gamma). Pointwise, no seed."""
    lut = _to_uint8(255.0 * (np.arange(256, dtype=np.float64) / 255.0) ** params.dark_gamma)
    return ImageBuffer(lut[image.data])


def apply_overexposure(image: ImageBuffer, params: ExposureParams) -> ImageBuffer:
    """Gain brightening with clamp: out = min(255, round(k * I))."""
    lut = _to_uint8(params.over_gain * np.arange(256, dtype=np.float64))
    return ImageBuffer(lut[image.data])


def mixture_seed(spec_seed: int, part: WeatherClass, level: int) -> int:
    """Sub-seed for one constituent of a mixed degradation."""
    return derive_seed(spec_seed, "mix", part.value, level)


def _apply_single(image: ImageBuffer, cls: WeatherClass, level: int, seed: int) -> ImageBuffer:
    if cls is WeatherClass.FOG:
        return apply_fog(image, FOG_LEVELS[level], seed)
    if cls is WeatherClass.RAIN:
        return apply_rain(image, RAIN_LEVELS[level], seed)
    if cls is WeatherClass.SNOW:
        return apply_snow(image, SNOW_LEVELS[level], seed)
    if cls is WeatherClass.DARK:
        return apply_dark(image, EXPOSURE_LEVELS[level])
    if cls is WeatherClass.OVEREXPOSURE:
        return apply_overexposure(image, EXPOSURE_LEVELS[level])
    raise ValueError(f"not a single degradation class: {cls}")


def degrade(image: ImageBuffer, spec: WeatherSpec) -> ImageBuffer:
    """Apply the degradation a WeatherSpec describes.

    Clean is the identity. Mixed categories compose their two
    constituents in fixed order (fog under precipitation; rain before
    snow), both at the spec's level, with per-constituent sub-seeds
    derived from the spec seed.
    """
    if spec.category is WeatherClass.CLEAN:
        return image
    if spec.category in MIXED_PARTS:
        first, second = MIXED_PARTS[spec.category]
        out = _apply_single(image, first, spec.level, mixture_seed(spec.seed, first, spec.level))
        return _apply_single(out, second, spec.level, mixture_seed(spec.seed, second, spec.level))
    return _apply_single(image, spec.category, spec.level, spec.seed)
