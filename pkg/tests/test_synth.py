"""Procedural degradations: identities, goldens, determinism, severity."""

import math

import numpy as np
import pytest

from conftest import make_photo_image
from wxbench.raster import ImageBuffer
from wxbench.synth import (
    EXPOSURE_LEVELS,
    FOG_LEVELS,
    RAIN_LEVELS,
    SNOW_LEVELS,
    FogParams,
    RainParams,
    SnowParams,
    apply_dark,
    apply_fog,
    apply_overexposure,
    apply_rain,
    apply_snow,
    degrade,
    mixture_seed,
)
from wxbench.weather import LEVELS, NOISE_CLASSES, WeatherClass, WeatherSpec


def scalar_fog_oracle(image: ImageBuffer, params: FogParams, seed: int) -> np.ndarray:
    """Pure-scalar reimplementation of the fog formula, pixel by pixel."""
    rng = np.random.Generator(np.random.PCG64(seed))
    grid_h = image.height // params.noise_scale + 2
    grid_w = image.width // params.noise_scale + 2
    lattice = rng.random((grid_h, grid_w))
    out = np.zeros_like(image.data)
    for i in range(image.height):
        for j in range(image.width):
            yy = i / params.noise_scale
            xx = j / params.noise_scale
            y0 = math.floor(yy)
            x0 = math.floor(xx)
            ty = yy - y0
            tx = xx - x0
            sy = ty * ty * (3.0 - 2.0 * ty)
            sx = tx * tx * (3.0 - 2.0 * tx)
            v00 = lattice[y0, x0]
            v01 = lattice[y0, x0 + 1]
            v10 = lattice[y0 + 1, x0]
            v11 = lattice[y0 + 1, x0 + 1]
            top = v00 + sx * (v01 - v00)
            bottom = v10 + sx * (v11 - v10)
            noise = top + sy * (bottom - top)
            t = 1.0 - params.density * (0.3 + 0.7 * noise)
            for c in range(3):
                value = t * float(image.data[i, j, c]) + (1.0 - t) * float(params.airlight)
                out[i, j, c] = round(min(max(value, 0.0), 255.0))
    return out


def small_image(seed=5):
    rng = np.random.default_rng(seed)
    return ImageBuffer(rng.integers(0, 256, (8, 8, 3)).astype(np.uint8))


# ---------------------------------------------------------------- fog

def test_fog_density_zero_limit_is_identity():
    img = small_image()
    out = apply_fog(img, FogParams(density=0.0), seed=1)
    assert np.array_equal(out.data, img.data)


def test_fog_fixed_point_at_airlight():
    img = ImageBuffer(np.full((8, 8, 3), 240, dtype=np.uint8))
    for level, params in FOG_LEVELS.items():
        out = apply_fog(img, params, seed=3)
        assert (out.data == 240).all(), f"level {level}"


def test_fog_matches_scalar_oracle():
    img = small_image(seed=9)
    params = FogParams(density=0.8, noise_scale=4)
    golden = scalar_fog_oracle(img, params, seed=7)
    out = apply_fog(img, params, seed=7)
    assert np.array_equal(out.data, golden)


def test_fog_oracle_at_table_params():
    img = make_photo_image(40, 40, seed=2)
    out = apply_fog(img, FOG_LEVELS[3], seed=7)
    golden = scalar_fog_oracle(img, FOG_LEVELS[3], seed=7)
    assert np.array_equal(out.data, golden)


# ---------------------------------------------------------------- rain

def test_rain_alpha_zero_identity():
    img = small_image()
    params = RainParams(streak_count=400.0, streak_length=20, alpha=0.0)
    assert np.array_equal(apply_rain(img, params, seed=2).data, img.data)


def test_rain_zero_count_identity():
    img = small_image()
    params = RainParams(streak_count=0.0, streak_length=20, alpha=0.5)
    assert np.array_equal(apply_rain(img, params, seed=2).data, img.data)


def test_rain_deterministic():
    img = make_photo_image(64, 64, seed=1)
    params = RAIN_LEVELS[2]
    a = apply_rain(img, params, seed=11)
    b = apply_rain(img, params, seed=11)
    assert np.array_equal(a.data, b.data)
    c = apply_rain(img, params, seed=12)
    assert not np.array_equal(a.data, c.data)


# ---------------------------------------------------------------- snow

def test_snow_zero_density_identity():
    img = small_image()
    params = SnowParams(flake_density=0.0, alpha=0.5)
    assert np.array_equal(apply_snow(img, params, seed=4).data, img.data)


def test_snow_deterministic():
    img = make_photo_image(64, 64, seed=3)
    a = apply_snow(img, SNOW_LEVELS[2], seed=5)
    b = apply_snow(img, SNOW_LEVELS[2], seed=5)
    assert np.array_equal(a.data, b.data)


def test_snow_brightens_black_image():
    black = ImageBuffer(np.zeros((64, 64, 3), dtype=np.uint8))
    for level in LEVELS:
        out = apply_snow(black, SNOW_LEVELS[level], seed=level)
        assert out.data.mean() > 0.0, f"level {level}"


# ---------------------------------------------------------------- exposure

def test_dark_endpoints_fixed():
    img = ImageBuffer(np.array([[[0, 0, 0], [255, 255, 255]] * 4] * 8, dtype=np.uint8))
    out = apply_dark(img, EXPOSURE_LEVELS[2])
    assert set(np.unique(out.data)) == {0, 255}


def test_dark_formula_value():
    # oracle: round(255 * (128/255) ** 2.5) evaluated directly
    expected = round(255.0 * (128.0 / 255.0) ** 2.5)
    assert expected == 46
    img = ImageBuffer(np.full((8, 8, 3), 128, dtype=np.uint8))
    out = apply_dark(img, EXPOSURE_LEVELS[2])
    assert (out.data == expected).all()


def test_dark_gamma_one_identity():
    img = small_image()
    from wxbench.synth.params import ExposureParams

    out = apply_dark(img, ExposureParams(dark_gamma=1.0, over_gain=1.0))
    assert np.array_equal(out.data, img.data)


def test_overexposure_values():
    from wxbench.synth.params import ExposureParams

    img = small_image()
    assert np.array_equal(
        apply_overexposure(img, ExposureParams(dark_gamma=1.0, over_gain=1.0)).data, img.data
    )
    img200 = ImageBuffer(np.full((8, 8, 3), 200, dtype=np.uint8))
    out = apply_overexposure(img200, EXPOSURE_LEVELS[2])  # gain 2.0
    assert (out.data == 255).all()
    img100 = ImageBuffer(np.full((8, 8, 3), 100, dtype=np.uint8))
    out = apply_overexposure(img100, EXPOSURE_LEVELS[1])  # gain 1.5
    assert (out.data == 150).all()


# ---------------------------------------------------------------- degrade

def test_clean_is_identity(photo_image):
    out = degrade(photo_image, WeatherSpec.clean())
    assert np.array_equal(out.data, photo_image.data)


def test_mixed_composition_order(photo_image):
    spec = WeatherSpec(WeatherClass.FOG_RAIN, 2, seed=99)
    fogged = apply_fog(
        photo_image, FOG_LEVELS[2], mixture_seed(spec.seed, WeatherClass.FOG, 2)
    )
    expected = apply_rain(
        fogged, RAIN_LEVELS[2], mixture_seed(spec.seed, WeatherClass.RAIN, 2)
    )
    assert np.array_equal(degrade(photo_image, spec).data, expected.data)


def test_full_sweep_yields_25_distinct_outputs():
    img = make_photo_image(64, 64, seed=21)
    outputs = [degrade(img, WeatherSpec.clean()).data.tobytes()]
    for cls in NOISE_CLASSES:
        for level in LEVELS:
            spec = WeatherSpec(cls, level, seed=1234)
            outputs.append(degrade(img, spec).data.tobytes())
    assert len(outputs) == 25
    assert len(set(outputs)) == 25


def test_degrade_preserves_shape_and_determinism(photo_image):
    for cls in NOISE_CLASSES:
        spec = WeatherSpec(cls, 2, seed=7)
        a = degrade(photo_image, spec)
        b = degrade(photo_image, spec)
        assert a.data.shape == photo_image.data.shape
        assert np.array_equal(a.data, b.data)


def test_fog_severity_monotone_in_level():
    img = make_photo_image(96, 96, seed=8)
    base = img.data.astype(np.float64)
    deviations = []
    for level in LEVELS:
        out = apply_fog(img, FOG_LEVELS[level], seed=13)
        deviations.append(np.abs(out.data.astype(np.float64) - base).mean())
    assert deviations[0] <= deviations[1] <= deviations[2]


def test_dark_severity_monotone_in_level():
    img = make_photo_image(96, 96, seed=9)
    means = [apply_dark(img, EXPOSURE_LEVELS[level]).data.mean() for level in LEVELS]
    assert means[0] >= means[1] >= means[2]
