"""Frozen per-level parameter tables for the procedural degradations.

The tables are compiled-in constants so goldens stay stable; `wxbench
synth --dump-params` prints them for documentation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class FogParams:
    density: float          # d in (0, 1]
    airlight: int = 240     # gray level blended toward
    noise_scale: int = 64   # low-frequency value-noise wavelength, pixels


@dataclass(frozen=True)
class RainParams:
    streak_count: float     # streaks per megapixel
    streak_length: int      # pixels
    alpha: float            # compositing opacity in (0, 1]
    angle_min: float = -20.0  # degrees from vertical
    angle_max: float = -10.0


@dataclass(frozen=True)
class SnowParams:
    flake_density: float    # flakes per megapixel
    alpha: float
    radius_min: float = 1.0
    radius_max: float = 3.0
    brightness_min: int = 230
    brightness_max: int = 255


@dataclass(frozen=True)
class ExposureParams:
    dark_gamma: float       # > 1 darkens
    over_gain: float        # > 1 brightens, then clamps


FOG_LEVELS: dict[int, FogParams] = {
    1: FogParams(density=0.30),
    2: FogParams(density=0.55),
    3: FogParams(density=0.80),
}

RAIN_LEVELS: dict[int, RainParams] = {
    1: RainParams(streak_count=150.0, streak_length=18, alpha=0.35),
    2: RainParams(streak_count=400.0, streak_length=26, alpha=0.50),
    3: RainParams(streak_count=900.0, streak_length=34, alpha=0.65),
}

SNOW_LEVELS: dict[int, SnowParams] = {
    1: SnowParams(flake_density=80.0, alpha=0.50),
    2: SnowParams(flake_density=200.0, alpha=0.65),
    3: SnowParams(flake_density=450.0, alpha=0.80),
}

EXPOSURE_LEVELS: dict[int, ExposureParams] = {
    1: ExposureParams(dark_gamma=1.8, over_gain=1.5),
    2: ExposureParams(dark_gamma=2.5, over_gain=2.0),
    3: ExposureParams(dark_gamma=3.2, over_gain=2.6),
}


def dump_tables() -> dict:
    """All parameter tables as plain JSON-serializable dicts."""
    return {
        "fog": {lvl: asdict(p) for lvl, p in FOG_LEVELS.items()},
        "rain": {lvl: asdict(p) for lvl, p in RAIN_LEVELS.items()},
        "snow": {lvl: asdict(p) for lvl, p in SNOW_LEVELS.items()},
        "exposure": {lvl: asdict(p) for lvl, p in EXPOSURE_LEVELS.items()},
    }
