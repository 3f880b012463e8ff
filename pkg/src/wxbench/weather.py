"""Weather categories and per-sample degradation specs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class WeatherClass(str, Enum):
    CLEAN = "clean"
    FOG = "fog"
    RAIN = "rain"
    SNOW = "snow"
    DARK = "dark"
    OVEREXPOSURE = "overexposure"
    FOG_RAIN = "fog_rain"
    FOG_SNOW = "fog_snow"
    RAIN_SNOW = "rain_snow"


# Canonical ordering; clean is index 0.
CLASS_ORDER: tuple[WeatherClass, ...] = (
    WeatherClass.CLEAN,
    WeatherClass.FOG,
    WeatherClass.RAIN,
    WeatherClass.SNOW,
    WeatherClass.DARK,
    WeatherClass.OVEREXPOSURE,
    WeatherClass.FOG_RAIN,
    WeatherClass.FOG_SNOW,
    WeatherClass.RAIN_SNOW,
)

NUM_CLASSES = len(CLASS_ORDER)

NOISE_CLASSES: tuple[WeatherClass, ...] = CLASS_ORDER[1:]

# Mixed categories compose two single-category degradations in a fixed
# order: fog is applied under precipitation, rain before snow.
MIXED_PARTS: dict[WeatherClass, tuple[WeatherClass, WeatherClass]] = {
    WeatherClass.FOG_RAIN: (WeatherClass.FOG, WeatherClass.RAIN),
    WeatherClass.FOG_SNOW: (WeatherClass.FOG, WeatherClass.SNOW),
    WeatherClass.RAIN_SNOW: (WeatherClass.RAIN, WeatherClass.SNOW),
}

LEVELS = (1, 2, 3)


def class_index(cls: WeatherClass) -> int:
    return CLASS_ORDER.index(cls)


def class_from_tag(tag: str) -> WeatherClass:
    try:
        return WeatherClass(tag)
    except ValueError:
        raise ValueError(f"unknown weather class {tag!r}") from None


@dataclass(frozen=True)
class WeatherSpec:
    """Fully determines one degradation: category, intensity, RNG seed.

    The clean category is the identity transform; its level and seed are
    carried but ignored.
    """

    category: WeatherClass
    level: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.category is not WeatherClass.CLEAN and self.level not in LEVELS:
            raise ValueError(f"level must be one of {LEVELS}, got {self.level}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @classmethod
    def clean(cls) -> "WeatherSpec":
        return cls(WeatherClass.CLEAN, 1, 0)
