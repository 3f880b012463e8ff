from .noise import value_noise
from .ops import (
    apply_dark,
    apply_fog,
    apply_overexposure,
    apply_rain,
    apply_snow,
    degrade,
    mixture_seed,
)
from .params import (
    EXPOSURE_LEVELS,
    FOG_LEVELS,
    RAIN_LEVELS,
    SNOW_LEVELS,
    ExposureParams,
    FogParams,
    RainParams,
    SnowParams,
    dump_tables,
)

__all__ = [
    "value_noise",
    "apply_fog",
    "apply_rain",
    "apply_snow",
    "apply_dark",
    "apply_overexposure",
    "degrade",
    "mixture_seed",
    "FogParams",
    "RainParams",
    "SnowParams",
    "ExposureParams",
    "FOG_LEVELS",
    "RAIN_LEVELS",
    "SNOW_LEVELS",
    "EXPOSURE_LEVELS",
    "dump_tables",
]
