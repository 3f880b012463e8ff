"""wxbench: weather-degraded salient-object-detection benchmark toolkit.

Synthesizes procedurally weather-degraded datasets from clean
(image, mask) corpora, and evaluates saliency predictions with the full
metric suite (MAE, structure score, alignment and F scores in
adaptive/mean/max variants, PR and F curves, weather-label accuracy) at
high throughput with a naive oracle for every metric.
"""

from .errors import (
    DimMismatch,
    EmptyCorpus,
    EmptyList,
    MalformedPng,
    MissingMask,
    MissingPrediction,
    NonBinaryMask,
    NotFound,
    SchemaViolation,
    WxBenchError,
)
from .manifest import DatasetManifest, SampleRecord, read_manifest, write_manifest
from .raster import (
    GroundTruthMask,
    ImageBuffer,
    SaliencyMap,
    load_image,
    load_mask,
    load_saliency,
    save_png,
)
from .seeding import derive_seed, fnv1a_64
from .weather import CLASS_ORDER, NUM_CLASSES, WeatherClass, WeatherSpec

__version__ = "0.1.0"

__all__ = [
    "WxBenchError",
    "NotFound",
    "MalformedPng",
    "NonBinaryMask",
    "SchemaViolation",
    "DimMismatch",
    "EmptyCorpus",
    "EmptyList",
    "MissingMask",
    "MissingPrediction",
    "ImageBuffer",
    "GroundTruthMask",
    "SaliencyMap",
    "load_image",
    "load_mask",
    "load_saliency",
    "save_png",
    "derive_seed",
    "fnv1a_64",
    "WeatherClass",
    "WeatherSpec",
    "CLASS_ORDER",
    "NUM_CLASSES",
    "SampleRecord",
    "DatasetManifest",
    "read_manifest",
    "write_manifest",
]
