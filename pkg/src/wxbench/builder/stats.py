"""Mask statistics and category-balance validation.

Objects are 8-connected foreground components with area at least 0.05%
of the frame (the floor suppresses annotation speckle). Size classes cut
at foreground fractions of 5% (small, inclusive) and 30% (large,
inclusive).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from ..manifest import DatasetManifest, resolve_path
from ..raster import GroundTruthMask, load_mask
from ..weather import CLASS_ORDER

SIZE_SMALL_MAX = 0.05
SIZE_LARGE_MIN = 0.30
COMPONENT_AREA_FLOOR = 0.0005  # fraction of frame pixels

BALANCE_MAX_RATIO = 1.5

SIZE_CLASSES = ("small", "middle", "large")
COUNT_CLASSES = ("1", "2", "3+")

_CONNECTIVITY_8 = np.ones((3, 3), dtype=int)


@dataclass(frozen=True)
class ObjectStats:
    size_class: str
    count_class: str
    fg_fraction: float
    object_count: int


def mask_stats(mask: GroundTruthMask) -> ObjectStats:
    fg = mask.foreground()
    n = fg.size
    fg_fraction = float(np.count_nonzero(fg)) / n
    if fg_fraction <= SIZE_SMALL_MAX:
        size_class = "small"
    elif fg_fraction >= SIZE_LARGE_MIN:
        size_class = "large"
    else:
        size_class = "middle"

    labels, n_components = ndimage.label(fg, structure=_CONNECTIVITY_8)
    if n_components:
        areas = np.bincount(labels.ravel())[1:]
        count = int(np.count_nonzero(areas >= COMPONENT_AREA_FLOOR * n))
    else:
        count = 0
    # buckets are exhaustive: masks with no qualifying component land in "1"
    if count <= 1:
        count_class = "1"
    elif count == 2:
        count_class = "2"
    else:
        count_class = "3+"
    return ObjectStats(size_class, count_class, fg_fraction, count)


def compute_stats(manifest: DatasetManifest, manifest_path: str | os.PathLike) -> dict:
    """Per-split size/count histograms over every record's mask."""
    cache: dict[str, ObjectStats] = {}
    out: dict[str, dict] = {}
    for rec in manifest.records:
        if rec.mask_path not in cache:
            cache[rec.mask_path] = mask_stats(
                load_mask(resolve_path(manifest_path, manifest, rec.mask_path))
            )
        stats = cache[rec.mask_path]
        split = out.setdefault(
            rec.split,
            {
                "object_size": {k: 0 for k in SIZE_CLASSES},
                "object_count": {k: 0 for k in COUNT_CLASSES},
                "records": 0,
            },
        )
        split["object_size"][stats.size_class] += 1
        split["object_count"][stats.count_class] += 1
        split["records"] += 1
    return out


def validate_balance(manifest: DatasetManifest) -> dict:
    """Per-split weather-category histogram plus a balance flag.

    A split is balanced when max/min category count <= 1.5; an empty
    category makes the ratio infinite and fails the check.
    """
    out: dict[str, dict] = {}
    for rec in manifest.records:
        split = out.setdefault(
            rec.split,
            {"histogram": {cls.value: 0 for cls in CLASS_ORDER}},
        )
        split["histogram"][rec.weather.category.value] += 1
    for split in out.values():
        counts = list(split["histogram"].values())
        low, high = min(counts), max(counts)
        ratio = high / low if low > 0 else math.inf
        split["ratio"] = ratio
        split["balanced"] = ratio <= BALANCE_MAX_RATIO
    return out
