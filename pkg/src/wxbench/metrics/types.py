"""Shared data types for the evaluation protocol."""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from ..errors import DimMismatch
from ..raster import GroundTruthMask, SaliencyMap

# F-measure precision weight (beta squared) used everywhere.
BETA2 = 0.3

# Binarization thresholds k/255 for k = 0..255. Maps are 8-bit, so these
# thresholds binarize exactly with no float ambiguity.
THRESHOLDS = np.arange(256, dtype=np.float64) / 255.0


@dataclass(frozen=True)
class MetricInputs:
    """A prepared (prediction, ground truth) pair.

    pred holds float64 values in [0, 1]; gt is boolean. Dimensions must
    match; the evaluator rejects mismatches (resampling is the caller's
    job). pred_u8 is an optional fast path for 8-bit-quantized maps: when
    set it must hold exactly pred*255 as uint8, which from_rasters
    guarantees.
    """

    pred: np.ndarray
    gt: np.ndarray
    pred_u8: np.ndarray | None = None

    def __post_init__(self):
        pred = np.asarray(self.pred, dtype=np.float64)
        gt = np.asarray(self.gt, dtype=bool)
        if pred.ndim != 2 or gt.ndim != 2:
            raise DimMismatch("pred and gt must be 2-D")
        if pred.shape != gt.shape:
            raise DimMismatch(f"pred {pred.shape} vs gt {gt.shape}")
        if not np.isfinite(pred).all() or pred.min() < 0.0 or pred.max() > 1.0:
            raise ValueError("pred values must be finite and in [0, 1]")
        if self.pred_u8 is not None and self.pred_u8.shape != pred.shape:
            raise DimMismatch("pred_u8 shape mismatch")
        object.__setattr__(self, "pred", pred)
        object.__setattr__(self, "gt", gt)

    @classmethod
    def from_rasters(cls, pred: SaliencyMap, gt: GroundTruthMask) -> "MetricInputs":
        if (pred.height, pred.width) != (gt.height, gt.width):
            raise DimMismatch(
                f"pred {pred.height}x{pred.width} vs gt {gt.height}x{gt.width}"
            )
        return cls(pred.as_unit_float(), gt.foreground(), pred_u8=pred.data)


@dataclass(frozen=True)
class ThresholdSweep:
    """Per-threshold (precision, recall, F, E) over the 256 thresholds.

    Index 0 corresponds to threshold 0, where every pixel binarizes
    positive; it anchors the PR curve at full recall but carries no
    discriminative information, so the scalar mean/max aggregates are
    taken over indices 1..255.
    """

    precision: np.ndarray
    recall: np.ndarray
    f_beta: np.ndarray
    e_value: np.ndarray

    def __post_init__(self):
        for name in ("precision", "recall", "f_beta", "e_value"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            if arr.shape != (256,):
                raise ValueError(f"{name} must have exactly 256 entries")
            object.__setattr__(self, name, arr)

    @property
    def thresholds(self) -> np.ndarray:
        return THRESHOLDS


@dataclass(frozen=True)
class ScalarMetrics:
    """The eight scalar scores reported per image and per dataset."""

    mae: float
    s: float
    f_adp: float
    f_mean: float
    f_max: float
    e_adp: float
    e_mean: float
    e_max: float

    FIELDS = ("mae", "s", "f_adp", "f_mean", "f_max", "e_adp", "e_mean", "e_max")

    def as_dict(self) -> dict[str, float]:
        return {name: float(getattr(self, name)) for name in self.FIELDS}

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in self.FIELDS], dtype=np.float64)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "ScalarMetrics":
        return cls(*(float(v) for v in arr))


# keep dataclass fields and FIELDS in sync
assert tuple(f.name for f in fields(ScalarMetrics)) == ScalarMetrics.FIELDS


@dataclass(frozen=True)
class ClassificationEval:
    """Weather-label confusion matrix (rows = true class) and accuracy."""

    confusion: np.ndarray
    accuracy: float

    def __post_init__(self):
        conf = np.asarray(self.confusion, dtype=np.int64)
        if conf.ndim != 2 or conf.shape[0] != conf.shape[1]:
            raise ValueError("confusion must be square")
        object.__setattr__(self, "confusion", conf)
