"""Dataset-level aggregation.

Per-image scalars are averaged with an unweighted arithmetic mean
computed by a fixed pairwise reduction tree, so the result is bitwise
identical no matter how many workers produced the per-image values or in
what chunks they arrive.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import EmptyList
from ..weather import NUM_CLASSES
from .types import ClassificationEval, ScalarMetrics, ThresholdSweep


def pairwise_sum(values: Sequence):
    """Sum by a fixed binary tree: split at the largest power of two."""
    n = len(values)
    if n == 0:
        raise EmptyList("cannot reduce an empty sequence")

    def reduce(lo: int, hi: int):
        length = hi - lo
        if length == 1:
            return values[lo]
        if length == 2:
            return values[lo] + values[lo + 1]
        split = 1
        while split * 2 < length:
            split *= 2
        return reduce(lo, lo + split) + reduce(lo + split, hi)

    return reduce(0, n)


def pairwise_mean(values: Sequence):
    return pairwise_sum(values) / len(values)


def aggregate(metrics: Sequence[ScalarMetrics]) -> ScalarMetrics:
    """Unweighted per-field mean over images."""
    if not metrics:
        raise EmptyList("no per-image metrics to aggregate")
    mean = pairwise_mean([m.as_array() for m in metrics])
    return ScalarMetrics.from_array(mean)


def aggregate_curves(sweeps: Sequence[ThresholdSweep]) -> dict[str, np.ndarray]:
    """Mean precision/recall/F curves over images (elementwise)."""
    if not sweeps:
        raise EmptyList("no sweeps to aggregate")
    return {
        "precision": pairwise_mean([s.precision for s in sweeps]),
        "recall": pairwise_mean([s.recall for s in sweeps]),
        "f": pairwise_mean([s.f_beta for s in sweeps]),
    }


def classification_eval(
    pred_labels: Sequence[int], true_labels: Sequence[int]
) -> ClassificationEval:
    """Confusion matrix (rows = true class) and overall accuracy."""
    pred = np.asarray(pred_labels, dtype=np.int64)
    true = np.asarray(true_labels, dtype=np.int64)
    if pred.shape != true.shape or pred.ndim != 1:
        raise ValueError("label vectors must be 1-D and equal length")
    if pred.size == 0:
        raise EmptyList("no labels to evaluate")
    if pred.min() < 0 or pred.max() >= NUM_CLASSES or true.min() < 0 or true.max() >= NUM_CLASSES:
        raise ValueError(f"labels must be in [0, {NUM_CLASSES})")
    confusion = np.zeros((NUM_CLASSES, NUM_CLASSES), dtype=np.int64)
    np.add.at(confusion, (true, pred), 1)
    accuracy = float(np.trace(confusion) / pred.size)
    return ClassificationEval(confusion, accuracy)
