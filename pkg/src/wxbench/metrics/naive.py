"""Naive per-pixel reference implementations of every metric.

These exist to hold the optimized engine honest: each function evaluates
its definition directly - one explicit binarization per threshold,
full-size intermediate maps, no histogram shortcuts. They are slow on
purpose and share the engine's documented conventions (binarize with >=,
precision 1 when nothing is predicted positive, recall 0 on empty ground
truth, F zero on a zero denominator, N-1 sample statistics, mean/max
aggregates over thresholds 1..255).
"""

from __future__ import annotations

import numpy as np

from .types import BETA2, THRESHOLDS, MetricInputs


def naive_mae(inputs: MetricInputs) -> float:
    total = 0.0
    pred = inputs.pred
    gt = inputs.gt
    h, w = pred.shape
    for i in range(h):
        for j in range(w):
            total += abs(pred[i, j] - (1.0 if gt[i, j] else 0.0))
    return total / (h * w)


def _f_score(precision: float, recall: float) -> float:
    den = BETA2 * precision + recall
    if den == 0.0:
        return 0.0
    return (1.0 + BETA2) * precision * recall / den


def naive_prf_at(inputs: MetricInputs, tau: float) -> tuple[float, float, float]:
    """Precision, recall, F for one explicit binarization."""
    binary = inputs.pred >= tau
    tp = int(np.count_nonzero(binary & inputs.gt))
    fp = int(np.count_nonzero(binary & ~inputs.gt))
    n_fg = int(np.count_nonzero(inputs.gt))
    precision = tp / (tp + fp) if (tp + fp) > 0 else 1.0
    recall = tp / n_fg if n_fg > 0 else 0.0
    return precision, recall, _f_score(precision, recall)


def naive_e_at(inputs: MetricInputs, tau: float) -> float:
    """Alignment score for one binarization, via full per-pixel maps."""
    binary = (inputs.pred >= tau).astype(np.float64)
    gt = inputs.gt.astype(np.float64)
    n = gt.size
    n_fg = gt.sum()
    if n_fg == 0:
        return float((1.0 - binary).mean())
    if n_fg == n:
        return float(binary.mean())
    phi_b = binary - binary.mean()
    phi_g = gt - gt.mean()
    xi = 2.0 * phi_g * phi_b / (phi_g * phi_g + phi_b * phi_b)
    enhanced = (1.0 + xi) ** 2 / 4.0
    return float(enhanced.mean())


def naive_sweep(inputs: MetricInputs):
    """256 (P, R, F, E) tuples, one explicit binarization per threshold."""
    precision = np.zeros(256)
    recall = np.zeros(256)
    f_beta = np.zeros(256)
    e_value = np.zeros(256)
    for k in range(256):
        tau = THRESHOLDS[k]
        precision[k], recall[k], f_beta[k] = naive_prf_at(inputs, tau)
        e_value[k] = naive_e_at(inputs, tau)
    return precision, recall, f_beta, e_value


def naive_adaptive_threshold(pred: np.ndarray) -> float:
    return min(2.0 * float(np.mean(pred)), 1.0)


def naive_f_measures(inputs: MetricInputs) -> tuple[float, float, float]:
    _, _, f, _ = naive_sweep(inputs)
    tau = naive_adaptive_threshold(inputs.pred)
    _, _, f_adp = naive_prf_at(inputs, tau)
    return f_adp, float(f[1:].mean()), float(f[1:].max())


def naive_e_measures(inputs: MetricInputs) -> tuple[float, float, float]:
    _, _, _, e = naive_sweep(inputs)
    tau = naive_adaptive_threshold(inputs.pred)
    return naive_e_at(inputs, tau), float(e[1:].mean()), float(e[1:].max())


def _naive_object(values) -> float:
    values = list(values)
    if not values:
        return 0.0
    n = len(values)
    x = sum(values) / n
    if n > 1:
        var = sum((v - x) ** 2 for v in values) / (n - 1)
        sigma = var**0.5
    else:
        sigma = 0.0
    return 2.0 * x / (x * x + 1.0 + 2.0 * sigma)


def _naive_ssim(x_list, y_list) -> float:
    n = len(x_list)
    if n == 0:
        return 0.0
    xm = sum(x_list) / n
    ym = sum(y_list) / n
    if n > 1:
        sigma_x = sum((v - xm) ** 2 for v in x_list) / (n - 1)
        sigma_y = sum((v - ym) ** 2 for v in y_list) / (n - 1)
        sigma_xy = sum((a - xm) * (b - ym) for a, b in zip(x_list, y_list)) / (n - 1)
    else:
        sigma_x = sigma_y = sigma_xy = 0.0
    alpha = 4.0 * xm * ym * sigma_xy
    beta = (xm * xm + ym * ym) * (sigma_x + sigma_y)
    if beta != 0.0:
        return alpha / beta
    return 1.0 if alpha == 0.0 else 0.0


def naive_s_measure(inputs: MetricInputs) -> float:
    pred = inputs.pred
    gt = inputs.gt
    h, w = gt.shape
    n = h * w
    fg = [(i, j) for i in range(h) for j in range(w) if gt[i, j]]
    n_fg = len(fg)
    if n_fg == 0:
        return min(max(1.0 - float(pred.mean()), 0.0), 1.0)
    if n_fg == n:
        return min(max(float(pred.mean()), 0.0), 1.0)

    mu = n_fg / n
    fg_vals = [float(pred[i, j]) for i, j in fg]
    bg_vals = [1.0 - float(pred[i, j]) for i in range(h) for j in range(w) if not gt[i, j]]
    s_object = mu * _naive_object(fg_vals) + (1.0 - mu) * _naive_object(bg_vals)

    ys, xs = np.nonzero(gt)
    cy = int(round(float(ys.mean()))) + 1
    cx = int(round(float(xs.mean()))) + 1
    weighted = 0.0
    for y_lo, y_hi, x_lo, x_hi in (
        (0, cy, 0, cx),
        (0, cy, cx, w),
        (cy, h, 0, cx),
        (cy, h, cx, w),
    ):
        x_list = []
        y_list = []
        for i in range(y_lo, y_hi):
            for j in range(x_lo, x_hi):
                x_list.append(float(pred[i, j]))
                y_list.append(1.0 if gt[i, j] else 0.0)
        weighted += len(x_list) * _naive_ssim(x_list, y_list)
    s_region = weighted / n

    return min(max(0.5 * s_object + 0.5 * s_region, 0.0), 1.0)
