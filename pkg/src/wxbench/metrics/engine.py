"""Optimized metric engine.

All 256 binarizations are evaluated through a single histogram pass
(cumulative counts from the top threshold down), and the alignment score
collapses to four per-threshold combination values because both maps are
binary after thresholding. Every convention here is mirrored by the
naive per-pixel implementations in `naive`, which the test suite holds
this engine to within 1e-9.

Conventions shared with `naive`:
  * binarize pred >= t at every threshold t;
  * precision = TP/(TP+FP), defined as 1 when no pixel is predicted
    positive; recall = TP/|G|, defined as 0 when G is empty;
  * F = (1+b2)PR/(b2*P+R) with b2 = 0.3, and 0 when the denominator is 0;
  * the adaptive threshold is min(2*mean(pred), 1);
  * degenerate ground truth short-circuits: the alignment score becomes
    mean(1-B) for empty G and mean(B) for full G; the structure score
    becomes 1-mean(pred) / mean(pred);
  * sample statistics use the N-1 normalization, taken as 0 for regions
    smaller than two pixels.

Ratios whose denominators cannot vanish are computed without an epsilon
so that perfect predictions score exactly (0, 1, 1, 1, 1, 1, 1, 1).
"""

from __future__ import annotations

import numpy as np

from .types import BETA2, THRESHOLDS, MetricInputs, ScalarMetrics, ThresholdSweep

__all__ = ["mae", "pr_sweep", "f_measures", "s_measure", "e_measures", "evaluate_pair"]


def mae(inputs: MetricInputs) -> float:
    """Mean absolute per-pixel error."""
    diff = inputs.pred - inputs.gt
    np.abs(diff, out=diff)
    return float(diff.mean())


def adaptive_threshold(pred: np.ndarray) -> float:
    return min(2.0 * float(np.mean(pred)), 1.0)


def _f_from_pr(precision, recall):
    num = (1.0 + BETA2) * precision * recall
    den = BETA2 * precision + recall
    return np.divide(num, den, out=np.zeros_like(num), where=den > 0.0)


def _bin_indices(pred: np.ndarray) -> np.ndarray:
    """Largest k with THRESHOLDS[k] <= p, per pixel, exactly.

    Starts from floor(p*255), which can be off by one either way from
    float rounding, then corrects against the exact threshold values so
    the result agrees bit-for-bit with a direct p >= k/255 comparison.
    """
    k = np.clip(np.floor(pred * 255.0).astype(np.intp), 0, 255)
    np.subtract(k, 1, out=k, where=THRESHOLDS[k] > pred)
    above = np.clip(k + 1, 0, 255)
    np.add(k, 1, out=k, where=(k < 255) & (THRESHOLDS[above] <= pred))
    return k


def _threshold_counts(inputs: MetricInputs) -> tuple[np.ndarray, np.ndarray]:
    """(TP, FP) at every threshold via one histogram pass.

    Histograms of the per-pixel bin index over foreground/background,
    accumulated from the top bin down, give the positive counts for all
    256 binarizations at once. For 8-bit maps the stored sample value is
    the bin index (v/255 >= k/255 iff v >= k).
    """
    if inputs.pred_u8 is not None:
        bins = inputs.pred_u8.ravel()
    else:
        bins = _bin_indices(inputs.pred.ravel())
    gt = inputs.gt.ravel()
    fg_hist = np.bincount(bins[gt], minlength=256)
    bg_hist = np.bincount(bins[~gt], minlength=256)
    tp = np.cumsum(fg_hist[::-1])[::-1]
    fp = np.cumsum(bg_hist[::-1])[::-1]
    return tp, fp


def _precision_recall(tp, fp, n_fg):
    tp = tp.astype(np.float64)
    pp = tp + fp.astype(np.float64)
    precision = np.divide(tp, pp, out=np.ones_like(tp), where=pp > 0.0)
    if n_fg > 0:
        recall = tp / float(n_fg)
    else:
        recall = np.zeros_like(tp)
    return precision, recall


def _e_from_counts(tp, fp, n_fg: int, n: int):
    """Alignment score from binary confusion counts (vectorized over k)."""
    tp = np.asarray(tp, dtype=np.float64)
    fp = np.asarray(fp, dtype=np.float64)
    pos = tp + fp
    if n_fg == 0:
        return (n - pos) / n
    if n_fg == n:
        return pos / n
    mu_b = pos / n
    mu_g = n_fg / n
    fn = n_fg - tp
    tn = n - pos - fn

    def enhanced(phi_b, phi_g):
        xi = 2.0 * phi_b * phi_g / (phi_b * phi_b + phi_g * phi_g)
        return (1.0 + xi) ** 2 / 4.0

    v_ff = enhanced(1.0 - mu_b, 1.0 - mu_g)
    v_fb = enhanced(1.0 - mu_b, -mu_g)
    v_bf = enhanced(-mu_b, 1.0 - mu_g)
    v_bb = enhanced(-mu_b, -mu_g)
    return (tp * v_ff + fp * v_fb + fn * v_bf + tn * v_bb) / n


def _counts_at(inputs: MetricInputs, tau: float) -> tuple[int, int]:
    binary = inputs.pred >= tau
    tp = int(np.count_nonzero(binary & inputs.gt))
    fp = int(np.count_nonzero(binary & ~inputs.gt))
    return tp, fp


def pr_sweep(inputs: MetricInputs) -> ThresholdSweep:
    """Precision/recall/F/E at all 256 thresholds."""
    n = inputs.gt.size
    n_fg = int(np.count_nonzero(inputs.gt))
    tp, fp = _threshold_counts(inputs)
    precision, recall = _precision_recall(tp, fp, n_fg)
    f_beta = _f_from_pr(precision, recall)
    e_value = _e_from_counts(tp, fp, n_fg, n)
    return ThresholdSweep(precision, recall, f_beta, e_value)


def f_measures(inputs: MetricInputs, sweep: ThresholdSweep | None = None):
    """(f_adp, f_mean, f_max); mean/max over thresholds 1..255."""
    if sweep is None:
        sweep = pr_sweep(inputs)
    n_fg = int(np.count_nonzero(inputs.gt))
    tau = adaptive_threshold(inputs.pred)
    tp, fp = _counts_at(inputs, tau)
    precision = tp / (tp + fp) if (tp + fp) > 0 else 1.0
    recall = tp / n_fg if n_fg > 0 else 0.0
    f_adp = float(_f_from_pr(np.float64(precision), np.float64(recall)))
    return f_adp, float(sweep.f_beta[1:].mean()), float(sweep.f_beta[1:].max())


def e_measures(inputs: MetricInputs, sweep: ThresholdSweep | None = None):
    """(e_adp, e_mean, e_max); mean/max over thresholds 1..255."""
    if sweep is None:
        sweep = pr_sweep(inputs)
    n = inputs.gt.size
    n_fg = int(np.count_nonzero(inputs.gt))
    tau = adaptive_threshold(inputs.pred)
    tp, fp = _counts_at(inputs, tau)
    e_adp = float(_e_from_counts(np.float64(tp), np.float64(fp), n_fg, n))
    return e_adp, float(sweep.e_value[1:].mean()), float(sweep.e_value[1:].max())


def _object_score(values: np.ndarray) -> float:
    """2*x / (x^2 + 1 + 2*sigma) over a region of the prediction."""
    if values.size == 0:
        return 0.0
    x = float(values.mean())
    sigma = float(values.std(ddof=1)) if values.size > 1 else 0.0
    return 2.0 * x / (x * x + 1.0 + 2.0 * sigma)


def _ssim(x: np.ndarray, y: np.ndarray) -> float:
    n = x.size
    if n == 0:
        return 0.0
    x = np.ascontiguousarray(x).ravel()
    y = np.ascontiguousarray(y).ravel()
    xm = float(x.mean())
    ym = float(y.mean())
    if n > 1:
        dx = x - xm
        dy = y - ym
        sigma_x = float(np.dot(dx, dx)) / (n - 1)
        sigma_y = float(np.dot(dy, dy)) / (n - 1)
        sigma_xy = float(np.dot(dx, dy)) / (n - 1)
    else:
        sigma_x = sigma_y = sigma_xy = 0.0
    alpha = 4.0 * xm * ym * sigma_xy
    beta = (xm * xm + ym * ym) * (sigma_x + sigma_y)
    if beta != 0.0:
        return alpha / beta
    return 1.0 if alpha == 0.0 else 0.0


def s_measure(inputs: MetricInputs) -> float:
    """Structure score: object-aware and region-aware halves.

    The region half splits both maps into four blocks at the foreground
    centroid (indices rounded, plus one, mirroring the reference
    convention) and area-weights a per-block similarity.
    """
    pred, gt = inputs.pred, inputs.gt
    n = gt.size
    n_fg = int(np.count_nonzero(gt))
    if n_fg == 0:
        return float(min(max(1.0 - pred.mean(), 0.0), 1.0))
    if n_fg == n:
        return float(min(max(pred.mean(), 0.0), 1.0))

    mu = n_fg / n
    s_object = mu * _object_score(pred[gt]) + (1.0 - mu) * _object_score(1.0 - pred[~gt])

    h, w = gt.shape
    ys, xs = np.nonzero(gt)
    cy = int(round(float(ys.mean()))) + 1
    cx = int(round(float(xs.mean()))) + 1
    gt_f = gt.astype(np.float64)
    weighted = 0.0
    for ysl, xsl in (
        (slice(0, cy), slice(0, cx)),
        (slice(0, cy), slice(cx, w)),
        (slice(cy, h), slice(0, cx)),
        (slice(cy, h), slice(cx, w)),
    ):
        p_block = pred[ysl, xsl]
        g_block = gt_f[ysl, xsl]
        weighted += p_block.size * _ssim(p_block, g_block)
    s_region = weighted / n

    s = 0.5 * s_object + 0.5 * s_region
    return float(min(max(s, 0.0), 1.0))


def evaluate_pair(inputs: MetricInputs) -> tuple[ScalarMetrics, ThresholdSweep]:
    """All eight scalars plus the threshold sweep, sharing one pass."""
    sweep = pr_sweep(inputs)
    f_adp, f_mean, f_max = f_measures(inputs, sweep)
    e_adp, e_mean, e_max = e_measures(inputs, sweep)
    scalars = ScalarMetrics(
        mae=mae(inputs),
        s=s_measure(inputs),
        f_adp=f_adp,
        f_mean=f_mean,
        f_max=f_max,
        e_adp=e_adp,
        e_mean=e_mean,
        e_max=e_max,
    )
    return scalars, sweep
