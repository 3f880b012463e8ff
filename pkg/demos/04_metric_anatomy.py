"""Plot PR and F-measure curves for predictions of varying quality.

Dilating or eroding the ground truth produces controlled families of
imperfect predictions; the resulting curves show how the threshold sweep
responds. Output: demos/output/curves.png.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy import ndimage

from _toy import toy_mask
from wxbench.metrics import MetricInputs, evaluate_pair

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

gt = toy_mask(seed=9).foreground()

variants = {
    "exact": gt.astype(np.float64),
    "soft edges": ndimage.gaussian_filter(gt.astype(np.float64), sigma=3.0),
    "dilated": ndimage.binary_dilation(gt, iterations=4).astype(np.float64) * 0.9,
    "noisy": np.clip(gt * 0.7 + 0.15 + 0.25 * np.random.default_rng(1).random(gt.shape), 0, 1),
}

fig, (ax_pr, ax_f) = plt.subplots(1, 2, figsize=(10, 4))
for name, pred in variants.items():
    scalars, sweep = evaluate_pair(MetricInputs(pred, gt))
    ax_pr.plot(sweep.recall, sweep.precision, label=f"{name} (S={scalars.s:.3f})")
    ax_f.plot(sweep.thresholds, sweep.f_beta, label=f"{name} (Fmax={scalars.f_max:.3f})")
    print(f"{name:>10}: {scalars.as_dict()}")

ax_pr.set_xlabel("recall")
ax_pr.set_ylabel("precision")
ax_pr.set_title("PR curve")
ax_pr.legend(fontsize=8)
ax_f.set_xlabel("threshold")
ax_f.set_ylabel("F")
ax_f.set_title("F-measure curve")
ax_f.legend(fontsize=8)
fig.tight_layout()
fig.savefig(OUT / "curves.png", dpi=120)
print(f"\nwrote {OUT / 'curves.png'}")
