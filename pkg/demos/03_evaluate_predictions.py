"""Score three mock "methods" against a toy benchmark and rank them.

The methods are: the ground truth itself (the oracle), a blurred copy
(plausible but soft), and a constant gray map (uninformative). The
rendered table shows how the metric suite separates them.
"""

import shutil
import tempfile
from pathlib import Path

import numpy as np
from scipy import ndimage

from _toy import write_toy_corpus
from wxbench.builder import build_benchmark
from wxbench.cli import main
from wxbench.manifest import read_manifest
from wxbench.metrics import load_report_dict, render_markdown
from wxbench.raster import SaliencyMap, load_mask, save_png

OUT = Path(__file__).parent / "output" / "eval_demo"
shutil.rmtree(OUT, ignore_errors=True)

with tempfile.TemporaryDirectory() as tmp:
    image_dir, mask_dir = write_toy_corpus(Path(tmp), count=12, seed=5)
    build_benchmark(image_dir, mask_dir, OUT / "bench", global_seed=1)

bench = OUT / "bench"
manifest = read_manifest(bench / "manifest.jsonl")

for method in ("oracle", "blurred", "constant"):
    pred_dir = OUT / "preds" / method
    pred_dir.mkdir(parents=True, exist_ok=True)
    for rec in manifest.records:
        gt = load_mask(bench / rec.mask_path)
        if method == "oracle":
            pred = gt.data
        elif method == "blurred":
            pred = ndimage.uniform_filter(gt.data.astype(np.float64), size=9)
            pred = np.rint(pred).astype(np.uint8)
        else:
            pred = np.full_like(gt.data, 128)
        save_png(SaliencyMap(pred), pred_dir / f"{rec.id}.png")
    main(
        ["eval", "--pred", str(pred_dir), "--manifest", str(bench / "manifest.jsonl"),
         "--out", str(OUT / "reports" / method), "--name", method]
    )

reports = [load_report_dict(OUT / "reports" / m / "report.json") for m in ("oracle", "blurred", "constant")]
print()
print(render_markdown(reports))
print("(1)/(2)/(3) mark the best three methods per column; MAE ranks ascending.")
