"""Build a complete toy benchmark and inspect its statistics.

Walks the full construction pipeline: a clean 20-image corpus is split
70/30, train images are expanded into 2-5 degraded variants (clean
retained half the time), test images get exactly one balanced weather
assignment each, and everything lands in a JSON Lines manifest.
"""

import json
import tempfile
from pathlib import Path

from _toy import write_toy_corpus
from wxbench.builder import build_benchmark, compute_stats, validate_balance
from wxbench.manifest import read_manifest

OUT = Path(__file__).parent / "output" / "toy_bench"

with tempfile.TemporaryDirectory() as tmp:
    image_dir, mask_dir = write_toy_corpus(Path(tmp), count=20, seed=3)
    manifest = build_benchmark(image_dir, mask_dir, OUT, global_seed=13)

manifest = read_manifest(OUT / "manifest.jsonl")
train = [r for r in manifest.records if r.split == "train"]
test = [r for r in manifest.records if r.split == "test_synth"]
print(f"built {len(manifest.records)} records: {len(train)} train, {len(test)} test")
print(f"train sources: {len({r.source_id for r in train})}, test sources: {len(test)}")

print("\nper-split weather balance:")
print(json.dumps(validate_balance(manifest), indent=2, default=str))

print("\nobject size/count taxonomy:")
print(json.dumps(compute_stats(manifest, OUT / 'manifest.jsonl'), indent=2))
