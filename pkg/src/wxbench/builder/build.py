"""Full benchmark construction: split, expand, degrade, materialize.

The build is a deterministic function of (corpus bytes, global seed):
degradations run in a worker pool, but every output is written by the
main thread in record order and all randomness flows through derived
seeds.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..errors import DimMismatch, MissingMask
from ..manifest import DatasetManifest, SampleRecord, write_manifest
from ..raster import ImageBuffer, load_image, load_mask, save_png
from ..synth import degrade
from .expand import ExpansionPolicy, expand_test, expand_train
from .split import SplitPolicy, split_base


def discover_corpus(image_dir: str | os.PathLike, mask_dir: str | os.PathLike) -> list[str]:
    """Sorted PNG stems of the corpus; every image must have a mask."""
    image_dir = Path(image_dir)
    mask_dir = Path(mask_dir)
    ids = sorted(p.stem for p in image_dir.glob("*.png"))
    for sample_id in ids:
        if not (mask_dir / f"{sample_id}.png").is_file():
            raise MissingMask(f"no mask for image id {sample_id!r}")
    return ids


def build_benchmark(
    image_dir: str | os.PathLike,
    mask_dir: str | os.PathLike,
    out_dir: str | os.PathLike,
    global_seed: int = 0,
    split_ratio: float = 0.7,
    workers: int = 1,
    dataset_name: str = "local",
) -> DatasetManifest:
    image_dir = Path(image_dir)
    mask_dir = Path(mask_dir)
    out_dir = Path(out_dir)
    ids = discover_corpus(image_dir, mask_dir)

    train_ids, test_ids = split_base(ids, SplitPolicy(split_ratio, global_seed))
    records = expand_train(train_ids, ExpansionPolicy(), global_seed, dataset_name)
    records += expand_test(test_ids, global_seed, dataset_name)

    sources = sorted({rec.source_id for rec in records})
    images: dict[str, ImageBuffer] = {}
    for source_id in sources:
        image = load_image(image_dir / f"{source_id}.png")
        mask = load_mask(mask_dir / f"{source_id}.png")
        if (mask.height, mask.width) != (image.height, image.width):
            raise DimMismatch(f"mask/image size mismatch for {source_id!r}")
        images[source_id] = image
        save_png(mask, out_dir / "masks" / f"{source_id}.png")

    def degrade_record(rec: SampleRecord) -> ImageBuffer:
        return degrade(images[rec.source_id], rec.weather)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        degraded = list(pool.map(degrade_record, records))
    for rec, image in zip(records, degraded):
        save_png(image, out_dir / rec.image_path)

    manifest = DatasetManifest(root=".", global_seed=global_seed, records=records)
    write_manifest(manifest, out_dir / "manifest.jsonl")
    return manifest
