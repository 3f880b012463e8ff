"""Expansion of split ids into weather-labeled sample records.

Train images each become 2-5 degraded variants with pairwise-distinct
weather categories, plus the clean original retained with probability
0.5. Test images each become exactly one record; their categories are
dealt from a shuffled balanced deck over all nine classes so that the
per-category counts stay within one of each other (each image's marginal
category is still uniform).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..manifest import SampleRecord
from ..seeding import derive_seed
from ..weather import CLASS_ORDER, LEVELS, NOISE_CLASSES, WeatherClass, WeatherSpec


@dataclass(frozen=True)
class ExpansionPolicy:
    variants_min: int = 2
    variants_max: int = 5
    retain_clean_prob: float = 0.5


def _record(source_id: str, split: str, spec: WeatherSpec, dataset: str) -> SampleRecord:
    if spec.category is WeatherClass.CLEAN:
        rec_id = f"{source_id}__clean"
    else:
        rec_id = f"{source_id}__{spec.category.value}__L{spec.level}"
    return SampleRecord(
        id=rec_id,
        split=split,
        image_path=f"images/{rec_id}.png",
        mask_path=f"masks/{source_id}.png",
        weather=spec,
        source_id=source_id,
        source_dataset=dataset,
    )


def expand_train(
    train_ids: Sequence[str],
    policy: ExpansionPolicy,
    global_seed: int,
    dataset: str = "local",
) -> list[SampleRecord]:
    """Per-image expansion, deterministic and independent across images.

    Each image draws from its own generator seeded by derive_seed, so the
    result does not depend on processing order or worker count. Each
    degraded record's weather seed is itself derived from
    (global_seed, source id, class, level).
    """
    records: list[SampleRecord] = []
    for source_id in sorted(train_ids):
        rng = np.random.Generator(
            np.random.PCG64(derive_seed(global_seed, source_id, "expand_train", 0))
        )
        k = int(rng.integers(policy.variants_min, policy.variants_max + 1))
        picks = rng.choice(len(NOISE_CLASSES), size=k, replace=False)
        for pick in picks:
            cls = NOISE_CLASSES[int(pick)]
            level = int(rng.integers(LEVELS[0], LEVELS[-1] + 1))
            seed = derive_seed(global_seed, source_id, cls.value, level)
            records.append(_record(source_id, "train", WeatherSpec(cls, level, seed), dataset))
        if rng.random() < policy.retain_clean_prob:
            records.append(_record(source_id, "train", WeatherSpec.clean(), dataset))
    return records


def expand_test(
    test_ids: Sequence[str], global_seed: int, dataset: str = "local"
) -> list[SampleRecord]:
    """Exactly one record per test image, categories dealt near-uniformly."""
    ids = sorted(test_ids)
    rng = np.random.Generator(
        np.random.PCG64(derive_seed(global_seed, "", "expand_test", 0))
    )
    # exact-size deck: full rounds over the 9 classes plus a
    # without-replacement remainder, so per-class counts differ by at most 1
    rounds, extra = divmod(len(ids), len(CLASS_ORDER))
    deck = [cls.value for cls in CLASS_ORDER for _ in range(rounds)]
    deck += [CLASS_ORDER[int(i)].value for i in rng.choice(len(CLASS_ORDER), size=extra, replace=False)]
    deck = np.array(deck, dtype=object) if deck else np.array([], dtype=object)
    deck = deck[rng.permutation(len(deck))]
    records = []
    for source_id, tag in zip(ids, deck):
        cls = WeatherClass(str(tag))
        if cls is WeatherClass.CLEAN:
            spec = WeatherSpec.clean()
        else:
            level = int(rng.integers(LEVELS[0], LEVELS[-1] + 1))
            spec = WeatherSpec(cls, level, derive_seed(global_seed, source_id, cls.value, level))
        records.append(_record(source_id, "test_synth", spec, dataset))
    return records
