"""Seeded train/test partition of a clean corpus."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import EmptyCorpus


@dataclass(frozen=True)
class SplitPolicy:
    train_fraction: float = 0.7
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.train_fraction <= 1.0:
            raise ValueError("train_fraction must be in [0, 1]")


def split_base(corpus_ids: Sequence[str], policy: SplitPolicy) -> tuple[list[str], list[str]]:
    """Shuffle ids with the policy seed, then take a floor-sized train prefix.

    The partition is disjoint, exhaustive, and deterministic for a fixed
    seed; ids are sorted before shuffling so input order never matters.
    """
    ids = sorted(corpus_ids)
    if not ids:
        raise EmptyCorpus("corpus has no images")
    if len(set(ids)) != len(ids):
        raise ValueError("corpus ids must be unique")
    rng = np.random.Generator(np.random.PCG64(policy.seed))
    order = rng.permutation(len(ids))
    shuffled = [ids[i] for i in order]
    n_train = math.floor(len(ids) * policy.train_fraction)
    return shuffled[:n_train], shuffled[n_train:]
