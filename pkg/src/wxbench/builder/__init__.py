from .build import build_benchmark, discover_corpus
from .expand import ExpansionPolicy, expand_test, expand_train
from .split import SplitPolicy, split_base
from .stats import (
    BALANCE_MAX_RATIO,
    ObjectStats,
    compute_stats,
    mask_stats,
    validate_balance,
)

__all__ = [
    "SplitPolicy",
    "split_base",
    "ExpansionPolicy",
    "expand_train",
    "expand_test",
    "ObjectStats",
    "mask_stats",
    "compute_stats",
    "validate_balance",
    "BALANCE_MAX_RATIO",
    "build_benchmark",
    "discover_corpus",
]
