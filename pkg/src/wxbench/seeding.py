"""Deterministic seed derivation.

Every stochastic step in the toolkit draws from a seed produced here, so
dataset builds and synthesis runs are reproducible across platforms,
runs, and worker counts.
"""

_FNV64_OFFSET = 0xCBF29CE484222325
_FNV64_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a hash."""
    h = _FNV64_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV64_PRIME) & _MASK64
    return h


def derive_seed(global_seed: int, sample_id: str, class_tag: str, level: int) -> int:
    """Derive a 64-bit seed from a run seed plus a sample's identity.

    Pure function of its arguments: the FNV-1a hash of the UTF-8 string
    "global_seed|sample_id|class_tag|level". Stable across platforms and
    thread counts.
    """
    key = f"{global_seed}|{sample_id}|{class_tag}|{level}"
    return fnv1a_64(key.encode("utf-8"))
