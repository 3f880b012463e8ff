"""Split, expansion, statistics, and balance validation."""

import numpy as np
import pytest

from wxbench.builder import (
    ExpansionPolicy,
    SplitPolicy,
    compute_stats,
    expand_test,
    expand_train,
    mask_stats,
    split_base,
    validate_balance,
)
from wxbench.errors import EmptyCorpus
from wxbench.manifest import DatasetManifest
from wxbench.raster import GroundTruthMask
from wxbench.weather import CLASS_ORDER, WeatherClass

from test_manifest import make_record


# ---------------------------------------------------------------- split

def test_split_70_30():
    ids = [f"im{i}" for i in range(10)]
    train, test = split_base(ids, SplitPolicy(0.7, seed=0))
    assert len(train) == 7 and len(test) == 3
    assert sorted(train + test) == sorted(ids)


def test_split_single_image_goes_to_test():
    train, test = split_base(["only"], SplitPolicy(0.7, seed=0))
    assert train == [] and test == ["only"]


def test_split_deterministic_and_order_insensitive():
    ids = [f"im{i}" for i in range(23)]
    a = split_base(ids, SplitPolicy(0.7, seed=9))
    b = split_base(list(reversed(ids)), SplitPolicy(0.7, seed=9))
    assert a == b
    c = split_base(ids, SplitPolicy(0.7, seed=10))
    assert a != c


def test_split_empty_corpus():
    with pytest.raises(EmptyCorpus):
        split_base([], SplitPolicy())


def test_split_is_partition():
    ids = [f"im{i}" for i in range(57)]
    train, test = split_base(ids, SplitPolicy(0.7, seed=3))
    assert set(train) | set(test) == set(ids)
    assert not set(train) & set(test)


# ---------------------------------------------------------------- expansion

def test_expand_train_record_count_range():
    records = expand_train(["a"], ExpansionPolicy(), global_seed=0)
    assert 2 <= len(records) <= 6


def test_expand_train_distinct_classes_per_image():
    records = expand_train([f"im{i}" for i in range(50)], ExpansionPolicy(), global_seed=1)
    by_source = {}
    for rec in records:
        by_source.setdefault(rec.source_id, []).append(rec.weather.category)
    for source, classes in by_source.items():
        assert len(set(classes)) == len(classes), source
        noise = [c for c in classes if c is not WeatherClass.CLEAN]
        assert 2 <= len(noise) <= 5


def test_expand_train_class_frequency_near_uniform():
    records = expand_train([f"im{i}" for i in range(1000)], ExpansionPolicy(), global_seed=2)
    counts = {cls: 0 for cls in CLASS_ORDER[1:]}
    total = 0
    for rec in records:
        if rec.weather.category is not WeatherClass.CLEAN:
            counts[rec.weather.category] += 1
            total += 1
    expected = total / 8
    for cls, count in counts.items():
        assert 0.8 * expected <= count <= 1.2 * expected, cls


def test_expand_train_independent_of_input_order():
    ids = [f"im{i}" for i in range(20)]
    a = expand_train(ids, ExpansionPolicy(), global_seed=5)
    b = expand_train(list(reversed(ids)), ExpansionPolicy(), global_seed=5)
    assert a == b


def test_expand_test_one_record_per_source():
    ids = [f"im{i}" for i in range(37)]
    records = expand_test(ids, global_seed=0)
    assert len(records) == len(ids)
    assert len({rec.source_id for rec in records}) == len(ids)
    assert all(rec.split == "test_synth" for rec in records)


def test_expand_test_histogram_near_uniform():
    records = expand_test([f"im{i}" for i in range(900)], global_seed=1)
    counts = {cls: 0 for cls in CLASS_ORDER}
    for rec in records:
        counts[rec.weather.category] += 1
    expected = 900 / 9
    for cls, count in counts.items():
        assert 0.8 * expected <= count <= 1.2 * expected, cls


def test_expand_test_balance_over_1800():
    records = expand_test([f"im{i}" for i in range(1800)], global_seed=2)
    manifest = DatasetManifest(records=records)
    balance = validate_balance(manifest)["test_synth"]
    assert balance["balanced"]
    assert balance["ratio"] <= 1.5


# ---------------------------------------------------------------- stats

def frame_with_fg(n_fg: int, shape=(100, 100)) -> GroundTruthMask:
    arr = np.zeros(shape, dtype=np.uint8)
    arr.flat[:n_fg] = 255
    return GroundTruthMask(arr)


def test_size_class_boundaries():
    assert mask_stats(frame_with_fg(500)).size_class == "small"      # 5.00%
    assert mask_stats(frame_with_fg(501)).size_class == "middle"
    assert mask_stats(frame_with_fg(2999)).size_class == "middle"    # 29.99%
    assert mask_stats(frame_with_fg(3000)).size_class == "large"     # 30.00%


def test_two_blob_mask_counts_two_objects():
    arr = np.zeros((100, 100), dtype=np.uint8)
    arr[10:20, 10:20] = 255
    arr[50:60, 50:60] = 255
    stats = mask_stats(GroundTruthMask(arr))
    assert stats.object_count == 2
    assert stats.count_class == "2"
    assert stats.size_class == "small"  # 2% foreground


def test_component_floor_suppresses_speckle():
    arr = np.zeros((100, 100), dtype=np.uint8)
    arr[10:30, 10:30] = 255       # 400 px = 4%
    arr[70, 70] = 255             # 1 px = 0.01% < 0.05% floor
    arr[80:83, 80:83] = 255       # 9 px = 0.09% >= floor
    stats = mask_stats(GroundTruthMask(arr))
    assert stats.object_count == 2


def test_diagonal_touch_is_8_connected():
    arr = np.zeros((20, 20), dtype=np.uint8)
    arr[0:10, 0:10] = 255
    arr[10:20, 10:20] = 255  # touches only at the corner
    assert mask_stats(GroundTruthMask(arr)).object_count == 1


def test_compute_stats_totals(tmp_path):
    from wxbench.manifest import write_manifest
    from wxbench.raster import save_png

    records = []
    for i, n_fg in enumerate((100, 600, 4000)):
        source = f"s{i}"
        save_png(frame_with_fg(n_fg), tmp_path / "masks" / f"{source}.png")
        records.append(make_record(i, source=source))
    manifest = DatasetManifest(records=records)
    path = tmp_path / "manifest.jsonl"
    write_manifest(manifest, path)
    stats = compute_stats(manifest, path)["test_synth"]
    assert stats["records"] == 3
    assert sum(stats["object_size"].values()) == 3
    assert sum(stats["object_count"].values()) == 3
    assert stats["object_size"] == {"small": 1, "middle": 1, "large": 1}


# ---------------------------------------------------------------- balance

def test_balance_uniform_passes():
    records = []
    for i, cls in enumerate(CLASS_ORDER):
        for j in range(4):
            level = 1 if cls is WeatherClass.CLEAN else (j % 3) + 1
            records.append(make_record(0, cls=cls, level=level, source=f"s{i}_{j}"))
    manifest = DatasetManifest(records=records)
    report = validate_balance(manifest)["test_synth"]
    assert report["ratio"] == 1.0
    assert report["balanced"]


def test_balance_empty_category_fails():
    records = [make_record(i, cls=WeatherClass.FOG, source=f"s{i}") for i in range(5)]
    report = validate_balance(DatasetManifest(records=records))["test_synth"]
    assert report["ratio"] == float("inf")
    assert not report["balanced"]
