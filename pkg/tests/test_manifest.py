"""Manifest schema, invariants, and round-trip stability."""

import json

import numpy as np
import pytest

from wxbench.errors import SchemaViolation
from wxbench.manifest import DatasetManifest, SampleRecord, read_manifest, write_manifest
from wxbench.seeding import derive_seed
from wxbench.weather import NOISE_CLASSES, WeatherClass, WeatherSpec


def make_record(i, split="test_synth", cls=WeatherClass.FOG, level=1, source=None):
    source = source or f"src{i}"
    rid = f"{source}__{cls.value}__L{level}" if cls is not WeatherClass.CLEAN else f"{source}__clean"
    return SampleRecord(
        id=rid,
        split=split,
        image_path=f"images/{rid}.png",
        mask_path=f"masks/{source}.png",
        weather=WeatherSpec(cls, level, derive_seed(0, source, cls.value, level)),
        source_id=source,
        source_dataset="toy",
    )


def test_empty_manifest_single_header_line(tmp_path):
    path = tmp_path / "m.jsonl"
    write_manifest(DatasetManifest(root=".", global_seed=42), path)
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    header = json.loads(lines[0])
    assert header == {"root": ".", "global_seed": 42, "format_version": 1}


def test_three_records_four_lines(tmp_path):
    path = tmp_path / "m.jsonl"
    manifest = DatasetManifest(records=[make_record(i) for i in range(3)])
    write_manifest(manifest, path)
    assert len(path.read_text().splitlines()) == 4


def test_roundtrip_randomized(tmp_path):
    rng = np.random.default_rng(3)
    for trial in range(10):
        records = []
        n_train = int(rng.integers(0, 5))
        for i in range(n_train):
            source = f"train{trial}_{i}"
            classes = rng.choice(len(NOISE_CLASSES), size=int(rng.integers(2, 6)), replace=False)
            for c in classes:
                cls = NOISE_CLASSES[int(c)]
                records.append(
                    make_record(i, split="train", cls=cls, level=int(rng.integers(1, 4)), source=source)
                )
        for i in range(int(rng.integers(0, 6))):
            records.append(make_record(i, source=f"test{trial}_{i}"))
        manifest = DatasetManifest(root=".", global_seed=int(rng.integers(0, 2**63)), records=records)
        path = tmp_path / f"m{trial}.jsonl"
        write_manifest(manifest, path)
        assert read_manifest(path) == manifest


def test_roundtrip_preserves_order(tmp_path):
    records = [make_record(i) for i in range(5)][::-1]
    manifest = DatasetManifest(records=records)
    path = tmp_path / "m.jsonl"
    write_manifest(manifest, path)
    assert [r.id for r in read_manifest(path).records] == [r.id for r in records]


def test_schema_violation_reports_line_number(tmp_path):
    path = tmp_path / "m.jsonl"
    manifest = DatasetManifest(records=[make_record(0), make_record(1)])
    write_manifest(manifest, path)
    lines = path.read_text().splitlines()
    lines[2] = json.dumps({"id": "broken"})
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(SchemaViolation) as err:
        read_manifest(path)
    assert "line 3" in str(err.value)


def test_duplicate_test_source_rejected():
    manifest = DatasetManifest(
        records=[
            make_record(0, cls=WeatherClass.FOG, source="same"),
            make_record(0, cls=WeatherClass.RAIN, source="same"),
        ]
    )
    with pytest.raises(SchemaViolation):
        manifest.validate()


def test_train_multiplicity_bounds():
    # a single train record for a source violates the 2-6 rule
    manifest = DatasetManifest(records=[make_record(0, split="train")])
    with pytest.raises(SchemaViolation):
        manifest.validate()


def test_absolute_path_rejected():
    rec = make_record(0)
    bad = SampleRecord(
        id=rec.id,
        split=rec.split,
        image_path="/etc/passwd",
        mask_path=rec.mask_path,
        weather=rec.weather,
        source_id=rec.source_id,
    )
    with pytest.raises(SchemaViolation):
        DatasetManifest(records=[bad]).validate()
