"""Dataset manifest: the persisted index binding images, masks, splits,
and weather labels.

Format is JSON Lines: one header line {root, global_seed, format_version}
followed by one record per line, keys in a fixed order so files diff
cleanly and round-trip byte-stably.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath

from .errors import SchemaViolation
from .weather import WeatherClass, WeatherSpec, class_from_tag

FORMAT_VERSION = 1

SPLITS = ("train", "test_synth", "test_real")

# Train sources carry 2-5 degraded variants plus an optionally retained clean copy.
TRAIN_VARIANTS_MIN = 2
TRAIN_VARIANTS_MAX = 6

_RECORD_KEYS = ("id", "split", "image_path", "mask_path", "weather", "source_id", "source_dataset")
_WEATHER_KEYS = ("class", "level", "seed")


@dataclass(frozen=True)
class SampleRecord:
    id: str
    split: str
    image_path: str
    mask_path: str
    weather: WeatherSpec
    source_id: str
    source_dataset: str = "local"

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "split": self.split,
            "image_path": self.image_path,
            "mask_path": self.mask_path,
            "weather": {
                "class": self.weather.category.value,
                "level": self.weather.level,
                "seed": self.weather.seed,
            },
            "source_id": self.source_id,
            "source_dataset": self.source_dataset,
        }

    @classmethod
    def from_json_dict(cls, obj: dict, line: int | None = None) -> "SampleRecord":
        if set(obj) != set(_RECORD_KEYS):
            raise SchemaViolation(
                f"record keys {sorted(obj)} != expected {sorted(_RECORD_KEYS)}", line
            )
        if obj["split"] not in SPLITS:
            raise SchemaViolation(f"unknown split {obj['split']!r}", line)
        w = obj["weather"]
        if not isinstance(w, dict) or set(w) != set(_WEATHER_KEYS):
            raise SchemaViolation("weather must have keys {class, level, seed}", line)
        try:
            spec = WeatherSpec(class_from_tag(w["class"]), int(w["level"]), int(w["seed"]))
        except (ValueError, TypeError) as exc:
            raise SchemaViolation(str(exc), line) from exc
        for key in ("id", "image_path", "mask_path", "source_id", "source_dataset"):
            if not isinstance(obj[key], str) or not obj[key]:
                raise SchemaViolation(f"{key} must be a non-empty string", line)
        return cls(
            id=obj["id"],
            split=obj["split"],
            image_path=obj["image_path"],
            mask_path=obj["mask_path"],
            weather=spec,
            source_id=obj["source_id"],
            source_dataset=obj["source_dataset"],
        )


def _path_is_relative(p: str) -> bool:
    pure = PurePosixPath(p)
    return not pure.is_absolute() and ".." not in pure.parts


@dataclass
class DatasetManifest:
    root: str = "."
    global_seed: int = 0
    records: list[SampleRecord] = field(default_factory=list)

    def validate(self) -> None:
        """Check every manifest invariant; raises SchemaViolation."""
        seen_ids = set()
        test_sources = set()
        train_counts: Counter[str] = Counter()
        for rec in self.records:
            if rec.id in seen_ids:
                raise SchemaViolation(f"duplicate record id {rec.id!r}")
            seen_ids.add(rec.id)
            for p in (rec.image_path, rec.mask_path):
                if not _path_is_relative(p):
                    raise SchemaViolation(f"path {p!r} does not resolve under the manifest root")
            if rec.split == "test_synth":
                if rec.source_id in test_sources:
                    raise SchemaViolation(
                        f"test_synth source {rec.source_id!r} appears more than once"
                    )
                test_sources.add(rec.source_id)
            elif rec.split == "train":
                train_counts[rec.source_id] += 1
        for source, count in train_counts.items():
            if not TRAIN_VARIANTS_MIN <= count <= TRAIN_VARIANTS_MAX:
                raise SchemaViolation(
                    f"train source {source!r} has {count} records, expected "
                    f"{TRAIN_VARIANTS_MIN}-{TRAIN_VARIANTS_MAX}"
                )

    def __eq__(self, other):
        return (
            isinstance(other, DatasetManifest)
            and self.root == other.root
            and self.global_seed == other.global_seed
            and self.records == other.records
        )


def write_manifest(manifest: DatasetManifest, path: str | os.PathLike) -> None:
    manifest.validate()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        json.dumps(
            {
                "root": manifest.root,
                "global_seed": manifest.global_seed,
                "format_version": FORMAT_VERSION,
            }
        )
    ]
    lines.extend(json.dumps(rec.to_json_dict()) for rec in manifest.records)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: str | os.PathLike) -> DatasetManifest:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise SchemaViolation("empty manifest file", 1)
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}", 1) from exc
    if not isinstance(header, dict) or set(header) != {"root", "global_seed", "format_version"}:
        raise SchemaViolation("header must have keys {root, global_seed, format_version}", 1)
    if header["format_version"] != FORMAT_VERSION:
        raise SchemaViolation(f"unsupported format_version {header['format_version']}", 1)
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"invalid JSON: {exc}", lineno) from exc
        records.append(SampleRecord.from_json_dict(obj, lineno))
    manifest = DatasetManifest(
        root=header["root"], global_seed=int(header["global_seed"]), records=records
    )
    manifest.validate()
    return manifest


def resolve_path(manifest_path: str | os.PathLike, manifest: DatasetManifest, rel: str) -> Path:
    """Resolve a record-relative path against the manifest's location."""
    base = Path(manifest_path).parent / manifest.root
    return base / rel
