"""Evaluation report: assembly, JSON/CSV serialization, table rendering."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import SchemaViolation
from .aggregate import aggregate, aggregate_curves
from .types import ClassificationEval, ScalarMetrics, ThresholdSweep

# Lower is better for MAE only.
ASCENDING_METRICS = {"mae"}


@dataclass
class EvalReport:
    method: str
    per_image: list[dict]                    # {"id": ..., metric fields...}
    aggregate: ScalarMetrics
    curves: dict[str, np.ndarray]            # precision/recall/f, 256 points each
    classification: ClassificationEval | None = None
    missing: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        out = {
            "method": self.method,
            "aggregate": self.aggregate.as_dict(),
            "per_image": self.per_image,
            "curves": {k: [float(v) for v in arr] for k, arr in self.curves.items()},
        }
        if self.classification is not None:
            out["classification"] = {
                "confusion": self.classification.confusion.tolist(),
                "accuracy": self.classification.accuracy,
            }
        if self.missing:
            out["missing"] = list(self.missing)
        return out


def build_report(
    method: str,
    ids: Sequence[str],
    scalars: Sequence[ScalarMetrics],
    sweeps: Sequence[ThresholdSweep],
    classification: ClassificationEval | None = None,
    missing: Sequence[str] = (),
) -> EvalReport:
    per_image = [
        {"id": sample_id, **metric.as_dict()} for sample_id, metric in zip(ids, scalars)
    ]
    return EvalReport(
        method=method,
        per_image=per_image,
        aggregate=aggregate(scalars),
        curves=aggregate_curves(sweeps),
        classification=classification,
        missing=list(missing),
    )


def report_to_json(report: EvalReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2) + "\n"


def write_report(report: EvalReport, out_dir: str | os.PathLike) -> tuple[Path, Path]:
    """Write report.json plus the per-image CSV mirror."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / "report.json"
    json_path.write_text(report_to_json(report), encoding="utf-8")
    csv_path = out_dir / "per_image.csv"
    header = "id," + ",".join(ScalarMetrics.FIELDS)
    lines = [header]
    for row in report.per_image:
        lines.append(row["id"] + "," + ",".join(repr(row[k]) for k in ScalarMetrics.FIELDS))
    csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return json_path, csv_path


def load_report_dict(path: str | os.PathLike) -> dict:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "aggregate" not in obj or "method" not in obj:
        raise SchemaViolation(f"{path}: not an evaluation report")
    missing = [k for k in ScalarMetrics.FIELDS if k not in obj["aggregate"]]
    if missing:
        raise SchemaViolation(f"{path}: aggregate missing fields {missing}")
    return obj


def rank_columns(reports: Sequence[dict]) -> dict[str, dict[str, int]]:
    """Per metric: method -> rank (1-based) for the top three methods.

    Ranking is stable: ties keep input order. No marks for a single
    method.
    """
    ranks: dict[str, dict[str, int]] = {name: {} for name in ScalarMetrics.FIELDS}
    if len(reports) < 2:
        return ranks
    for name in ScalarMetrics.FIELDS:
        reverse = name not in ASCENDING_METRICS
        order = sorted(
            range(len(reports)),
            key=lambda i: (-reports[i]["aggregate"][name] if reverse else reports[i]["aggregate"][name], i),
        )
        for rank, idx in enumerate(order[:3], start=1):
            ranks[name][reports[idx]["method"]] = rank
    return ranks


def render_csv(reports: Sequence[dict]) -> str:
    lines = ["method," + ",".join(ScalarMetrics.FIELDS)]
    for rep in reports:
        agg = rep["aggregate"]
        lines.append(rep["method"] + "," + ",".join(f"{agg[k]:.6f}" for k in ScalarMetrics.FIELDS))
    return "\n".join(lines) + "\n"


def render_markdown(reports: Sequence[dict]) -> str:
    ranks = rank_columns(reports)
    header = "| method | " + " | ".join(ScalarMetrics.FIELDS) + " |"
    sep = "|" + "---|" * (len(ScalarMetrics.FIELDS) + 1)
    lines = [header, sep]
    for rep in reports:
        cells = [rep["method"]]
        for name in ScalarMetrics.FIELDS:
            value = f"{rep['aggregate'][name]:.4f}"
            rank = ranks[name].get(rep["method"])
            cells.append(f"{value} ({rank})" if rank else value)
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
