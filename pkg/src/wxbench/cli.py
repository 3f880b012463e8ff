"""Command-line entry point: synth, build, eval, report, stats.

Every command is idempotent given identical inputs and seed; worker
count never changes any output byte. Exit codes: 0 success, 2 validation
failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .builder import build_benchmark, compute_stats, validate_balance
from .errors import (
    IoError,
    MissingPrediction,
    ValidationError,
    WxBenchError,
)
from .manifest import read_manifest, resolve_path
from .metrics import (
    MetricInputs,
    build_report,
    classification_eval,
    evaluate_pair,
    load_report_dict,
    render_csv,
    render_markdown,
    write_report,
)
from .raster import load_image, load_mask, load_saliency, save_png
from .seeding import derive_seed
from .synth import degrade, dump_tables
from .weather import CLASS_ORDER, LEVELS, WeatherClass, WeatherSpec, class_from_tag, class_index

THREADS_ENV = "WXBENCH_THREADS"


def resolve_workers(flag_value: int | None) -> int:
    """Worker count: --workers flag, then WXBENCH_THREADS, then core count."""
    if flag_value is not None:
        if flag_value < 1:
            raise ValidationError("--workers must be >= 1")
        return flag_value
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise ValidationError(f"{THREADS_ENV} must be >= 1")
        return value
    return os.cpu_count() or 1


def _sweep_specs(sample_id: str, seed: int) -> list[WeatherSpec]:
    """Clean plus all 8 noise classes at all 3 levels: 25 specs."""
    specs = [WeatherSpec.clean()]
    for cls in CLASS_ORDER[1:]:
        for level in LEVELS:
            specs.append(WeatherSpec(cls, level, derive_seed(seed, sample_id, cls.value, level)))
    return specs


def cmd_synth(args) -> int:
    if args.dump_params:
        print(json.dumps(dump_tables(), indent=2))
        return 0
    if args.input is None or args.out is None:
        raise ValidationError("synth requires --input and --out")
    if not args.sweep and args.weather is None:
        raise ValidationError("synth requires either --weather or --sweep")
    in_dir = Path(args.input)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = sorted(in_dir.glob("*.png"))
    if not paths:
        raise ValidationError(f"no PNG images under {in_dir}")

    label_lines = []
    for path in paths:
        sample_id = path.stem
        image = load_image(path)
        if args.sweep:
            specs = _sweep_specs(sample_id, args.seed)
        else:
            cls = class_from_tag(args.weather)
            if cls is WeatherClass.CLEAN:
                specs = [WeatherSpec.clean()]
            else:
                specs = [
                    WeatherSpec(cls, args.level, derive_seed(args.seed, sample_id, cls.value, args.level))
                ]
        for spec in specs:
            out_id = f"{sample_id}__{spec.category.value}__L{spec.level}"
            save_png(degrade(image, spec), out_dir / f"{out_id}.png")
            label_lines.append(
                json.dumps(
                    {
                        "id": out_id,
                        "source_id": sample_id,
                        "weather": {
                            "class": spec.category.value,
                            "level": spec.level,
                            "seed": spec.seed,
                        },
                    }
                )
            )
    (out_dir / "labels.jsonl").write_text("\n".join(label_lines) + "\n", encoding="utf-8")
    print(f"wrote {len(label_lines)} degraded images to {out_dir}")
    return 0


def cmd_build(args) -> int:
    workers = resolve_workers(args.workers)
    manifest = build_benchmark(
        args.input,
        args.masks,
        args.out,
        global_seed=args.seed,
        split_ratio=args.split_ratio,
        workers=workers,
        dataset_name=args.dataset_name,
    )
    n_train = sum(1 for r in manifest.records if r.split == "train")
    n_test = sum(1 for r in manifest.records if r.split == "test_synth")
    print(f"built manifest with {n_train} train and {n_test} test records at {args.out}")
    return 0


def _read_pred_labels(path: str) -> dict[str, int]:
    labels = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        obj = json.loads(line)
        cls = class_from_tag(obj["class"]) if "class" in obj else None
        if cls is None or "id" not in obj:
            raise ValidationError(f"{path}: line {lineno}: expected keys id, class")
        labels[obj["id"]] = class_index(cls)
    return labels


def cmd_eval(args) -> int:
    workers = resolve_workers(args.workers)
    manifest = read_manifest(args.manifest)
    pred_dir = Path(args.pred)

    records = manifest.records
    missing = [rec.id for rec in records if not (pred_dir / f"{rec.id}.png").is_file()]
    if missing and not args.allow_missing:
        raise MissingPrediction(
            f"{len(missing)} predictions missing (first: {missing[:5]}); "
            "pass --allow-missing to evaluate the rest"
        )
    present = [rec for rec in records if rec.id not in set(missing)]
    if not present:
        raise ValidationError("no predictions to evaluate")

    def eval_one(rec):
        pred = load_saliency(pred_dir / f"{rec.id}.png")
        gt = load_mask(resolve_path(args.manifest, manifest, rec.mask_path))
        return evaluate_pair(MetricInputs.from_rasters(pred, gt))

    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(eval_one, present))
    elapsed = time.perf_counter() - start

    classification = None
    if args.pred_labels:
        pred_labels = _read_pred_labels(args.pred_labels)
        have = [rec for rec in present if rec.id in pred_labels]
        if have:
            classification = classification_eval(
                [pred_labels[rec.id] for rec in have],
                [class_index(rec.weather.category) for rec in have],
            )

    report = build_report(
        method=args.name or pred_dir.name,
        ids=[rec.id for rec in present],
        scalars=[scalars for scalars, _ in results],
        sweeps=[sweep for _, sweep in results],
        classification=classification,
        missing=missing,
    )
    json_path, csv_path = write_report(report, args.out)
    # timing goes to stderr only, so reports stay byte-identical across worker counts
    print(f"evaluated {len(present)} pairs in {elapsed:.2f}s", file=sys.stderr)
    print(f"wrote {json_path} and {csv_path}")
    return 0


def cmd_report(args) -> int:
    reports = [load_report_dict(p) for p in args.reports]
    text = render_markdown(reports) if args.format == "md" else render_csv(reports)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_stats(args) -> int:
    manifest = read_manifest(args.manifest)
    out = {
        "object_stats": compute_stats(manifest, args.manifest),
        "weather_balance": validate_balance(manifest),
    }
    text = json.dumps(out, indent=2, default=str) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wxbench",
        description="Weather-degraded salient-object-detection benchmark toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="degrade images with procedural weather")
    p_synth.add_argument("--input", help="directory of clean RGB PNGs")
    p_synth.add_argument("--out", help="output directory")
    p_synth.add_argument("--weather", choices=[c.value for c in CLASS_ORDER])
    p_synth.add_argument("--level", type=int, choices=LEVELS, default=2)
    p_synth.add_argument("--sweep", action="store_true", help="all classes and levels per image")
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--dump-params", action="store_true", help="print parameter tables and exit")
    p_synth.set_defaults(func=cmd_synth)

    p_build = sub.add_parser("build", help="construct a benchmark from a clean corpus")
    p_build.add_argument("--input", required=True, help="directory of clean RGB PNGs")
    p_build.add_argument("--masks", required=True, help="directory of binary mask PNGs")
    p_build.add_argument("--out", required=True)
    p_build.add_argument("--seed", type=int, default=0)
    p_build.add_argument("--split-ratio", type=float, default=0.7)
    p_build.add_argument("--workers", type=int, default=None)
    p_build.add_argument("--dataset-name", default="local")
    p_build.set_defaults(func=cmd_build)

    p_eval = sub.add_parser("eval", help="score saliency predictions against a manifest")
    p_eval.add_argument("--pred", required=True, help="directory of predicted saliency PNGs")
    p_eval.add_argument("--manifest", required=True)
    p_eval.add_argument("--out", required=True)
    p_eval.add_argument("--workers", type=int, default=None)
    p_eval.add_argument("--allow-missing", action="store_true")
    p_eval.add_argument("--pred-labels", help="JSONL of predicted weather labels {id, class}")
    p_eval.add_argument("--name", help="method name recorded in the report")
    p_eval.set_defaults(func=cmd_eval)

    p_report = sub.add_parser("report", help="render one or more reports as a table")
    p_report.add_argument("reports", nargs="+")
    p_report.add_argument("--format", choices=("csv", "md"), default="md")
    p_report.add_argument("--out")
    p_report.set_defaults(func=cmd_report)

    p_stats = sub.add_parser("stats", help="mask statistics and weather balance of a manifest")
    p_stats.add_argument("--manifest", required=True)
    p_stats.add_argument("--out")
    p_stats.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"wxbench: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (IoError, OSError) as exc:
        print(f"wxbench: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except WxBenchError as exc:
        print(f"wxbench: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
