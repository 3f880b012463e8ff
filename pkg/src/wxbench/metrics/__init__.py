from .aggregate import aggregate, aggregate_curves, classification_eval, pairwise_mean, pairwise_sum
from .engine import adaptive_threshold, e_measures, evaluate_pair, f_measures, mae, pr_sweep, s_measure
from .report import (
    EvalReport,
    build_report,
    load_report_dict,
    render_csv,
    render_markdown,
    report_to_json,
    write_report,
)
from .types import BETA2, THRESHOLDS, ClassificationEval, MetricInputs, ScalarMetrics, ThresholdSweep

__all__ = [
    "BETA2",
    "THRESHOLDS",
    "MetricInputs",
    "ScalarMetrics",
    "ThresholdSweep",
    "ClassificationEval",
    "mae",
    "pr_sweep",
    "f_measures",
    "e_measures",
    "s_measure",
    "evaluate_pair",
    "adaptive_threshold",
    "aggregate",
    "aggregate_curves",
    "classification_eval",
    "pairwise_sum",
    "pairwise_mean",
    "EvalReport",
    "build_report",
    "write_report",
    "report_to_json",
    "load_report_dict",
    "render_csv",
    "render_markdown",
]
