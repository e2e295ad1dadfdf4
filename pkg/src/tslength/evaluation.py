"""1-nearest-neighbour evaluation of length-normalized datasets."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

import numpy as np

from .core import FixedLengthDataset, LabeledDataset, parallel_map
from .dtw import dtw_distance
from .methods import NormalizerSpec, normalize

__all__ = [
    "CSV_HEADER",
    "EvalReport",
    "LengthMismatch",
    "compare_methods",
    "nearest_neighbor_labels",
    "one_nn_classify",
    "reports_to_csv",
]

CSV_HEADER = ["method", "position", "accuracy", "target_length", "wall_time_s", "error"]


class LengthMismatch(ValueError):
    pass


@dataclass
class EvalReport:
    method_name: str
    position: str = "n/a"
    accuracy: float = float("nan")
    per_class_accuracy: dict[str, float] = field(default_factory=dict)
    wall_time: float = 0.0
    target_length: int = 0
    error: str | None = None


def _distances_to_train(x, train, metric):
    if metric == "euclidean":
        stacked = np.stack(train.series)
        return np.sqrt(((stacked - x) ** 2).sum(axis=(1, 2)))
    if metric == "dtw":
        return np.array([dtw_distance(t, x) for t in train.series])
    raise ValueError(f"unknown metric {metric!r}; expected 'dtw' or 'euclidean'")


def nearest_neighbor_labels(train, test, metric="dtw", jobs=1) -> list[str]:
    """Label of the closest training series for each test series.

    DTW uses the training series as teacher. Ties go to the lowest train index.
    """
    if train.target_length != test.target_length or train.dim != test.dim:
        raise LengthMismatch(
            f"train is {train.target_length}x{train.dim}, test is {test.target_length}x{test.dim}"
        )

    def nearest(i):
        return train.labels[int(np.argmin(_distances_to_train(test.series[i], train, metric)))]

    return parallel_map(nearest, range(len(test)), jobs)


def one_nn_classify(
    train: FixedLengthDataset,
    test: FixedLengthDataset,
    metric: str = "dtw",
    jobs: int = 1,
    method_name: str = "",
    position: str = "n/a",
) -> EvalReport:
    start = time.perf_counter()
    pred = nearest_neighbor_labels(train, test, metric, jobs)
    truth = np.asarray(test.labels)
    hit = np.asarray(pred) == truth
    per_class = {c: float(hit[truth == c].mean()) for c in test.classes}
    return EvalReport(
        method_name=method_name,
        position=position,
        accuracy=float(hit.mean()),
        per_class_accuracy=per_class,
        wall_time=time.perf_counter() - start,
        target_length=train.target_length,
    )


def evaluate_spec(train, test, spec: NormalizerSpec, metric="dtw", jobs=1) -> EvalReport:
    """Normalize with ``spec`` and score it; failures land in ``report.error``."""
    start = time.perf_counter()
    name = spec.name.split(":")[0]
    try:
        ntrain, ntest = normalize(train, test, spec, jobs)
        rep = one_nn_classify(ntrain, ntest, metric, jobs, name, spec.position)
    except Exception as exc:  # noqa: BLE001 - one bad method must not stop a sweep
        return EvalReport(name, spec.position, wall_time=time.perf_counter() - start,
                          error=f"{type(exc).__name__}: {exc}")
    rep.wall_time = time.perf_counter() - start
    return rep


def compare_methods(
    train: LabeledDataset,
    test: LabeledDataset,
    specs: list[NormalizerSpec],
    metric: str = "dtw",
    jobs: int = 1,
) -> list[EvalReport]:
    """One report per spec, best accuracy first (stable for equal accuracy).

    Each spec normalizes the given datasets afresh; inputs are not modified.
    Failed specs sort last.
    """
    if not specs:
        raise ValueError("no methods to compare")
    reports = [evaluate_spec(train, test, spec, metric, jobs) for spec in specs]
    return sorted(reports, key=lambda r: -r.accuracy if r.error is None else np.inf)


def reports_to_csv(reports: list[EvalReport], timing: bool = True) -> str:
    """CSV text with :data:`CSV_HEADER` columns.

    ``timing=False`` leaves ``wall_time_s`` blank so that repeated runs give
    byte-identical files.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow([
            r.method_name,
            r.position,
            "" if r.error else f"{r.accuracy:.6f}",
            r.target_length if not r.error else "",
            f"{r.wall_time:.4f}" if timing else "",
            r.error or "",
        ])
    return buf.getvalue()
