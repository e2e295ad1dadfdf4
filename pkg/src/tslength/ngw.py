"""Nearest Guided Warping (NGW).

Long training series are resampled to a common length and used as
prototypes. Every other series is warped onto its DTW-nearest prototype:
output step ``i`` is the student element aligned to prototype step ``i``,
so every output has exactly the prototype length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FixedLengthDataset, LabeledDataset, as_series, linear_resample, parallel_map
from .dtw import dtw, dtw_distance, max_student_length

__all__ = [
    "EmptyClass",
    "NgwConfig",
    "PrototypeSet",
    "guided_warp",
    "nearest_rank",
    "nearest_teacher",
    "nearest_teacher_index",
    "normalize_ngw",
    "select_prototypes",
    "top_quantile_threshold",
    "warp_dataset",
]

# slack for products like 0.7 * 20 landing a hair above an integer
_EPS = 1e-9


class EmptyClass(ValueError):
    """A class has no training members, so no class-wise prototype exists."""


@dataclass(frozen=True)
class NgwConfig:
    """``alpha``: fraction of the longest training series used as prototypes.
    ``beta``: quantile of training lengths used as the common target length.
    """

    alpha: float = 0.4
    beta: float = 1.0
    class_wise: bool = False

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not self.alpha <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [alpha, 1], got beta={self.beta}, alpha={self.alpha}")


@dataclass
class PrototypeSet:
    prototypes: list[np.ndarray]
    prototype_labels: list[str]
    source_indices: list[int]
    target_length: int

    def __len__(self) -> int:
        return len(self.prototypes)


def nearest_rank(values, q: float) -> int:
    """Nearest-rank ``q`` quantile: the element at 1-based rank ``ceil(q * n)``."""
    v = np.sort(np.asarray(values))
    if v.size == 0:
        raise ValueError("quantile of an empty collection")
    rank = min(max(math.ceil(q * v.size - _EPS), 1), v.size)
    return int(v[rank - 1])


def top_quantile_threshold(values, alpha: float) -> int:
    """Smallest length among the top ``alpha`` fraction of ``values``.

    The top fraction holds the ``ceil(alpha * n)`` largest values; series at
    or above the returned threshold are selected, ties included.
    """
    v = np.sort(np.asarray(values))[::-1]
    k = min(max(math.ceil(alpha * v.size - _EPS), 1), v.size)
    return int(v[k - 1])


def select_prototypes(train: LabeledDataset, config: NgwConfig) -> PrototypeSet:
    """Pick and resample the prototype set from the training data only.

    The originals are the series with the longest ``alpha`` fraction of
    lengths, pooled or per class. The target length is always the pooled
    ``beta`` quantile so that every class ends at one length.
    """
    lengths = train.lengths
    target = nearest_rank(lengths, config.beta)
    labels = np.asarray(train.labels)

    if config.class_wise:
        selected = []
        for cls in train.classes:
            members = np.flatnonzero(labels == cls)
            if members.size == 0:
                raise EmptyClass(f"class {cls!r} has no training series")
            thr = top_quantile_threshold(lengths[members], config.alpha)
            selected.extend(members[lengths[members] >= thr].tolist())
        selected.sort()
    else:
        thr = top_quantile_threshold(lengths, config.alpha)
        selected = np.flatnonzero(lengths >= thr).tolist()

    return PrototypeSet(
        prototypes=[linear_resample(train.series[i], target) for i in selected],
        prototype_labels=[train.labels[i] for i in selected],
        source_indices=selected,
        target_length=target,
    )


def _guard(student: np.ndarray, teacher_length: int) -> np.ndarray:
    limit = max_student_length(teacher_length)
    if student.shape[0] > limit:
        return linear_resample(student, limit)
    return student


def nearest_teacher_index(
    student,
    protos: PrototypeSet,
    student_label: str | None = None,
    config: NgwConfig | None = None,
    student_index: int | None = None,
) -> int:
    """Index into ``protos`` of the DTW-nearest prototype.

    With ``config.class_wise`` and a label, only prototypes of that class are
    candidates. A training series that is itself a prototype original
    (``student_index`` in ``protos.source_indices``) is excluded from its own
    candidates unless nothing else is left. Ties go to the lowest index.
    """
    if len(protos) == 0:
        raise ValueError("prototype set is empty")
    candidates = list(range(len(protos)))
    if config is not None and config.class_wise and student_label is not None:
        candidates = [k for k in candidates if protos.prototype_labels[k] == student_label]
        if not candidates:
            raise EmptyClass(f"no prototype carries label {student_label!r}")
    if student_index is not None:
        others = [k for k in candidates if protos.source_indices[k] != student_index]
        if others:
            candidates = others

    s = _guard(as_series(student), protos.target_length)
    best, best_d = candidates[0], np.inf
    for k in candidates:
        d = dtw_distance(protos.prototypes[k], s)
        if d < best_d:
            best, best_d = k, d
    return best


def nearest_teacher(student, protos, student_label=None, config=None, student_index=None):
    """The DTW-nearest prototype itself; see :func:`nearest_teacher_index`."""
    k = nearest_teacher_index(student, protos, student_label, config, student_index)
    return protos.prototypes[k]


def guided_warp(student, teacher) -> np.ndarray:
    """Rewrite ``student`` on the time axis of ``teacher``.

    Output step ``i`` is the student element that DTW matches to teacher
    step ``i``. The result has ``len(teacher)`` steps and the student's own
    first and last elements.
    """
    arr = np.asarray(student, dtype=np.float64)
    s = as_series(arr)
    res = dtw(teacher, s)
    out = s[res.path]
    return out[:, 0] if arr.ndim == 1 else out


def _warp_one(student, protos, label, config, index):
    s = _guard(as_series(student), protos.target_length)
    k = nearest_teacher_index(s, protos, label, config, index)
    return guided_warp(s, protos.prototypes[k]), k


def warp_dataset(
    ds: LabeledDataset,
    protos: PrototypeSet,
    config: NgwConfig,
    *,
    is_train: bool,
    jobs: int = 1,
) -> tuple[list[np.ndarray], list[int]]:
    """Warp every series of ``ds``; also return each series' teacher index.

    For the training set, prototype originals are replaced by their resampled
    selves (teacher index is their own prototype) and labels restrict the
    search when class-wise. Test series always search every prototype.
    """
    own = dict(zip(protos.source_indices, range(len(protos)))) if is_train else {}

    def work(i):
        if i in own:
            k = own[i]
            return protos.prototypes[k], k
        label = ds.labels[i] if is_train else None
        return _warp_one(ds.series[i], protos, label, config, i if is_train else None)

    results = parallel_map(work, range(len(ds)), jobs)
    return [r[0] for r in results], [r[1] for r in results]


def normalize_ngw(
    train: LabeledDataset,
    test: LabeledDataset,
    config: NgwConfig = NgwConfig(),
    jobs: int = 1,
) -> tuple[FixedLengthDataset, FixedLengthDataset]:
    """Fix every train and test series to one length with NGW.

    Prototypes are chosen from ``train`` alone. ``jobs`` spreads the
    per-series warping over threads without changing the result.
    """
    if train.dim != test.dim:
        raise ValueError(f"train and test dimensions differ ({train.dim} vs {test.dim})")
    protos = select_prototypes(train, config)
    tr, _ = warp_dataset(train, protos, config, is_train=True, jobs=jobs)
    te, _ = warp_dataset(test, protos, config, is_train=False, jobs=jobs)
    T = protos.target_length
    return (
        FixedLengthDataset(tr, list(train.labels), "train", target_length=T),
        FixedLengthDataset(te, list(test.labels), "test", target_length=T),
    )
