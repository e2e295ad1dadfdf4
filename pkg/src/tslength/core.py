"""Shared containers and elementary sequence operations.

A time series is a float64 ``numpy`` array of shape ``(T, dim)``. One
dimensional input of shape ``(T,)`` is accepted everywhere and treated as a
univariate series; the resamplers keep the input's ``ndim``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, TypeVar

import numpy as np

__all__ = [
    "FixedLengthDataset",
    "LabeledDataset",
    "as_series",
    "linear_resample",
    "nearest_resample",
    "parallel_map",
]

T = TypeVar("T")
R = TypeVar("R")


def as_series(x) -> np.ndarray:
    """Validate ``x`` and return it as a 2-D float64 array ``(T, dim)``."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"time series must be 1-D or 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"time series must have length >= 1 and dim >= 1, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("time series contains NaN or infinite values")
    return arr


@dataclass
class LabeledDataset:
    """Varying-length series with one class label each.

    ``series`` entries are normalized to ``(T, dim)`` float64 arrays on
    construction. ``role`` is ``"train"`` or ``"test"``.
    """

    series: list[np.ndarray]
    labels: list[str]
    role: str = "train"

    def __post_init__(self):
        self.series = [as_series(s) for s in self.series]
        self.labels = [str(lab) for lab in self.labels]
        if not self.series:
            raise ValueError("dataset must contain at least one series")
        if len(self.labels) != len(self.series):
            raise ValueError(
                f"got {len(self.series)} series but {len(self.labels)} labels"
            )
        dims = {s.shape[1] for s in self.series}
        if len(dims) != 1:
            raise ValueError(f"series have mixed dimensionality {sorted(dims)}")
        if self.role not in ("train", "test"):
            raise ValueError(f"role must be 'train' or 'test', got {self.role!r}")

    def __len__(self) -> int:
        return len(self.series)

    @property
    def dim(self) -> int:
        return self.series[0].shape[1]

    @property
    def lengths(self) -> np.ndarray:
        return np.array([s.shape[0] for s in self.series], dtype=np.int64)

    @property
    def classes(self) -> list[str]:
        """Distinct labels in order of first appearance."""
        return list(dict.fromkeys(self.labels))


@dataclass
class FixedLengthDataset(LabeledDataset):
    """A :class:`LabeledDataset` whose series all have ``target_length`` steps."""

    target_length: int = field(default=0, kw_only=True)

    def __post_init__(self):
        super().__post_init__()
        if self.target_length < 1:
            raise ValueError("target_length must be a positive integer")
        bad = [i for i, s in enumerate(self.series) if s.shape[0] != self.target_length]
        if bad:
            raise ValueError(
                f"{len(bad)} series differ from target_length={self.target_length} "
                f"(first offending index {bad[0]})"
            )

    def to_array(self) -> np.ndarray:
        """Stack into a ``(n, target_length, dim)`` array, ready for batching."""
        return np.stack(self.series)


def _check_target(target_length: int) -> int:
    if int(target_length) != target_length or target_length < 1:
        raise ValueError(f"target_length must be a positive integer, got {target_length!r}")
    return int(target_length)


def linear_resample(s, target_length: int) -> np.ndarray:
    """Stretch or shrink ``s`` to ``target_length`` steps by linear interpolation.

    Output step ``k`` samples the piecewise-linear interpolant of ``s`` at
    source coordinate ``k * (L - 1) / (target_length - 1)``, so the first and
    last observations are kept exactly. ``target_length == 1`` returns the
    first element.
    """
    target_length = _check_target(target_length)
    arr = np.asarray(s, dtype=np.float64)
    x = as_series(arr)
    n = x.shape[0]
    if target_length == 1:
        out = x[:1].copy()
    elif n == 1:
        out = np.repeat(x, target_length, axis=0)
    else:
        coords = np.arange(target_length) * (n - 1) / (target_length - 1)
        src = np.arange(n, dtype=np.float64)
        out = np.column_stack([np.interp(coords, src, x[:, d]) for d in range(x.shape[1])])
    return out[:, 0] if arr.ndim == 1 else out


def nearest_index_map(length: int, target_length: int) -> np.ndarray:
    """Source indices used by :func:`nearest_resample`.

    Rounds ``k * (length - 1) / (target_length - 1)`` half toward zero, in
    exact integer arithmetic.
    """
    target_length = _check_target(target_length)
    if target_length == 1:
        return np.zeros(1, dtype=np.int64)
    num = np.arange(target_length, dtype=np.int64) * (length - 1)
    den = target_length - 1
    # ceil((2*num - den) / (2*den)) == round-half-down(num / den) for num >= 0
    return -((den - 2 * num) // (2 * den))


def nearest_resample(s, target_length: int) -> np.ndarray:
    """Resample by repeating (or dropping) time steps; no new values are made."""
    arr = np.asarray(s, dtype=np.float64)
    x = as_series(arr)
    idx = nearest_index_map(x.shape[0], target_length)
    out = x[idx]
    return out[:, 0] if arr.ndim == 1 else out


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, optionally spread over ``jobs`` threads.

    Results keep input order. The DTW kernels release the GIL, so threads
    give real speedups for the heavy paths.
    """
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))

