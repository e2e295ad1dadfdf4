"""UCR 2018 archive files, min-max scaling and length statistics.

UCR files are tab separated: a class label followed by the values of one
univariate series. Varying-length series are padded on the right with
``NaN`` (or simply end early).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import FixedLengthDataset, LabeledDataset

__all__ = [
    "EmptyFile",
    "InteriorNaN",
    "LengthStats",
    "MalformedRow",
    "MinMaxScaler",
    "apply_minmax",
    "dataset_paths",
    "fit_minmax",
    "length_stats",
    "load_split",
    "load_ucr_tsv",
    "synthetic_dataset",
    "write_fixed_tsv",
    "write_ucr_tsv",
]


class DatasetError(ValueError):
    pass


class MalformedRow(DatasetError):
    pass


class InteriorNaN(DatasetError):
    pass


class EmptyFile(DatasetError):
    pass


def _parse_row(line: str, path, lineno: int):
    fields = line.rstrip("\r\n").split("\t")
    label = fields[0].strip()
    values = []
    for f in fields[1:]:
        f = f.strip()
        if f == "" or f.lower() == "nan":
            values.append(math.nan)
            continue
        try:
            values.append(float(f))
        except ValueError:
            raise MalformedRow(f"{path}:{lineno}: non-numeric value {f!r}") from None
    arr = np.asarray(values, dtype=np.float64)
    finite = np.flatnonzero(~np.isnan(arr))
    if finite.size == 0:
        raise MalformedRow(f"{path}:{lineno}: row has no values")
    n = finite[-1] + 1
    if np.isnan(arr[:n]).any():
        raise InteriorNaN(f"{path}:{lineno}: NaN followed by a value")
    if not np.all(np.isfinite(arr[:n])):
        raise MalformedRow(f"{path}:{lineno}: infinite value")
    return label, arr[:n]


def load_ucr_tsv(path, role: str | None = None) -> LabeledDataset:
    """Read one UCR split; trailing ``NaN``/empty fields are trimmed.

    ``role`` defaults to ``"test"`` for files whose name contains ``TEST``
    and ``"train"`` otherwise.
    """
    path = Path(path)
    if role is None:
        role = "test" if "TEST" in path.name.upper() else "train"
    series, labels = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            label, values = _parse_row(line, path, lineno)
            labels.append(label)
            series.append(values)
    if not series:
        raise EmptyFile(f"{path}: no rows")
    return LabeledDataset(series, labels, role)


def _format_row(label: str, values: np.ndarray, width: int) -> str:
    cells = [repr(float(v)) for v in values]
    cells += ["NaN"] * (width - len(cells))
    return "\t".join([label, *cells]) + "\n"


def write_ucr_tsv(ds: LabeledDataset, path) -> None:
    """Write a univariate dataset, right-padding shorter rows with ``NaN``.

    Values are written with ``repr`` (shortest round-tripping form) so a
    reload gives bit-identical floats.
    """
    if ds.dim != 1:
        raise ValueError("the UCR file layout holds univariate series only")
    width = int(ds.lengths.max())
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            for label, s in zip(ds.labels, ds.series):
                fh.write(_format_row(label, s[:, 0], width))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def write_fixed_tsv(ds: FixedLengthDataset, path) -> None:
    """Write a fixed-length dataset (no padding is ever needed)."""
    write_ucr_tsv(ds, path)


def dataset_paths(dataset_dir, name: str) -> tuple[Path, Path]:
    """Locate ``<name>_TRAIN.tsv`` and ``<name>_TEST.tsv``.

    Both the archive layout ``<dir>/<name>/<name>_TRAIN.tsv`` and a flat
    ``<dir>/<name>_TRAIN.tsv`` are accepted.
    """
    root = Path(dataset_dir)
    for base in (root / name, root):
        train, test = base / f"{name}_TRAIN.tsv", base / f"{name}_TEST.tsv"
        if train.is_file() and test.is_file():
            return train, test
    raise FileNotFoundError(f"no {name}_TRAIN.tsv/{name}_TEST.tsv under {root}")


def load_split(dataset_dir, name: str) -> tuple[LabeledDataset, LabeledDataset]:
    train, test = dataset_paths(dataset_dir, name)
    return load_ucr_tsv(train, "train"), load_ucr_tsv(test, "test")


def default_archive_dir() -> Path | None:
    """``$UCR_ARCHIVE`` if it points at a directory."""
    env = os.environ.get("UCR_ARCHIVE")
    return Path(env) if env and Path(env).is_dir() else None


@dataclass(frozen=True)
class MinMaxScaler:
    """Per-dimension extrema of a training set."""

    min_val: np.ndarray
    max_val: np.ndarray

    def transform(self, ds: LabeledDataset) -> LabeledDataset:
        return apply_minmax(ds, self)


def fit_minmax(train: LabeledDataset) -> MinMaxScaler:
    allv = np.concatenate(train.series, axis=0)
    return MinMaxScaler(allv.min(axis=0), allv.max(axis=0))


def apply_minmax(ds: LabeledDataset, scaler: MinMaxScaler) -> LabeledDataset:
    """Map ``[min, max]`` to ``[-1, 1]`` per dimension; nothing is clamped.

    A constant dimension (``max == min``) maps to 0.
    """
    lo = np.asarray(scaler.min_val, dtype=np.float64)
    hi = np.asarray(scaler.max_val, dtype=np.float64)
    if lo.shape != (ds.dim,):
        raise ValueError(f"scaler has {lo.size} dimensions, dataset has {ds.dim}")
    span = hi - lo
    flat = span == 0
    safe = np.where(flat, 1.0, span)

    def scale(s):
        out = 2.0 * (s - lo) / safe - 1.0
        out[:, flat] = 0.0
        return out

    cls = type(ds)
    kwargs = {"target_length": ds.target_length} if isinstance(ds, FixedLengthDataset) else {}
    return cls([scale(s) for s in ds.series], list(ds.labels), ds.role, **kwargs)


@dataclass(frozen=True)
class LengthStats:
    min_length: int
    max_length: int
    mean_length: float

    def __str__(self):
        return f"min={self.min_length} max={self.max_length} mean={self.mean_length:.1f}"


def length_stats(ds: LabeledDataset) -> LengthStats:
    lengths = ds.lengths
    return LengthStats(int(lengths.min()), int(lengths.max()), float(lengths.mean()))


def synthetic_dataset(
    n_series: int = 50,
    length_range: tuple[int, int] = (10, 300),
    n_classes: int = 3,
    seed: int = 0,
    role: str = "train",
    noise: float = 0.1,
) -> LabeledDataset:
    """Random-length univariate series from a few distinct waveform classes.

    Class ``c`` is a sine with ``c + 1`` periods, a square wave or a ramp
    (cycling through the three shapes), sampled at a random length in
    ``length_range`` (inclusive) with Gaussian noise and a random phase.
    """
    rng = np.random.default_rng(seed)
    lo, hi = length_range
    series, labels = [], []
    for i in range(n_series):
        c = i % n_classes
        L = int(rng.integers(lo, hi + 1))
        t = np.linspace(0.0, 1.0, L)
        phase = rng.uniform(0, 0.2)
        periods = c // 3 + 1
        shape = c % 3
        base = np.sin(2 * np.pi * periods * (t + phase))
        if shape == 1:
            base = np.sign(base)
        elif shape == 2:
            base = 2.0 * ((periods * (t + phase)) % 1.0) - 1.0
        series.append(base + noise * rng.standard_normal(L))
        labels.append(str(c + 1))
    return LabeledDataset(series, labels, role)
