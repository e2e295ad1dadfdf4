"""Length normalization for datasets of varying-length time series.

Nearest Guided Warping (:func:`normalize_ngw`) stretches every series onto
the time axis of its DTW-nearest long training series. Seventeen padding,
truncation and resampling baselines share the same dataset-level interface
through :func:`normalize`.
"""

from .core import FixedLengthDataset, LabeledDataset, linear_resample, nearest_resample
from .dtw import UnreachableAlignment, dtw, dtw_distance, local_cost
from .evaluation import EvalReport, compare_methods, one_nn_classify
from .io import (
    apply_minmax,
    fit_minmax,
    length_stats,
    load_split,
    load_ucr_tsv,
    synthetic_dataset,
    write_fixed_tsv,
)
from .methods import NormalizerSpec, all_specs, normalize, parse_spec
from .ngw import NgwConfig, guided_warp, nearest_teacher, normalize_ngw, select_prototypes

__version__ = "0.1.0"

__all__ = [
    "EvalReport",
    "FixedLengthDataset",
    "LabeledDataset",
    "NgwConfig",
    "NormalizerSpec",
    "UnreachableAlignment",
    "all_specs",
    "apply_minmax",
    "compare_methods",
    "dtw",
    "dtw_distance",
    "fit_minmax",
    "guided_warp",
    "length_stats",
    "linear_resample",
    "load_split",
    "load_ucr_tsv",
    "local_cost",
    "nearest_resample",
    "nearest_teacher",
    "normalize",
    "normalize_ngw",
    "one_nn_classify",
    "parse_spec",
    "select_prototypes",
    "synthetic_dataset",
    "write_fixed_tsv",
]
