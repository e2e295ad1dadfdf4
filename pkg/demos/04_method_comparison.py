"""
Ranking all 21 methods with a 1-NN classifier
=============================================

Uses ``$UCR_ARCHIVE/GestureMidAirD1`` when available, a synthetic stand-in
otherwise. Values are min-max scaled to [-1, 1] on the training split, then
every method is applied and scored by 1-NN under Euclidean distance (pass
``dtw`` for the slower DTW metric).
"""

# %%
import sys

from tslength import all_specs, apply_minmax, compare_methods, fit_minmax, length_stats, load_split
from tslength.evaluation import reports_to_csv
from tslength.io import default_archive_dir, synthetic_dataset

metric = sys.argv[1] if len(sys.argv) > 1 else "euclidean"
root = default_archive_dir()
if root is not None:
    train, test = load_split(root, "GestureMidAirD1")
else:
    train = synthetic_dataset(120, (80, 360), n_classes=6, seed=9, noise=0.8)
    test = synthetic_dataset(80, (80, 360), n_classes=6, seed=10, role="test", noise=0.8)
print("train", length_stats(train), "| test", length_stats(test))

# %%
scaler = fit_minmax(train)
train, test = apply_minmax(train, scaler), apply_minmax(test, scaler)
reports = compare_methods(train, test, all_specs(seed=42), metric=metric)
print(reports_to_csv(reports))
