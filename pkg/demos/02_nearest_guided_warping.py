"""
Nearest Guided Warping on a synthetic dataset
=============================================

The longest 40% of the training series become prototypes, resampled to a
common length. Each remaining series is warped onto its DTW-nearest
prototype. Compare one series under zero padding, linear resampling and NGW.
Set ``SAVE_PLOT=1`` to write ``ngw_demo.png`` (needs matplotlib).
"""

# %%
import os

import numpy as np

from tslength import NgwConfig, normalize, normalize_ngw, select_prototypes, synthetic_dataset

train = synthetic_dataset(30, (20, 120), n_classes=3, seed=0)
test = synthetic_dataset(10, (20, 120), n_classes=3, seed=1, role="test")
print("train lengths:", sorted(train.lengths.tolist()))

# %%
cfg = NgwConfig(alpha=0.4, beta=0.7)
protos = select_prototypes(train, cfg)
print(f"{len(protos)} prototypes from train indices {protos.source_indices}")
print("target length (0.7 quantile of train lengths):", protos.target_length)

# %%
ngw_train, ngw_test = normalize_ngw(train, test, cfg)
zero_train, _ = normalize(train, test, "zero_pad:post")
res_train, _ = normalize(train, test, "resample")

k = int(np.argmin(train.lengths))
print(f"shortest series #{k}: {train.lengths[k]} steps")
print("  NGW      ->", ngw_train.series[k].shape[0])
print("  zero pad ->", zero_train.series[k].shape[0])
print("  resample ->", res_train.series[k].shape[0])
print("endpoints kept by NGW:",
      ngw_train.series[k][0, 0] == train.series[k][0, 0],
      ngw_train.series[k][-1, 0] == train.series[k][-1, 0])

# %%
if os.environ.get("SAVE_PLOT"):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(4, 1, figsize=(7, 8), sharey=True)
    for ax, (title, s) in zip(axes, [
        ("original", train.series[k]),
        ("zero pad (post)", zero_train.series[k]),
        ("resample", res_train.series[k]),
        ("NGW a=0.4 b=0.7", ngw_train.series[k]),
    ]):
        ax.plot(s[:, 0])
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig("ngw_demo.png", dpi=120)
    print("wrote ngw_demo.png")
