"""
The comparison methods on a single toy series
=============================================

Padding (zero, edge, noise at several positions), truncation, linear
resampling, STRP/random zero insertion and zoom padding, all applied to the
same short series.
"""

# %%
import numpy as np

from tslength.baselines import pad, random_pad, strp_pad, truncate, zoom_pad
from tslength.core import linear_resample

s = np.array([1.0, 2.0, 3.0, 4.0])
rng = np.random.default_rng(0)

rows = {
    "zero pre": pad(s, 8, "zero", "pre"),
    "zero outer": pad(s, 8, "zero", "outer"),
    "zero mid": pad(s, 8, "zero", "mid"),
    "edge outer": pad(s, 8, "edge", "outer"),
    "noise post": pad(s, 8, "noise", "post", rng),
    "strp": strp_pad(s, 8),
    "random": random_pad(s, 8, seed=0),
    "zoom": zoom_pad(s, 8),
    "resample": linear_resample(s, 8),
    "truncate outer": truncate(s, 2, "outer"),
}
with np.printoptions(precision=4, suppress=True):
    for name, out in rows.items():
        print(f"{name:>15}: {out}")
