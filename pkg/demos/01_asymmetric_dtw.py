"""
Asymmetric DTW: one match per teacher step
==========================================

The DTW used here lets the teacher advance one step at a time while the
student advances 0, 1 or 2 steps. Every alignment therefore has exactly as
many matches as the teacher has steps, which is what makes guided warping
produce fixed-length output.
"""

# %%
import numpy as np

from tslength import dtw, dtw_distance, UnreachableAlignment
from tslength.dtw import cumulative_matrix

teacher = np.sin(np.linspace(0, 2 * np.pi, 12))
student = np.sin(np.linspace(0, 2 * np.pi, 7) + 0.3)

result = dtw(teacher, student)
print("distance:", round(result.distance, 4))
print("student step matched to each teacher step:", result.path.tolist())
print("matches:", len(result.path), "== teacher length", len(teacher))

# %%
# Cells in the first row beyond (0, 0) are unreachable, and so is anything
# right of column 2*i.
D = cumulative_matrix(teacher[:4], student[:6])
with np.printoptions(precision=2, suppress=True):
    print(D)

# %%
# A student can be at most 2 * len(teacher) - 1 steps long.
try:
    dtw_distance(teacher[:3], student)
except UnreachableAlignment as exc:
    print("rejected:", exc)
