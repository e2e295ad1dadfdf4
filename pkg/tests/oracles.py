"""Independent reference computations used by the tests.

Nothing here imports the package's DTW or quantile code.
"""

from functools import lru_cache
from itertools import product

import numpy as np


@lru_cache(maxsize=None)
def all_paths(I, J):
    """Every warp path (0-based student index per teacher step) from (0,0) to (I-1,J-1).

    Steps advance the student index by 0, 1 or 2 per teacher step.
    """
    rows = []
    for steps in product((0, 1, 2), repeat=I - 1):
        if sum(steps) == J - 1:
            rows.append(np.concatenate([[0], np.cumsum(steps, dtype=np.int64)]))
    return np.array(rows, dtype=np.int64).reshape(len(rows), I)


def euclid_costs(teacher, student):
    p = np.asarray(teacher, dtype=float).reshape(len(teacher), -1)
    s = np.asarray(student, dtype=float).reshape(len(student), -1)
    return np.sqrt(((p[:, None, :] - s[None, :, :]) ** 2).sum(-1))


def brute_force_dtw(teacher, student):
    """(minimum cost, all minimizing paths) by exhaustive enumeration."""
    C = euclid_costs(teacher, student)
    I, J = C.shape
    paths = all_paths(I, J)
    if len(paths) == 0:
        return np.inf, paths
    costs = C[np.arange(I)[None, :], paths].sum(axis=1)
    best = costs.min()
    return best, paths[np.isclose(costs, best, rtol=0, atol=1e-12)]


def sorted_rank_quantile(values, q):
    """Nearest-rank quantile by sorting and counting."""
    v = sorted(values)
    n = len(v)
    rank = 1
    while rank < n and rank < q * n - 1e-9:
        rank += 1
    return v[rank - 1]
