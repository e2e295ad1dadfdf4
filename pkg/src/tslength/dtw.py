"""Dynamic time warping with an asymmetric slope constraint.

The teacher (prototype) indexes the rows and the student the columns. Each
teacher step ``i`` is reached from ``(i-1, j)``, ``(i-1, j-1)`` or
``(i-1, j-2)``, so every alignment path visits every teacher step exactly
once and has exactly ``len(teacher)`` matches. There is no window.

Boundary handling: ``D[0, 0]`` is the first local cost, ``D[i, 0]``
accumulates down the first column and ``D[0, j > 0]`` is unreachable. A
student of length ``J`` can only be aligned when ``J <= 2 * I - 1``.

Indices in this module are 0-based.
"""

from __future__ import annotations

from typing import NamedTuple

import numba as nb
import numpy as np

from .core import as_series

__all__ = [
    "DtwResult",
    "UnreachableAlignment",
    "cost_matrix",
    "cumulative_matrix",
    "dtw",
    "dtw_distance",
    "local_cost",
    "max_student_length",
]


class UnreachableAlignment(ValueError):
    """The student is too long to be aligned under the slope constraint.

    Resample the student to at most ``2 * len(teacher) - 1`` steps first.
    """


class DtwResult(NamedTuple):
    distance: float
    path: np.ndarray  # student index matched to each teacher step, 0-based


def max_student_length(teacher_length: int) -> int:
    """Longest student alignable to a teacher of ``teacher_length`` steps."""
    return 2 * teacher_length - 1


def local_cost(a, b) -> float:
    """Euclidean distance between two element vectors."""
    a = np.atleast_1d(np.asarray(a, dtype=np.float64))
    b = np.atleast_1d(np.asarray(b, dtype=np.float64))
    if a.shape != b.shape:
        raise ValueError(f"element dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.sum((a - b) ** 2)))


@nb.njit(cache=True, nogil=True)
def _cost_matrix(p, s):
    n, m = p.shape[0], s.shape[0]
    dim = p.shape[1]
    C = np.empty((n, m))
    for i in range(n):
        for j in range(m):
            acc = 0.0
            for d in range(dim):
                diff = p[i, d] - s[j, d]
                acc += diff * diff
            C[i, j] = np.sqrt(acc)
    return C


@nb.njit(cache=True, nogil=True)
def _accumulate(C):
    n, m = C.shape
    D = np.full((n, m), np.inf)
    D[0, 0] = C[0, 0]
    for i in range(1, n):
        # columns beyond 2*i are unreachable from (0, 0)
        hi = min(m, 2 * i + 1)
        for j in range(hi):
            best = D[i - 1, j]
            if j >= 1 and D[i - 1, j - 1] < best:
                best = D[i - 1, j - 1]
            if j >= 2 and D[i - 1, j - 2] < best:
                best = D[i - 1, j - 2]
            D[i, j] = C[i, j] + best
    return D


@nb.njit(cache=True, nogil=True)
def _traceback(D):
    n, m = D.shape
    path = np.empty(n, dtype=np.int64)
    j = m - 1
    path[n - 1] = j
    for i in range(n - 1, 0, -1):
        # preference order on ties: diagonal, vertical, skip
        best_j = -1
        best = np.inf
        if j >= 1 and D[i - 1, j - 1] < best:
            best = D[i - 1, j - 1]
            best_j = j - 1
        if D[i - 1, j] < best:
            best = D[i - 1, j]
            best_j = j
        if j >= 2 and D[i - 1, j - 2] < best:
            best = D[i - 1, j - 2]
            best_j = j - 2
        j = best_j
        path[i - 1] = j
    return path


@nb.njit(cache=True, nogil=True)
def _dtw_kernel(p, s, with_path):
    D = _accumulate(_cost_matrix(p, s))
    dist = D[p.shape[0] - 1, s.shape[0] - 1]
    if with_path:
        return dist, _traceback(D)
    return dist, np.empty(0, dtype=np.int64)


def _prepare(teacher, student):
    p = as_series(teacher)
    s = as_series(student)
    if p.shape[1] != s.shape[1]:
        raise ValueError(
            f"teacher and student dimensions differ ({p.shape[1]} vs {s.shape[1]})"
        )
    limit = max_student_length(p.shape[0])
    if s.shape[0] > limit:
        raise UnreachableAlignment(
            f"student length {s.shape[0]} exceeds {limit} = 2 * teacher length - 1"
        )
    return np.ascontiguousarray(p), np.ascontiguousarray(s)


def cost_matrix(teacher, student) -> np.ndarray:
    """Pairwise Euclidean local costs, shape ``(len(teacher), len(student))``."""
    p = as_series(teacher)
    s = as_series(student)
    if p.shape[1] != s.shape[1]:
        raise ValueError("teacher and student dimensions differ")
    return _cost_matrix(np.ascontiguousarray(p), np.ascontiguousarray(s))


def cumulative_matrix(teacher, student) -> np.ndarray:
    """Cumulative cost matrix ``D``; unreachable cells hold ``inf``."""
    return _accumulate(cost_matrix(teacher, student))


def dtw(teacher, student) -> DtwResult:
    """Align ``student`` to ``teacher``.

    Returns the global distance ``D[I-1, J-1]`` and the warp path, an integer
    array of length ``len(teacher)`` giving the student step matched to each
    teacher step. The path starts at 0, ends at ``len(student) - 1`` and
    advances by 0, 1 or 2 per teacher step.

    Raises
    ------
    UnreachableAlignment
        If ``len(student) > 2 * len(teacher) - 1``.
    """
    p, s = _prepare(teacher, student)
    dist, path = _dtw_kernel(p, s, True)
    return DtwResult(float(dist), path)


def dtw_distance(teacher, student) -> float:
    """Distance component of :func:`dtw` (no traceback)."""
    p, s = _prepare(teacher, student)
    dist, _ = _dtw_kernel(p, s, False)
    return float(dist)
