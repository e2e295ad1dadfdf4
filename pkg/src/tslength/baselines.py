"""Padding, truncation and stretching baselines for length normalization.

Per-series operations take and return ``(T, dim)`` arrays (1-D input stays
1-D). Target lengths always come from the training split: the longest
training series for the padding and stretching methods, the shortest for
truncation.
"""

from __future__ import annotations

import numpy as np

from .core import as_series, linear_resample, nearest_resample

__all__ = [
    "NOISE_HIGH",
    "pad",
    "random_pad",
    "series_rng",
    "strp_pad",
    "truncate",
    "zoom_pad",
]

NOISE_HIGH = 1e-3

PAD_POSITIONS = ("pre", "post", "outer", "mid")
TRUNCATE_POSITIONS = ("pre", "post", "outer")


def series_rng(seed: int, index: int, role: str = "train") -> np.random.Generator:
    """Independent generator for one series, stable under any processing order."""
    role_key = {"train": 0, "test": 1}.get(role, 2)
    return np.random.default_rng(np.random.SeedSequence([int(seed), role_key, int(index)]))


def _keep_ndim(arr, out):
    return out[:, 0] if np.ndim(arr) == 1 else out


def _filler(kind, n, dim, rng, edge_value=None):
    if kind == "zero":
        return np.zeros((n, dim))
    if kind == "edge":
        return np.repeat(edge_value[None, :], n, axis=0)
    if kind == "noise":
        if rng is None:
            raise ValueError("noise padding needs a random generator")
        return rng.uniform(0.0, NOISE_HIGH, size=(n, dim))
    raise ValueError(f"unknown filler {kind!r}; expected 'zero', 'edge' or 'noise'")


def pad(s, target_length: int, filler: str = "zero", position: str = "post", rng=None):
    """Pad ``s`` to ``target_length`` steps.

    Parameters
    ----------
    filler : {'zero', 'edge', 'noise'}
        Zeros, copies of the adjacent original element, or per-entry draws
        from ``uniform(0, 0.001)`` taken from ``rng``.
    position : {'pre', 'post', 'outer', 'mid'}
        Where the filler goes. ``outer`` splits it around the series with
        the odd element after; ``mid`` cuts the series after
        ``ceil(L / 2)`` elements and puts all filler in the cut.
    """
    x = as_series(s)
    L, dim = x.shape
    if L > target_length:
        raise ValueError(f"series of length {L} is longer than target {target_length}")
    n = target_length - L
    if position == "pre":
        out = np.vstack([_filler(filler, n, dim, rng, x[0]), x])
    elif position == "post":
        out = np.vstack([x, _filler(filler, n, dim, rng, x[-1])])
    elif position == "outer":
        before = n // 2
        out = np.vstack([
            _filler(filler, before, dim, rng, x[0]),
            x,
            _filler(filler, n - before, dim, rng, x[-1]),
        ])
    elif position == "mid":
        cut = -(-L // 2)
        out = np.vstack([x[:cut], _filler(filler, n, dim, rng, x[cut - 1]), x[cut:]])
    else:
        raise ValueError(f"unknown pad position {position!r}; expected one of {PAD_POSITIONS}")
    return _keep_ndim(s, out)


def truncate(s, target_length: int, position: str = "post"):
    """Cut ``s`` down to ``target_length`` steps.

    ``pre`` keeps the last steps, ``post`` the first, ``outer`` drops
    ``floor(excess / 2)`` from the front and the rest from the back. A series
    already shorter than the target is zero padded at the end instead.
    """
    if position not in TRUNCATE_POSITIONS:
        raise ValueError(f"unknown truncate position {position!r}; expected one of {TRUNCATE_POSITIONS}")
    x = as_series(s)
    L = x.shape[0]
    if L <= target_length:
        return pad(s, target_length, "zero", "post")
    excess = L - target_length
    start = {"pre": excess, "post": 0, "outer": excess // 2}[position]
    return _keep_ndim(s, x[start:start + target_length].copy())


def _insert_zeros(x, zero_slots, target_length):
    out = np.zeros((target_length, x.shape[1]))
    keep = np.ones(target_length, dtype=bool)
    keep[zero_slots] = False
    out[keep] = x
    return out


def strp_gap_positions(length: int, n_pad: int) -> np.ndarray:
    """Original index each inserted zero follows, for :func:`strp_pad`.

    Zero ``k`` of ``n_pad`` goes after original index
    ``floor((k + 1) * L / (n_pad + 1)) - 1``, clamped to ``[0, L - 1]``.
    """
    k = np.arange(n_pad, dtype=np.int64)
    return np.clip((k + 1) * length // (n_pad + 1) - 1, 0, length - 1)


def strp_pad(s, target_length: int, return_positions: bool = False):
    """Spread zeros evenly through ``s`` until it has ``target_length`` steps.

    With ``return_positions`` the output slots holding inserted zeros are
    returned as well.
    """
    x = as_series(s)
    L = x.shape[0]
    if L > target_length:
        raise ValueError(f"series of length {L} is longer than target {target_length}")
    after = strp_gap_positions(L, target_length - L)
    # each zero lands after its original and after the zeros placed before it
    slots = after + 1 + np.arange(after.size)
    out = _keep_ndim(s, _insert_zeros(x, slots, target_length))
    return (out, slots) if return_positions else out


def random_pad(s, target_length: int, seed=0, return_positions: bool = False):
    """Insert zeros at uniformly random slots; ``seed`` may be an int or a Generator."""
    x = as_series(s)
    L = x.shape[0]
    if L > target_length:
        raise ValueError(f"series of length {L} is longer than target {target_length}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    slots = np.sort(rng.choice(target_length, size=target_length - L, replace=False))
    out = _keep_ndim(s, _insert_zeros(x, slots, target_length))
    return (out, slots) if return_positions else out


def zoom_pad(s, target_length: int):
    """Stretch by repeating time steps (nearest-neighbour resampling)."""
    return nearest_resample(s, target_length)


def resample(s, target_length: int):
    return linear_resample(s, target_length)
