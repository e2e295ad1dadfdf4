"""Named normalization methods and dataset-level application.

A method string is ``name[:position]``, e.g. ``zero_pad:pre``,
``truncate:outer``, ``resample`` or ``ngw_cw``. :func:`all_specs` lists the
21 standard configurations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import baselines as bl
from .core import FixedLengthDataset, LabeledDataset, linear_resample, parallel_map
from .ngw import NgwConfig, normalize_ngw

__all__ = [
    "NormalizerSpec",
    "all_specs",
    "normalize",
    "normalize_baseline",
    "parse_spec",
    "valid_method_strings",
]

VALID_POSITIONS = {
    "zero_pad": ("pre", "post", "outer", "mid"),
    "edge_pad": ("pre", "post", "outer"),
    "noise_pad": ("pre", "post", "outer"),
    "truncate": ("pre", "post", "outer"),
    "resample": (),
    "strp_pad": (),
    "random_pad": (),
    "zoom_pad": (),
    "ngw": (),
    "ngw_cw": (),
}

_PAD_FILLER = {"zero_pad": "zero", "edge_pad": "edge", "noise_pad": "noise"}


def valid_method_strings() -> list[str]:
    out = []
    for name, positions in VALID_POSITIONS.items():
        if positions:
            out.extend(f"{name}:{p}" for p in positions)
        else:
            out.append(name)
    return out


@dataclass(frozen=True)
class NormalizerSpec:
    method: str
    position: str = "n/a"
    seed: int = 42
    ngw: NgwConfig | None = field(default=None)

    def __post_init__(self):
        if self.method not in VALID_POSITIONS:
            raise ValueError(
                f"unknown method {self.method!r}; valid: {', '.join(valid_method_strings())}"
            )
        allowed = VALID_POSITIONS[self.method]
        if (allowed and self.position not in allowed) or (not allowed and self.position != "n/a"):
            raise ValueError(
                f"invalid method {self.method}:{self.position}; "
                f"valid: {', '.join(valid_method_strings())}"
            )
        if self.method.startswith("ngw"):
            cw = self.method == "ngw_cw"
            cfg = self.ngw or NgwConfig()
            if cfg.class_wise != cw:
                cfg = NgwConfig(cfg.alpha, cfg.beta, cw)
            object.__setattr__(self, "ngw", cfg)

    @property
    def name(self) -> str:
        """Method string, with NGW quantiles folded in (``ngw_cw(a=0.4;b=0.7)``)."""
        if self.ngw is not None:
            return f"{self.method}(a={self.ngw.alpha:g};b={self.ngw.beta:g})"
        return self.method if self.position == "n/a" else f"{self.method}:{self.position}"


def parse_spec(text: str, *, seed: int = 42, alpha: float = 0.4, beta: float = 1.0) -> NormalizerSpec:
    """Parse ``name[:position]``; ``alpha``/``beta`` apply to NGW methods only."""
    name, _, position = text.strip().partition(":")
    ngw = NgwConfig(alpha, beta, name == "ngw_cw") if name.startswith("ngw") else None
    return NormalizerSpec(name, position or "n/a", seed, ngw)


def all_specs(seed: int = 42, alpha: float = 0.4, beta: float = 0.7) -> list[NormalizerSpec]:
    """The 17 comparison methods plus NGW-a, NGW-a CW, NGW-ab and NGW-ab CW."""
    specs = [
        NormalizerSpec(m, p, seed)
        for m in ("zero_pad", "edge_pad", "noise_pad", "truncate")
        for p in VALID_POSITIONS[m]
    ]
    specs += [NormalizerSpec(m, seed=seed) for m in ("resample", "strp_pad", "random_pad", "zoom_pad")]
    for b in (1.0, beta):
        for m in ("ngw", "ngw_cw"):
            specs.append(NormalizerSpec(m, seed=seed, ngw=NgwConfig(alpha, b, m == "ngw_cw")))
    return specs


def _transform(spec: NormalizerSpec, s: np.ndarray, target: int, index: int, role: str):
    m = spec.method
    if m == "truncate":
        return bl.truncate(s, target, spec.position)
    if m == "resample":
        return bl.resample(s, target)
    if m == "zoom_pad":
        return bl.zoom_pad(s, target)
    # padding family: a test series longer than the train maximum is shrunk first
    if s.shape[0] > target:
        s = linear_resample(s, target)
    if m in _PAD_FILLER:
        rng = bl.series_rng(spec.seed, index, role) if m == "noise_pad" else None
        return bl.pad(s, target, _PAD_FILLER[m], spec.position, rng)
    if m == "strp_pad":
        return bl.strp_pad(s, target)
    if m == "random_pad":
        return bl.random_pad(s, target, bl.series_rng(spec.seed, index, role))
    raise ValueError(f"{m!r} is not a baseline method")


def baseline_target_length(train: LabeledDataset, spec: NormalizerSpec) -> int:
    lengths = train.lengths
    return int(lengths.min() if spec.method == "truncate" else lengths.max())


def normalize_baseline(
    train: LabeledDataset, test: LabeledDataset, spec: NormalizerSpec, jobs: int = 1
) -> tuple[FixedLengthDataset, FixedLengthDataset]:
    target = baseline_target_length(train, spec)
    out = []
    for ds in (train, test):
        series = parallel_map(
            lambda i: _transform(spec, ds.series[i], target, i, ds.role), range(len(ds)), jobs
        )
        out.append(FixedLengthDataset(series, list(ds.labels), ds.role, target_length=target))
    return out[0], out[1]


def normalize(
    train: LabeledDataset, test: LabeledDataset, spec: NormalizerSpec | str, jobs: int = 1
) -> tuple[FixedLengthDataset, FixedLengthDataset]:
    """Apply any method to a train/test pair. The train split sets the length."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if train.dim != test.dim:
        raise ValueError(f"train and test dimensions differ ({train.dim} vs {test.dim})")
    if spec.ngw is not None:
        return normalize_ngw(train, test, spec.ngw, jobs=jobs)
    return normalize_baseline(train, test, spec, jobs)
