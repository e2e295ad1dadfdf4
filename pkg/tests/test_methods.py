import numpy as np
import pytest

from tslength import LabeledDataset
from tslength.methods import NormalizerSpec, all_specs, normalize, parse_spec, valid_method_strings
from tslength.ngw import NgwConfig


def test_all_specs_count_and_names():
    specs = all_specs()
    assert len(specs) == 21
    names = [s.name for s in specs]
    assert len(set(names)) == 21
    assert "zero_pad:mid" in names and "edge_pad:mid" not in names
    assert "ngw(a=0.4;b=1)" in names and "ngw_cw(a=0.4;b=0.7)" in names


@pytest.mark.parametrize("text", ["edge_pad:mid", "truncate:mid", "resample:pre", "bogus", "zero_pad"])
def test_invalid_combinations_rejected(text):
    with pytest.raises(ValueError):
        parse_spec(text)


def test_parse_roundtrip():
    for text in valid_method_strings():
        spec = parse_spec(text)
        if spec.ngw is None:
            assert spec.name == text
    spec = parse_spec("ngw_cw", alpha=0.3, beta=0.6)
    assert spec.ngw == NgwConfig(0.3, 0.6, True)


def test_ngw_config_class_wise_follows_method():
    spec = NormalizerSpec("ngw_cw", ngw=NgwConfig(0.4, 1.0, False))
    assert spec.ngw.class_wise


def test_targets_come_from_train(rng, make_dataset):
    train = make_dataset(rng, 12, 20, 40)
    test = make_dataset(rng, 12, 5, 60, role="test")
    lo, hi = train.lengths.min(), train.lengths.max()
    for spec in all_specs():
        tr, te = normalize(train, test, spec)
        if spec.method == "truncate":
            assert tr.target_length == lo
        elif spec.ngw is None:
            assert tr.target_length == hi
        assert te.target_length == tr.target_length


def test_long_test_series_shrunk_before_padding():
    train = LabeledDataset([[1.0, 2.0], [1.0, 2.0, 3.0]], ["a", "b"])
    test = LabeledDataset([[0.0, 1.0, 2.0, 3.0, 4.0]], ["a"], "test")
    _, te = normalize(train, test, "zero_pad:pre")
    np.testing.assert_allclose(te.series[0][:, 0], [0.0, 2.0, 4.0])


def test_noise_pad_values_in_range(rng, make_dataset):
    train = make_dataset(rng, 20, 5, 50)
    test = make_dataset(rng, 20, 5, 50, role="test")
    shifted = [LabeledDataset([s + 10 for s in d.series], d.labels, d.role) for d in (train, test)]
    for pos in ("pre", "post", "outer"):
        for ds in normalize(*shifted, f"noise_pad:{pos}"):
            arr = ds.to_array()
            pads = arr[arr < 5]
            assert pads.size > 0 and pads.min() >= 0 and pads.max() <= 1e-3


def test_seeded_methods_reproducible(rng, make_dataset):
    train = make_dataset(rng, 10, 5, 30)
    test = make_dataset(rng, 10, 5, 30, role="test")
    for m in ("noise_pad:post", "random_pad"):
        a = normalize(train, test, parse_spec(m, seed=5), jobs=3)
        b = normalize(train, test, parse_spec(m, seed=5))
        c = normalize(train, test, parse_spec(m, seed=6))
        assert a[0].to_array().tobytes() == b[0].to_array().tobytes()
        assert a[1].to_array().tobytes() != c[1].to_array().tobytes()
