import numpy as np
import pytest

from tslength import LabeledDataset, synthetic_dataset


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def synthetic_pair():
    train = synthetic_dataset(40, (10, 120), n_classes=3, seed=1, role="train")
    test = synthetic_dataset(25, (10, 120), n_classes=3, seed=2, role="test")
    return train, test


@pytest.fixture
def make_dataset():
    """Factory for datasets of uniform-noise series with random lengths in [lo, hi]."""

    def make(rng, n, lo, hi, role="train", n_classes=3, dim=1):
        series = [rng.uniform(-1, 1, size=(int(rng.integers(lo, hi + 1)), dim)) for _ in range(n)]
        labels = [str(i % n_classes) for i in range(n)]
        return LabeledDataset(series, labels, role)

    return make


_ACCEPTANCE = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    if call.when == "setup" and call.excinfo is None:
        return
    if call.excinfo is None:
        status = "PASS"
    elif call.excinfo.errisinstance(pytest.skip.Exception):
        status = "SKIP"
    else:
        status = "FAIL"
    # parametrized criteria report their worst case
    rank = {"SKIP": 0, "PASS": 1, "FAIL": 2}
    previous = _ACCEPTANCE.get(number, (title, "SKIP"))[1]
    _ACCEPTANCE[number] = (title, max(previous, status, key=rank.get))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
