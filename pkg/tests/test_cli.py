import csv
import io
import subprocess
import sys

import pytest

from tslength.cli import main
from tslength.io import load_ucr_tsv, synthetic_dataset, write_ucr_tsv


@pytest.fixture
def archive(tmp_path):
    root = tmp_path / "archive"
    (root / "Synth").mkdir(parents=True)
    write_ucr_tsv(synthetic_dataset(24, (10, 60), seed=1), root / "Synth" / "Synth_TRAIN.tsv")
    write_ucr_tsv(synthetic_dataset(12, (8, 70), seed=2, role="test"), root / "Synth" / "Synth_TEST.tsv")
    return root


def run(*argv):
    return main([str(a) for a in argv])


def test_stats(archive, capsys):
    assert run("stats", "--dataset-dir", archive, "--dataset", "Synth") == 0
    out = capsys.readouterr().out
    train = synthetic_dataset(24, (10, 60), seed=1)
    mean = train.lengths.mean()
    assert f"TRAIN n=24 min={train.lengths.min()} max={train.lengths.max()} mean={mean:.1f}" in out


def test_stats_missing_path(tmp_path, capsys):
    assert run("stats", "--dataset-dir", tmp_path, "--dataset", "Nope") == 2
    assert capsys.readouterr().out == ""


def test_usage_errors_exit_1(archive, tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        run("stats")
    assert exc.value.code == 1
    assert run("normalize", "--dataset-dir", archive, "--dataset", "Synth",
               "--method", "edge_pad:mid", "--out", tmp_path) == 1
    assert "zero_pad:mid" in capsys.readouterr().err
    assert run("normalize", "--dataset-dir", archive, "--dataset", "Synth", "--method", "resample") == 1


def test_malformed_file_is_data_error(tmp_path):
    (tmp_path / "Bad_TRAIN.tsv").write_text("1\t1\tNaN\t2\n")
    (tmp_path / "Bad_TEST.tsv").write_text("1\t1\n")
    assert run("stats", "--dataset-dir", tmp_path, "--dataset", "Bad") == 2


@pytest.mark.parametrize("method, beta", [("ngw", "0.7"), ("zero_pad:pre", None), ("noise_pad:outer", None)])
def test_normalize_writes_fixed_files(archive, tmp_path, capsys, method, beta):
    extra = ["--beta", beta] if beta else []
    out = tmp_path / "out"
    assert run("normalize", "--dataset-dir", archive, "--dataset", "Synth", "--method", method,
               "--alpha", "0.4", *extra, "--out", out) == 0
    printed = capsys.readouterr().out
    assert "seed=42" in printed
    train = load_ucr_tsv(archive / "Synth" / "Synth_TRAIN.tsv")
    lengths = sorted(train.lengths.tolist())
    expected = lengths[-1] if beta is None else lengths[int(-(-0.7 * len(lengths) // 1)) - 1]
    for split in ("TRAIN", "TEST"):
        ds = load_ucr_tsv(out / f"Synth_{split}.tsv")
        assert set(ds.lengths.tolist()) == {expected}
    assert f"target_length={expected}" in printed
    first = (out / "Synth_TRAIN.tsv").read_bytes()
    assert run("normalize", "--dataset-dir", archive, "--dataset", "Synth", "--method", method,
               "--alpha", "0.4", *extra, "--out", out) == 0
    assert (out / "Synth_TRAIN.tsv").read_bytes() == first


def test_sweep_rows(archive, capsys):
    assert run("sweep", "--dataset-dir", archive, "--dataset", "Synth",
               "--alphas", "0.2,0.4,0.8", "--betas", "1.0", "--metric", "euclidean") == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 3 and all(r["status"] == "ok" for r in rows)

    assert run("sweep", "--dataset-dir", archive, "--dataset", "Synth",
               "--alphas", "0.8", "--betas", "0.4", "--metric", "euclidean") == 0
    captured = capsys.readouterr()
    rows = list(csv.DictReader(io.StringIO(captured.out)))
    assert len(rows) == 1 and rows[0]["status"].startswith("skipped") and rows[0]["accuracy"] == ""
    assert "warning" in captured.err

    assert run("sweep", "--dataset-dir", archive, "--dataset", "Synth",
               "--alphas", "1", "--betas", "1", "--metric", "euclidean") == 0
    row = next(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    train = load_ucr_tsv(archive / "Synth" / "Synth_TRAIN.tsv")
    assert int(row["target_length"]) == train.lengths.max()


def test_compare_subset(archive, tmp_path):
    out = tmp_path / "cmp"
    assert run("compare", "--dataset-dir", archive, "--dataset", "Synth", "--methods",
               "resample,truncate:pre,ngw", "--metric", "euclidean", "--out", out,
               "--save-normalized") == 0
    rows = list(csv.DictReader((out / "Synth_compare.csv").open()))
    assert len(rows) == 3
    assert float(rows[0]["accuracy"]) >= float(rows[-1]["accuracy"])
    assert (out / "truncate_pre" / "Synth_TEST.tsv").is_file()
    assert (out / "ngw(a=0.4;b=0.7)" / "Synth_TRAIN.tsv").is_file()


def test_console_entry_point(archive):
    proc = subprocess.run([sys.executable, "-m", "tslength.cli", "stats", "--dataset-dir",
                           str(archive), "--dataset", "Synth"], capture_output=True, text=True)
    assert proc.returncode == 0 and "TEST n=12" in proc.stdout
