"""Command-line entry point: ``tslength {stats,normalize,sweep,compare}``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from pathlib import Path

from . import io as tsio
from .core import LabeledDataset
from .evaluation import compare_methods, evaluate_spec, reports_to_csv
from .methods import all_specs, normalize, parse_spec, valid_method_strings
from .ngw import NgwConfig

EXIT_USAGE = 1
EXIT_DATA = 2

SWEEP_HEADER = ["alpha", "beta", "class_wise", "accuracy", "target_length", "wall_time_s", "status"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    archive = tsio.default_archive_dir()
    common.add_argument("--dataset-dir", type=Path, default=archive,
                        help="UCR archive root (default: $UCR_ARCHIVE)")
    common.add_argument("--dataset", required=True, help="dataset name, e.g. GestureMidAirD1")

    proc = argparse.ArgumentParser(add_help=False)
    proc.add_argument("--seed", type=int, default=42)
    proc.add_argument("--jobs", type=int, default=1, help="worker threads per series loop")
    proc.add_argument("--out", type=Path, help="output directory")
    proc.add_argument("--alpha", type=float, default=0.4)
    proc.add_argument("--beta", type=float, default=None)

    parser = _Parser(prog="tslength", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("stats", parents=[common], help="length statistics per split")

    p = sub.add_parser("normalize", parents=[common, proc], help="write fixed-length TSV files")
    p.add_argument("--method", required=True, help=f"one of: {', '.join(valid_method_strings())}")

    p = sub.add_parser("sweep", parents=[common, proc], help="grid over NGW alpha/beta with 1-NN scoring")
    p.add_argument("--alphas", type=_float_list, default=[0.4])
    p.add_argument("--betas", type=_float_list, default=[1.0])
    p.add_argument("--class-wise", action="store_true")
    p.add_argument("--metric", choices=("dtw", "euclidean"), default="dtw")

    p = sub.add_parser("compare", parents=[common, proc], help="1-NN ranking of normalization methods")
    p.add_argument("--methods", default="all",
                   help="comma-separated method strings, or 'all' for the 21 standard ones")
    p.add_argument("--metric", choices=("dtw", "euclidean"), default="dtw")
    p.add_argument("--save-normalized", action="store_true",
                   help="also write each method's normalized TSV files under --out")
    p.add_argument("--no-timing", action="store_true",
                   help="leave wall_time_s blank so reruns produce identical CSV bytes")
    return parser


def _load(args) -> tuple[LabeledDataset, LabeledDataset]:
    if args.dataset_dir is None:
        raise UsageError("--dataset-dir is required (or set UCR_ARCHIVE)")
    try:
        return tsio.load_split(args.dataset_dir, args.dataset)
    except tsio.DatasetError:
        raise
    except ValueError as exc:
        raise tsio.DatasetError(str(exc)) from exc


def _scaled(args):
    train, test = _load(args)
    scaler = tsio.fit_minmax(train)
    return tsio.apply_minmax(train, scaler), tsio.apply_minmax(test, scaler)


def _emit(text: str, out: Path | None, filename: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.mkdir(parents=True, exist_ok=True)
    (out / filename).write_text(text, encoding="utf-8")
    print(f"wrote {out / filename}")


def cmd_stats(args) -> int:
    train, test = _load(args)  # both loaded before anything is printed
    lines = [f"dataset={args.dataset}"]
    for split, ds in (("TRAIN", train), ("TEST", test)):
        lines.append(f"{split} n={len(ds)} {tsio.length_stats(ds)}")
    print("\n".join(lines))
    return 0


def cmd_normalize(args) -> int:
    if args.out is None:
        raise UsageError("normalize needs --out")
    beta = 1.0 if args.beta is None else args.beta
    spec = parse_spec(args.method, seed=args.seed, alpha=args.alpha, beta=beta)
    train, test = _scaled(args)
    start = time.perf_counter()
    ntrain, ntest = normalize(train, test, spec, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    args.out.mkdir(parents=True, exist_ok=True)
    tsio.write_fixed_tsv(ntrain, args.out / f"{args.dataset}_TRAIN.tsv")
    tsio.write_fixed_tsv(ntest, args.out / f"{args.dataset}_TEST.tsv")
    print(f"seed={args.seed} method={spec.name} target_length={ntrain.target_length} "
          f"wall_time_s={elapsed:.3f}")
    return 0


def cmd_sweep(args) -> int:
    train, test = _scaled(args)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for beta in args.betas:
        for alpha in args.alphas:
            try:
                cfg = NgwConfig(alpha, beta, args.class_wise)
            except ValueError as exc:
                print(f"warning: skipping alpha={alpha:g} beta={beta:g}: {exc}", file=sys.stderr)
                w.writerow([alpha, beta, args.class_wise, "", "", "", f"skipped: {exc}"])
                continue
            method = "ngw_cw" if args.class_wise else "ngw"
            spec = parse_spec(method, seed=args.seed, alpha=cfg.alpha, beta=cfg.beta)
            rep = evaluate_spec(train, test, spec, args.metric, args.jobs)
            if rep.error:
                w.writerow([alpha, beta, args.class_wise, "", "", f"{rep.wall_time:.4f}", rep.error])
            else:
                w.writerow([alpha, beta, args.class_wise, f"{rep.accuracy:.6f}", rep.target_length,
                            f"{rep.wall_time:.4f}", "ok"])
    print(f"# seed={args.seed} metric={args.metric}", file=sys.stderr)
    _emit(buf.getvalue(), args.out, f"{args.dataset}_sweep.csv")
    return 0


def cmd_compare(args) -> int:
    beta = 0.7 if args.beta is None else args.beta
    if args.methods == "all":
        specs = all_specs(seed=args.seed, alpha=args.alpha, beta=beta)
    else:
        specs = [parse_spec(m, seed=args.seed, alpha=args.alpha, beta=beta)
                 for m in args.methods.split(",") if m.strip()]
    if args.save_normalized and args.out is None:
        raise UsageError("--save-normalized needs --out")
    train, test = _scaled(args)
    if args.save_normalized:
        for spec in specs:
            ntrain, ntest = normalize(train, test, spec, jobs=args.jobs)
            d = args.out / spec.name.replace(":", "_")
            d.mkdir(parents=True, exist_ok=True)
            tsio.write_fixed_tsv(ntrain, d / f"{args.dataset}_TRAIN.tsv")
            tsio.write_fixed_tsv(ntest, d / f"{args.dataset}_TEST.tsv")
    reports = compare_methods(train, test, specs, args.metric, args.jobs)
    print(f"# seed={args.seed} metric={args.metric} methods={len(specs)}", file=sys.stderr)
    _emit(reports_to_csv(reports, timing=not args.no_timing), args.out, f"{args.dataset}_compare.csv")
    return 0


COMMANDS = {"stats": cmd_stats, "normalize": cmd_normalize, "sweep": cmd_sweep, "compare": cmd_compare}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"tslength: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad method strings and NGW bounds surface as ValueError before any data is read
        code = EXIT_DATA if isinstance(exc, tsio.DatasetError) else EXIT_USAGE
        print(f"tslength: error: {exc}", file=sys.stderr)
        return code
    except OSError as exc:
        print(f"tslength: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
