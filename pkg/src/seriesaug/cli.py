"""Command-line front end: augment, bench, roundtrip, quality, serve.

Conventions shared by every command: results go to stdout or to files,
diagnostics go to stderr, and the exit code is 0 for success, 1 for
validation problems (bad parameters, malformed data, failed tolerance),
2 for I/O failures.  Everything is deterministic given --seed except
bench timing values (report structure included).
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from typing import Optional

from . import __version__
from .bench import default_chain, make_report, report_csv, report_json, synthetic_batch
from .datafiles import FORMATS, read_dataset, write_dataset
from .dtw import dtw_distance
from .errors import InvalidParameterError, SeriesAugError
from .freqtransform import TRANSFORMS, roundtrip_check
from .pipeline import Mode, Pipeline, parse_mode

ROUNDTRIP_TOLERANCE = 1e-8


def _apply_overrides(pipe: Pipeline, args) -> Pipeline:
    changes = {}
    if args.seed is not None:
        changes["master_seed"] = args.seed
    if args.parallel:
        changes["parallel"] = True
    if getattr(args, "mode", None):
        changes["mode"] = parse_mode(args.mode)
    return dataclasses.replace(pipe, **changes) if changes else pipe


def _load_pipeline(args) -> Pipeline:
    if args.config is None:
        pipe = Pipeline(stages=default_chain())
    else:
        pipe = Pipeline.load(args.config)
    return _apply_overrides(pipe, args)


def cmd_augment(args) -> int:
    ds = read_dataset(args.input, args.format)
    pipe = _load_pipeline(args)
    t0 = time.perf_counter()
    out = pipe.run(ds.batch)
    elapsed = time.perf_counter() - t0
    write_dataset(args.output, ds.with_batch(out))
    print(
        f"applied {len(pipe.stages)} stage(s) to {ds.batch.n} series "
        f"(L={ds.batch.length} -> {out.length}, N -> {out.n}) "
        f"in {elapsed:.3f}s; wrote {args.output}",
        file=sys.stderr,
    )
    return 0


def cmd_bench(args) -> int:
    if args.repeats < 3:
        raise InvalidParameterError(f"--repeats must be >= 3, got {args.repeats}")
    if (args.input is None) == (args.synthetic is None):
        raise InvalidParameterError(
            "bench needs exactly one of an input file or --synthetic N L"
        )
    if args.synthetic is not None:
        n, length = args.synthetic
        if n < 1 or length < 1:
            raise InvalidParameterError("--synthetic N L must both be >= 1")
        batch = synthetic_batch(n, length, args.seed if args.seed is not None else 0)
        name = f"synthetic-{n}x{length}"
    else:
        ds = read_dataset(args.input, args.format)
        batch = ds.batch
        name = str(args.input)
    pipe = _load_pipeline(args)
    report = make_report(pipe, batch, args.repeats, dataset_name=name)
    if args.report:
        path = str(args.report)
        text = report_csv(report) if path.endswith(".csv") else report_json(report)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}", file=sys.stderr)
    else:
        sys.stdout.write(report_json(report))
    print(
        f"pipeline median {report.pipeline_timing.median_ms:.2f} ms over "
        f"{report.repeats} repeats; peak RSS "
        f"{'n/a' if report.peak_rss_mb is None else f'{report.peak_rss_mb:.1f} MB'}",
        file=sys.stderr,
    )
    return 0


def cmd_roundtrip(args) -> int:
    ds = read_dataset(args.input, args.format)
    err = roundtrip_check(ds.batch, args.transform)
    print(repr(err))
    if err <= ROUNDTRIP_TOLERANCE:
        return 0
    print(
        f"error: {args.transform} round-trip error {err!r} exceeds "
        f"{ROUNDTRIP_TOLERANCE}",
        file=sys.stderr,
    )
    return 1


def cmd_quality(args) -> int:
    original = read_dataset(args.original, args.format)
    augmented = read_dataset(args.augmented, args.format)
    if original.batch.n != augmented.batch.n:
        raise InvalidParameterError(
            f"batches differ in series count: {original.batch.n} vs {augmented.batch.n}"
        )
    print("pair,distance,similarity")
    total = 0.0
    for i in range(original.batch.n):
        res = dtw_distance(original.batch.values[i], augmented.batch.values[i])
        total += res.similarity
        print(f"{i},{res.distance!r},{res.similarity!r}")
    mean = total / original.batch.n
    print(f"mean,,{mean!r}")
    print(f"mean similarity {mean:.4f} over {original.batch.n} pairs", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    from . import serve

    return serve.serve_forever(sys.stdin, sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seriesaug",
        description="Augment, benchmark and inspect univariate time-series batches.",
    )
    parser.add_argument("--version", action="version", version=f"seriesaug {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_mode=True):
        p.add_argument("--config", help="pipeline config JSON (default: built-in chain)")
        p.add_argument("--seed", type=int, default=None, help="override master_seed")
        p.add_argument("--parallel", action="store_true", help="force parallel execution")
        if with_mode:
            p.add_argument("--mode", choices=[m.value for m in Mode], default=None)
        p.add_argument("--format", choices=list(FORMATS), default=None,
                       help="input format (default: detect by '@' header)")

    p = sub.add_parser("augment", help="run a pipeline over a dataset file")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    add_common(p)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("bench", help="time a pipeline and sample peak memory")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--synthetic", nargs=2, type=int, metavar=("N", "L"), default=None)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--report", help="write report here (.csv for CSV, else JSON)")
    add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("roundtrip", help="verify forward/inverse transform error")
    p.add_argument("input")
    p.add_argument("transform", choices=list(TRANSFORMS))
    p.add_argument("--format", choices=list(FORMATS), default=None)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("quality", help="DTW similarity between two datasets")
    p.add_argument("original")
    p.add_argument("augmented")
    p.add_argument("--format", choices=list(FORMATS), default=None)
    p.set_defaults(func=cmd_quality)

    p = sub.add_parser("serve", help="speak line-delimited JSON on stdio (for bindings)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SeriesAugError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
