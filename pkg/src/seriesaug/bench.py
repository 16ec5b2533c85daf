"""Wall-time and peak-memory measurement for augmenters and pipelines.

Timing protocol: one warm-up run, then `repeats` timed runs; the record
keeps every sample plus median and min.  A checksum of the last output
is retained so the measured work cannot be optimized away.  Peak memory
is the process RSS sampled on a watcher thread, minus the pre-work
baseline.  Benchmarks are process-exclusive: do not run two at once.
"""

from __future__ import annotations

import csv
import io
import json
import os
import platform
import threading
import time
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .basic import Drift, Jitter, Reverse, Scale
from .core import Augmenter, Batch, SeedContext, derive_stream
from .errors import InvalidParameterError, UnsupportedPlatformError
from .freqaugment import AmplitudePhasePerturb, FrequencyMask
from .pipeline import Pipeline
from .warp import TimeWarp

_MB = 1 << 20


@dataclass(frozen=True)
class TimingRecord:
    label: str
    samples_ms: tuple[float, ...]
    median_ms: float
    min_ms: float
    checksum: float

    @property
    def repeats(self) -> int:
        return len(self.samples_ms)


@dataclass(frozen=True)
class BenchReport:
    dataset_name: str
    n_series: int
    series_len: int
    stage_timings: tuple[TimingRecord, ...]
    pipeline_timing: TimingRecord
    peak_rss_mb: float | None  # None when RSS sampling is unavailable
    repeats: int
    environment: str

    def __post_init__(self) -> None:
        if self.repeats < 3:
            raise InvalidParameterError(
                f"a bench report needs repeats >= 3, got {self.repeats}"
            )


def _time_runs(fn: Callable[[], Batch], repeats: int, label: str) -> TimingRecord:
    if repeats < 1:
        raise InvalidParameterError(f"repeats must be >= 1, got {repeats}")
    fn()  # warm-up
    samples = []
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        samples.append((time.perf_counter() - t0) * 1e3)
    return TimingRecord(
        label=label,
        samples_ms=tuple(samples),
        median_ms=float(np.median(samples)),
        min_ms=min(samples),
        checksum=float(np.sum(out.values)),
    )


def bench_augmenter(
    aug: Augmenter,
    batch: Batch,
    repeats: int = 3,
    master_seed: int = 0,
    parallel: bool = False,
    augmenter_index: int = 0,
) -> TimingRecord:
    """Median/min wall time of augment_batch over `repeats` runs."""
    return _time_runs(
        lambda: aug.augment_batch(batch, master_seed, parallel, augmenter_index),
        repeats,
        aug.kind,
    )


def bench_pipeline(pipe: Pipeline, batch: Batch, repeats: int = 3) -> TimingRecord:
    """Median/min wall time of a full pipeline run."""
    return _time_runs(lambda: pipe.run(batch), repeats, "pipeline")


def measure_peak_memory(work: Callable[[], Any]) -> float:
    """Run `work` and return its peak RSS above baseline, in MB.

    RSS is sampled every 5 ms on a watcher thread for the duration of
    the call.  Raises unsupported-platform when process RSS cannot be
    read; callers degrade to timing-only reports.
    """
    try:
        import psutil
    except ImportError:
        raise UnsupportedPlatformError(
            "peak-RSS sampling needs psutil, which failed to import"
        ) from None
    proc = psutil.Process()
    baseline = proc.memory_info().rss
    peak = baseline
    stop = threading.Event()

    def watch() -> None:
        nonlocal peak
        while not stop.is_set():
            rss = proc.memory_info().rss
            if rss > peak:
                peak = rss
            stop.wait(0.005)

    watcher = threading.Thread(target=watch, daemon=True)
    watcher.start()
    try:
        work()
    finally:
        stop.set()
        watcher.join()
    rss = proc.memory_info().rss
    if rss > peak:
        peak = rss
    return (peak - baseline) / _MB


def environment_note() -> str:
    return (
        f"{platform.platform()}; Python {platform.python_version()}; "
        f"numpy {np.__version__}; {os.cpu_count()} cpus"
    )


def make_report(
    pipe: Pipeline, batch: Batch, repeats: int = 3, dataset_name: str = "unnamed"
) -> BenchReport:
    """Time each stage on its true intermediate input, then the whole
    pipeline, then sample peak RSS over one more full run."""
    if repeats < 3:
        raise InvalidParameterError(f"a bench report needs repeats >= 3, got {repeats}")
    stage_timings = []
    current = batch
    for j, stage in enumerate(pipe.stages):
        stage_timings.append(
            bench_augmenter(stage, current, repeats, pipe.master_seed, pipe.parallel, j)
        )
        current = stage.augment_batch(current, pipe.master_seed, pipe.parallel, j)
    pipeline_timing = bench_pipeline(pipe, batch, repeats)
    try:
        peak = measure_peak_memory(lambda: pipe.run(batch))
    except UnsupportedPlatformError:
        peak = None
    return BenchReport(
        dataset_name=dataset_name,
        n_series=batch.n,
        series_len=batch.length,
        stage_timings=tuple(stage_timings),
        pipeline_timing=pipeline_timing,
        peak_rss_mb=peak,
        repeats=repeats,
        environment=environment_note(),
    )


def report_json(report: BenchReport) -> str:
    def record(t: TimingRecord) -> dict[str, Any]:
        return {
            "label": t.label,
            "samples_ms": list(t.samples_ms),
            "median_ms": t.median_ms,
            "min_ms": t.min_ms,
            "checksum": t.checksum,
        }

    doc = {
        "dataset_name": report.dataset_name,
        "n_series": report.n_series,
        "series_len": report.series_len,
        "repeats": report.repeats,
        "stages": [record(t) for t in report.stage_timings],
        "pipeline": record(report.pipeline_timing),
        "peak_rss_mb": report.peak_rss_mb,
        "environment": report.environment,
    }
    return json.dumps(doc, indent=2) + "\n"


def report_csv(report: BenchReport) -> str:
    """One row per stage plus a final pipeline-total row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["stage", "label", "median_ms", "min_ms", "checksum"])
    for j, t in enumerate(report.stage_timings):
        writer.writerow([j, t.label, repr(t.median_ms), repr(t.min_ms), repr(t.checksum)])
    p = report.pipeline_timing
    writer.writerow(["total", p.label, repr(p.median_ms), repr(p.min_ms), repr(p.checksum)])
    return buf.getvalue()


def synthetic_batch(n: int, length: int, seed: int = 0) -> Batch:
    """Seeded Gaussian random walks, the stand-in for corpus datasets."""
    rng = derive_stream(SeedContext(seed))
    steps = rng.normal(0.0, 1.0, (n, length))
    return Batch(np.cumsum(steps, axis=1))


def default_chain() -> tuple[Augmenter, ...]:
    """Seven length-preserving stages exercising every augmenter family."""
    return (
        Jitter(sigma=0.1),
        Scale(sigma_factor=0.1),
        Drift(max_drift=0.5, n_points=6),
        TimeWarp(n_knots=4, intensity=0.5),
        AmplitudePhasePerturb(sigma_amp=0.5, sigma_phase=0.2),
        FrequencyMask(width=10),
        Reverse(),
    )


def power_law_exponent(sizes, times) -> float:
    """Least-squares slope of log(time) against log(size)."""
    sizes = np.asarray(sizes, dtype=np.float64)
    times = np.asarray(times, dtype=np.float64)
    if sizes.shape != times.shape or sizes.size < 2:
        raise InvalidParameterError(
            f"need two or more (size, time) pairs, got {sizes.size} and {times.size}"
        )
    return float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
