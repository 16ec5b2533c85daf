"""Batch data model, deterministic seeding, and the augmenter contract.

Every augmenter in this package implements the same two entry points:
``augment_one`` for a single series and ``augment_batch`` for a whole
batch.  Randomness is derived per (master_seed, augmenter_index,
series_index), so results are bit-for-bit reproducible no matter how the
work is scheduled: the parallel and serial paths of ``augment_batch``
produce identical output by construction.

Seeding construction (stable within a major version):
the three context integers are absorbed one at a time into a 64-bit
state through the SplitMix64 avalanche function; the final state is
expanded to a 128-bit key for a counter-based Philox bit generator.
Distinct contexts therefore get statistically independent streams, and
a stream depends on nothing but its context.
"""

from __future__ import annotations

import dataclasses
import os
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, ClassVar

import numpy as np

from .errors import InvalidInputError, InvalidParameterError

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

THREAD_ENV_VAR = "SERIESAUG_THREADS"

# kind-string -> augmenter class, filled by Augmenter.__init_subclass__
AUGMENTER_REGISTRY: dict[str, type["Augmenter"]] = {}


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: a 64-bit bijection with full avalanche."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class SeedContext:
    """Identifies one random stream: (master seed, pipeline stage, series).

    The derived stream is a pure function of these three integers, which
    is what makes parallel execution deterministic: a series' draws do
    not depend on scheduling order or on how many draws other series
    consumed.
    """

    master_seed: int
    augmenter_index: int = 0
    series_index: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.master_seed < 1 << 64:
            raise InvalidParameterError(
                f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}"
            )
        if self.augmenter_index < 0 or self.series_index < 0:
            raise InvalidParameterError("stream indices must be non-negative")


def derive_stream(ctx: SeedContext) -> np.random.Generator:
    """Return the seeded generator for one (seed, stage, series) context.

    Construction: absorb master_seed, augmenter_index and series_index
    sequentially through SplitMix64, then expand to a 128-bit Philox key.
    """
    state = _mix64(ctx.master_seed)
    state = _mix64((state + _GOLDEN + ctx.augmenter_index) & _MASK64)
    state = _mix64((state + _GOLDEN + ctx.series_index) & _MASK64)
    key_lo = _mix64(state)
    key_hi = _mix64((state + _GOLDEN) & _MASK64)
    return np.random.Generator(np.random.Philox(key=key_lo | (key_hi << 64)))


@dataclass(frozen=True)
class Batch:
    """N univariate series of equal length L, stored as an (N, L) float64 array.

    Values must be finite on ingest; augmenters may only produce finite
    values, and that is re-checked whenever a new Batch is built from
    augmenter output.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise InvalidInputError(
                f"batch must be a 2-D array of shape (n_series, length), got ndim={arr.ndim}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidInputError(f"batch must be non-empty, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise InvalidInputError("batch contains non-finite values (NaN or Inf)")
        object.__setattr__(self, "values", np.ascontiguousarray(arr))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def length(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_sequences(cls, rows) -> "Batch":
        try:
            parts = [np.asarray(r, dtype=np.float64) for r in rows]
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"cannot build batch: {exc}") from None
        if len({p.shape for p in parts}) > 1:
            raise InvalidInputError("all series in a batch must share the same length")
        return cls(np.array(parts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Batch):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(
            np.array_equal(self.values, other.values)
        )


def worker_count() -> int:
    """Thread count for parallel batch fan-out, capped by SERIESAUG_THREADS."""
    n = os.cpu_count() or 1
    cap = os.environ.get(THREAD_ENV_VAR)
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def run_indexed_tasks(task, n: int, parallel: bool) -> None:
    """Invoke task(i) for i in 0..n-1, serially or on a chunked thread pool.

    Tasks must write to disjoint output slots; they share no mutable
    state, so the two paths are interchangeable.
    """
    if not parallel or n < 2:
        for i in range(n):
            task(i)
        return
    workers = min(worker_count(), n)
    if workers == 1:
        for i in range(n):
            task(i)
        return
    bounds = np.linspace(0, n, workers * 4 + 1).astype(int)

    def chunk(lo: int, hi: int) -> None:
        for i in range(lo, hi):
            task(i)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(chunk, int(lo), int(hi))
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        for f in futures:
            f.result()


class Augmenter(ABC):
    """Uniform contract implemented by all 15 augmentation operators.

    Subclasses are frozen dataclasses whose fields are the operator's
    parameters plus ``probability``, the per-series chance that the
    operator fires.  The gate consumes exactly one draw from the series'
    stream before any operator-specific draws, so a gated-off series
    costs one draw and passes through unchanged.
    """

    kind: ClassVar[str]
    # Crop/Resize/Repeat change the output geometry; they are restricted to
    # probability 0 or 1 so the equal-length batch invariant cannot break.
    changes_geometry: ClassVar[bool] = False
    # Repeat is the one serial-only operator (it grows the batch).
    serial_only: ClassVar[bool] = False

    probability: float

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if "kind" in cls.__dict__:
            AUGMENTER_REGISTRY[cls.kind] = cls

    def __post_init__(self) -> None:
        p = self.probability
        if not isinstance(p, (int, float)) or not 0.0 <= float(p) <= 1.0:
            raise InvalidParameterError(
                f"{self.kind}: probability must lie in [0, 1], got {p!r}"
            )
        if self.changes_geometry and 0.0 < p < 1.0:
            raise InvalidParameterError(
                f"{self.kind}: changes series geometry, so probability must be 0 or 1 "
                f"(got {p}); a per-series gate would break the equal-length invariant"
            )
        self._validate()

    def _validate(self) -> None:
        """Parameter preconditions beyond the shared probability check."""

    def validate_for_length(self, length: int) -> None:
        """Raise if the parameters are inconsistent with series length L."""

    def output_length(self, length: int) -> int:
        """Output series length as a function of input length (never of draws)."""
        return length

    @abstractmethod
    def _apply(self, series: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """Transform one series using draws from rng. Must return a new array."""

    def augment_one(self, series: np.ndarray, ctx: SeedContext) -> np.ndarray:
        """Apply the probability gate, then the operator, to a single series."""
        x = np.asarray(series, dtype=np.float64)
        if x.ndim != 1 or x.size < 1:
            raise InvalidInputError("augment_one expects a non-empty 1-D series")
        self.validate_for_length(x.size)
        rng = derive_stream(ctx)
        if rng.random() >= self.probability:
            return x.copy()
        return self._apply(x, rng)

    def augment_batch(
        self,
        batch: Batch,
        master_seed: int,
        parallel: bool = False,
        augmenter_index: int = 0,
    ) -> Batch:
        """Augment every series independently; bitwise identical for both
        values of ``parallel``."""
        self.validate_for_length(batch.length)
        out_len = self.output_length(batch.length) if self.probability == 1.0 else batch.length
        out = np.empty((batch.n, out_len), dtype=np.float64)
        values = batch.values

        def task(i: int) -> None:
            out[i] = self.augment_one(
                values[i], SeedContext(master_seed, augmenter_index, i)
            )

        run_indexed_tasks(task, batch.n, parallel and not self.serial_only)
        return Batch(out)

    def params(self) -> dict[str, Any]:
        """Operator parameters as a plain dict (excluding probability)."""
        return {
            f.name: getattr(self, f.name)
            for f in dataclasses.fields(self)
            if f.name != "probability"
        }
