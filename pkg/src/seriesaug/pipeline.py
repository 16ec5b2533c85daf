"""Composing augmenters into a reproducible pipeline.

Two execution modes produce bitwise identical results:

* standard: each stage sweeps the whole batch before the next starts;
* per-sample: each series walks the whole chain before the next series.

The equivalence holds because a stage's stream for series i depends only
on (master_seed, stage position, i), never on execution order.  The one
exception is repeat, which grows the batch: it is only meaningful at
batch level, so pipelines containing it must run in standard mode.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .basic import InjectNoise, Repeat, noise_from_dict, noise_to_dict
from .core import (
    AUGMENTER_REGISTRY,
    Augmenter,
    Batch,
    SeedContext,
    run_indexed_tasks,
)
from .errors import InvalidConfigError, InvalidParameterError


class Mode(enum.Enum):
    STANDARD = "standard"
    PER_SAMPLE = "per-sample"


def parse_mode(name: str) -> Mode:
    for mode in Mode:
        if mode.value == name:
            return mode
    raise InvalidConfigError(
        f"mode must be one of {[m.value for m in Mode]}, got {name!r}"
    )


def stage_to_dict(stage: Augmenter) -> dict[str, Any]:
    """Serialize one augmenter to its {kind, probability, params} record."""
    params = stage.params()
    if isinstance(stage, InjectNoise):
        params = dict(params, noise=noise_to_dict(stage.noise))
    return {
        "kind": stage.kind,
        "probability": stage.probability,
        "params": params,
    }


def stage_from_dict(record) -> Augmenter:
    """Build an augmenter from a {kind, probability, params} record."""
    if not isinstance(record, dict):
        raise InvalidConfigError(f"stage must be an object, got {type(record).__name__}")
    unknown = set(record) - {"kind", "probability", "params"}
    if unknown:
        raise InvalidConfigError(f"unknown stage field(s): {sorted(unknown)}")
    if "kind" not in record:
        raise InvalidConfigError("stage is missing the 'kind' field")
    kind = record["kind"]
    cls = AUGMENTER_REGISTRY.get(kind)
    if cls is None:
        raise InvalidConfigError(
            f"unknown augmenter kind {kind!r}, expected one of {sorted(AUGMENTER_REGISTRY)}"
        )
    params = record.get("params", {})
    if not isinstance(params, dict):
        raise InvalidConfigError(f"{kind}: params must be an object")
    if cls is InjectNoise and "noise" in params:
        params = dict(params, noise=noise_from_dict(params["noise"]))
    try:
        return cls(**params, probability=record.get("probability", 1.0))
    except TypeError as exc:
        raise InvalidConfigError(f"{kind}: bad params: {exc}") from None


@dataclass(frozen=True)
class Pipeline:
    """An ordered chain of augmenters plus execution settings."""

    stages: tuple[Augmenter, ...] = ()
    mode: Mode = Mode.STANDARD
    parallel: bool = False
    master_seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "stages", tuple(self.stages))
        for j, stage in enumerate(self.stages):
            if not isinstance(stage, Augmenter):
                raise InvalidConfigError(
                    f"stage {j} is not an augmenter: {stage!r}"
                )
        if not isinstance(self.mode, Mode):
            raise InvalidConfigError(f"mode must be a Mode, got {self.mode!r}")
        SeedContext(self.master_seed)  # range check
        repeats = [j for j, s in enumerate(self.stages) if isinstance(s, Repeat)]
        if len(repeats) > 1:
            raise InvalidConfigError(
                f"at most one repeat stage is allowed, found {len(repeats)}"
            )
        if repeats and self.mode is not Mode.STANDARD:
            raise InvalidConfigError(
                "repeat grows the batch, which has no per-sample meaning; "
                "use standard mode"
            )

    def projected_length(self, length: int) -> int:
        """Validate every stage against the lengths it will see; return
        the final series length.  Fails before any work is done."""
        out = length
        for j, stage in enumerate(self.stages):
            try:
                stage.validate_for_length(out)
            except InvalidParameterError as exc:
                raise InvalidConfigError(f"stage {j} ({stage.kind}): {exc}") from None
            if stage.probability == 1.0:
                out = stage.output_length(out)
        return out

    def run(self, batch: Batch) -> Batch:
        self.projected_length(batch.length)
        if self.mode is Mode.STANDARD:
            return self._run_standard(batch)
        return self._run_per_sample(batch)

    def _run_standard(self, batch: Batch) -> Batch:
        out = batch
        for j, stage in enumerate(self.stages):
            out = stage.augment_batch(
                out, self.master_seed, parallel=self.parallel, augmenter_index=j
            )
        return out

    def _run_per_sample(self, batch: Batch) -> Batch:
        final_len = self.projected_length(batch.length)
        out = np.empty((batch.n, final_len), dtype=np.float64)
        values = batch.values
        stages = self.stages
        seed = self.master_seed

        def task(i: int) -> None:
            x = values[i]
            for j, stage in enumerate(stages):
                x = stage.augment_one(x, SeedContext(seed, j, i))
            out[i] = x

        run_indexed_tasks(task, batch.n, self.parallel)
        return Batch(out)

    def describe(self) -> dict[str, Any]:
        """The pipeline as a JSON-ready config; parse() inverts this."""
        return {
            "master_seed": int(self.master_seed),
            "parallel": bool(self.parallel),
            "mode": self.mode.value,
            "stages": [stage_to_dict(s) for s in self.stages],
        }

    @classmethod
    def parse(cls, config) -> "Pipeline":
        if not isinstance(config, dict):
            raise InvalidConfigError(
                f"config must be an object, got {type(config).__name__}"
            )
        unknown = set(config) - {"master_seed", "parallel", "mode", "stages"}
        if unknown:
            raise InvalidConfigError(f"unknown config field(s): {sorted(unknown)}")
        if "stages" not in config or not isinstance(config["stages"], list):
            raise InvalidConfigError("config must have a 'stages' list")
        seed = config.get("master_seed", 0)
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise InvalidConfigError(f"master_seed must be an integer, got {seed!r}")
        parallel = config.get("parallel", False)
        if not isinstance(parallel, bool):
            raise InvalidConfigError(f"parallel must be a boolean, got {parallel!r}")
        mode = config.get("mode", Mode.STANDARD.value)
        if not isinstance(mode, str):
            raise InvalidConfigError(f"mode must be a string, got {mode!r}")
        stages = []
        for j, record in enumerate(config["stages"]):
            try:
                stages.append(stage_from_dict(record))
            except InvalidConfigError as exc:
                raise InvalidConfigError(f"stage {j}: {exc}") from None
            except InvalidParameterError as exc:
                raise InvalidConfigError(f"stage {j}: {exc}") from None
        return cls(
            stages=tuple(stages),
            mode=parse_mode(mode),
            parallel=parallel,
            master_seed=seed,
        )

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.describe(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "Pipeline":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                config = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InvalidConfigError(f"{path}: not valid JSON: {exc}") from None
        return cls.parse(config)
