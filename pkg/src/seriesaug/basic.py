"""The eleven time-domain augmenters.

All operators preserve series length except Crop, Resize (per-series
length change) and Repeat (batch growth); those three are restricted to
probability 0 or 1 by the core contract.

Rotation note: the classic rotation augmentation is defined for
multichannel sensor data.  For a univariate series the only
norm-preserving rotation is the sign flip, so ``Rotate`` negates the
series.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from .core import Augmenter, Batch
from .errors import InvalidConfigError, InvalidParameterError


def _check_nonneg(name: str, value: float, kind: str) -> None:
    if not value >= 0:
        raise InvalidParameterError(f"{kind}: {name} must be >= 0, got {value}")


@dataclass(frozen=True)
class Jitter(Augmenter):
    """Add i.i.d. Gaussian noise: y[t] = x[t] + N(0, sigma^2)."""

    sigma: float
    probability: float = 1.0
    kind: ClassVar[str] = "jitter"

    def _validate(self) -> None:
        _check_nonneg("sigma", self.sigma, self.kind)

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.sigma == 0:
            return x.copy()
        return x + rng.normal(0.0, self.sigma, x.size)


@dataclass(frozen=True)
class Scale(Augmenter):
    """Multiply the whole series by one factor s ~ N(1, sigma_factor^2)."""

    sigma_factor: float
    probability: float = 1.0
    kind: ClassVar[str] = "scale"

    def _validate(self) -> None:
        _check_nonneg("sigma_factor", self.sigma_factor, self.kind)

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        s = rng.normal(1.0, self.sigma_factor)
        return x * s


@dataclass(frozen=True)
class Rotate(Augmenter):
    """Univariate rotation: sign flip (see module docstring)."""

    probability: float = 1.0
    kind: ClassVar[str] = "rotate"

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return -x


@dataclass(frozen=True)
class PermuteSegments(Augmenter):
    """Split into contiguous segments and shuffle their order.

    The first L mod n segments are one element longer; the shuffle is a
    Fisher-Yates permutation on the derived stream.
    """

    n_segments: int
    probability: float = 1.0
    kind: ClassVar[str] = "permute_segments"

    def _validate(self) -> None:
        if self.n_segments < 1:
            raise InvalidParameterError(f"{self.kind}: n_segments must be >= 1")

    def validate_for_length(self, length: int) -> None:
        if self.n_segments > length:
            raise InvalidParameterError(
                f"{self.kind}: n_segments={self.n_segments} exceeds series length {length}"
            )

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        n = self.n_segments
        if n == 1:
            return x.copy()
        base, extra = divmod(x.size, n)
        sizes = [base + 1] * extra + [base] * (n - extra)
        offsets = np.concatenate([[0], np.cumsum(sizes)])
        order = rng.permutation(n)
        return np.concatenate([x[offsets[k] : offsets[k + 1]] for k in order])


@dataclass(frozen=True)
class Crop(Augmenter):
    """Keep a random contiguous window of fixed size (window slicing).

    The size is shared by the whole batch (preserving equal lengths);
    the start index is drawn independently per series.
    """

    size: int
    probability: float = 1.0
    kind: ClassVar[str] = "crop"
    changes_geometry: ClassVar[bool] = True

    def _validate(self) -> None:
        if self.size < 1:
            raise InvalidParameterError(f"{self.kind}: size must be >= 1")

    def validate_for_length(self, length: int) -> None:
        if self.size > length:
            raise InvalidParameterError(
                f"{self.kind}: size={self.size} exceeds series length {length}"
            )

    def output_length(self, length: int) -> int:
        return self.size

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        start = int(rng.integers(0, x.size - self.size + 1))
        return x[start : start + self.size].copy()


@dataclass(frozen=True)
class Reverse(Augmenter):
    """Reverse the time axis: y[t] = x[L-1-t]."""

    probability: float = 1.0
    kind: ClassVar[str] = "reverse"

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return x[::-1].copy()


@dataclass(frozen=True)
class Resize(Augmenter):
    """Linearly interpolate the series onto a new length.

    Sample positions are t' * (L-1) / (target_len-1); both endpoints are
    preserved exactly.
    """

    target_len: int
    probability: float = 1.0
    kind: ClassVar[str] = "resize"
    changes_geometry: ClassVar[bool] = True

    def _validate(self) -> None:
        if self.target_len < 2:
            raise InvalidParameterError(f"{self.kind}: target_len must be >= 2")

    def validate_for_length(self, length: int) -> None:
        if length < 2:
            raise InvalidParameterError(f"{self.kind}: input length must be >= 2")

    def output_length(self, length: int) -> int:
        return self.target_len

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.target_len == x.size:
            return x.copy()
        positions = np.linspace(0.0, x.size - 1.0, self.target_len)
        return np.interp(positions, np.arange(x.size), x)


@dataclass(frozen=True)
class Quantize(Augmenter):
    """Snap every value to the nearest of n_levels levels spanning [min, max].

    Ties snap to the lower level for determinism; a constant series is
    returned unchanged.
    """

    n_levels: int
    probability: float = 1.0
    kind: ClassVar[str] = "quantize"

    def _validate(self) -> None:
        if self.n_levels < 2:
            raise InvalidParameterError(f"{self.kind}: n_levels must be >= 2")

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return snap_to_levels(x, float(x.min()), float(x.max()), self.n_levels)


def snap_to_levels(x: np.ndarray, lo: float, hi: float, n_levels: int) -> np.ndarray:
    """Snap values to n_levels equally spaced levels on [lo, hi], ties down."""
    if hi == lo:
        return x.copy()
    step = (hi - lo) / (n_levels - 1)
    idx = np.ceil((x - lo) / step - 0.5)
    np.clip(idx, 0, n_levels - 1, out=idx)
    return lo + idx * step


@dataclass(frozen=True)
class Drift(Augmenter):
    """Add a smooth random curve anchored at zero with a fixed peak.

    Gaussian values at n_points anchor indices are linearly interpolated
    to length L, shifted so the curve starts at 0, then rescaled so its
    largest magnitude equals max_drift exactly.
    """

    max_drift: float
    n_points: int = 6
    probability: float = 1.0
    kind: ClassVar[str] = "drift"

    def _validate(self) -> None:
        _check_nonneg("max_drift", self.max_drift, self.kind)
        if self.n_points < 2:
            raise InvalidParameterError(f"{self.kind}: n_points must be >= 2")

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.max_drift == 0:
            return x.copy()
        anchors = rng.normal(0.0, 1.0, self.n_points)
        positions = np.linspace(0.0, x.size - 1.0, self.n_points)
        curve = np.interp(np.arange(x.size), positions, anchors)
        curve = curve - curve[0]
        peak = float(np.abs(curve).max())
        if peak == 0.0:
            return x.copy()
        # divide first so the peak element lands on max_drift exactly
        curve = curve / peak * self.max_drift
        return x + curve


@dataclass(frozen=True)
class UniformNoise:
    """Additive i.i.d. Uniform(-half_width, half_width) noise."""

    half_width: float

    def __post_init__(self) -> None:
        _check_nonneg("half_width", self.half_width, "inject_noise")


@dataclass(frozen=True)
class GaussianNoise:
    """Additive i.i.d. N(0, sigma^2) noise."""

    sigma: float

    def __post_init__(self) -> None:
        _check_nonneg("sigma", self.sigma, "inject_noise")


@dataclass(frozen=True)
class SpikeNoise:
    """count spikes of magnitude * std(x) at distinct random positions.

    Sign is drawn per spike; a constant series falls back to std 1.0 so
    spikes stay visible.
    """

    count: int
    magnitude: float

    def __post_init__(self) -> None:
        if self.count < 0:
            raise InvalidParameterError("inject_noise: spike count must be >= 0")
        _check_nonneg("magnitude", self.magnitude, "inject_noise")


@dataclass(frozen=True)
class SlopeTrendNoise:
    """Additive linear ramp from 0 to +/- max_offset (sign drawn per series)."""

    max_offset: float

    def __post_init__(self) -> None:
        _check_nonneg("max_offset", self.max_offset, "inject_noise")


NoiseKind = Union[UniformNoise, GaussianNoise, SpikeNoise, SlopeTrendNoise]

NOISE_KINDS: dict[str, type] = {
    "uniform": UniformNoise,
    "gaussian": GaussianNoise,
    "spike": SpikeNoise,
    "slope_trend": SlopeTrendNoise,
}


def noise_to_dict(noise: NoiseKind) -> dict:
    for name, cls in NOISE_KINDS.items():
        if type(noise) is cls:
            return {"kind": name, **dataclasses.asdict(noise)}
    raise InvalidParameterError(
        f"inject_noise: unknown noise variant {type(noise).__name__}"
    )


def noise_from_dict(record) -> NoiseKind:
    if not isinstance(record, dict) or "kind" not in record:
        raise InvalidConfigError(
            "inject_noise: noise must be an object with a 'kind' field"
        )
    cls = NOISE_KINDS.get(record["kind"])
    if cls is None:
        raise InvalidConfigError(
            f"inject_noise: unknown noise kind {record['kind']!r}, "
            f"expected one of {sorted(NOISE_KINDS)}"
        )
    try:
        return cls(**{k: v for k, v in record.items() if k != "kind"})
    except TypeError as exc:
        raise InvalidConfigError(f"inject_noise: bad noise parameters: {exc}") from None


@dataclass(frozen=True)
class InjectNoise(Augmenter):
    """Inject one of four noise shapes: uniform, gaussian, spike, slope trend."""

    noise: NoiseKind
    probability: float = 1.0
    kind: ClassVar[str] = "inject_noise"

    def _validate(self) -> None:
        if not isinstance(
            self.noise, (UniformNoise, GaussianNoise, SpikeNoise, SlopeTrendNoise)
        ):
            raise InvalidParameterError(
                f"{self.kind}: noise must be one of the NoiseKind variants, "
                f"got {type(self.noise).__name__}"
            )

    def validate_for_length(self, length: int) -> None:
        if isinstance(self.noise, SpikeNoise) and self.noise.count > length:
            raise InvalidParameterError(
                f"{self.kind}: spike count={self.noise.count} exceeds series length {length}"
            )

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        noise = self.noise
        if isinstance(noise, UniformNoise):
            if noise.half_width == 0:
                return x.copy()
            return x + rng.uniform(-noise.half_width, noise.half_width, x.size)
        if isinstance(noise, GaussianNoise):
            if noise.sigma == 0:
                return x.copy()
            return x + rng.normal(0.0, noise.sigma, x.size)
        if isinstance(noise, SpikeNoise):
            if noise.count == 0 or noise.magnitude == 0:
                return x.copy()
            scale = float(x.std())
            if scale == 0.0:
                scale = 1.0
            positions = rng.choice(x.size, size=noise.count, replace=False)
            signs = rng.integers(0, 2, size=noise.count) * 2 - 1
            y = x.copy()
            y[positions] += signs * noise.magnitude * scale
            return y
        # slope trend
        if noise.max_offset == 0:
            return x.copy()
        sign = 1.0 if rng.random() < 0.5 else -1.0
        return x + np.linspace(0.0, sign * noise.max_offset, x.size)


@dataclass(frozen=True)
class Repeat(Augmenter):
    """Replicate every series r times consecutively, growing the batch.

    Repeat is the one serial-only operator: it always runs on the serial
    path regardless of the parallel flag, and its per-series form is the
    identity (replication only makes sense at batch level).
    """

    r: int
    probability: float = 1.0
    kind: ClassVar[str] = "repeat"
    changes_geometry: ClassVar[bool] = True
    serial_only: ClassVar[bool] = True

    def _validate(self) -> None:
        if self.r < 1:
            raise InvalidParameterError(f"{self.kind}: r must be >= 1")

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return x.copy()

    def augment_batch(
        self,
        batch: Batch,
        master_seed: int,
        parallel: bool = False,
        augmenter_index: int = 0,
    ) -> Batch:
        if self.probability == 0.0 or self.r == 1:
            return Batch(batch.values.copy())
        return Batch(np.repeat(batch.values, self.r, axis=0))
