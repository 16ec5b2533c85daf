"""Monotone time warps: whole-series and windowed.

Both build the same piecewise-linear warp: knot positions are evenly
spaced, interior knots are displaced by Gaussian noise scaled to the
knot spacing, and the result is forced back to a strictly increasing
map with exact endpoints.  The series is then resampled along that map,
so length never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .core import Augmenter
from .errors import InvalidParameterError

# minimum knot gap (index units) restored after displacement; keeps the
# map strictly increasing even when every knot lands on the same clip bound
_MIN_GAP = 1e-6


def warp_positions(
    length: int, n_knots: int, intensity: float, rng: np.random.Generator
) -> np.ndarray:
    """Strictly increasing map from output index to input position.

    n_knots counts all anchors including the two pinned endpoints, so
    the map consumes exactly n_knots - 2 Gaussian draws.
    """
    span = length - 1.0
    knots = np.linspace(0.0, span, n_knots)
    spacing = span / (n_knots - 1)
    interior = knots[1:-1] + rng.normal(0.0, intensity * spacing, n_knots - 2)
    interior = np.clip(np.sort(interior), 0.0, span)

    warped = np.concatenate([[0.0], interior, [span]])
    gaps = np.maximum(np.diff(warped), _MIN_GAP)
    warped = np.concatenate([[0.0], np.cumsum(gaps)])
    warped *= span / warped[-1]
    warped[-1] = span
    if np.any(np.diff(warped) <= 0):
        raise RuntimeError("warp map failed to stay strictly increasing")

    return np.interp(np.arange(length, dtype=np.float64), knots, warped)


def _resample(x: np.ndarray, positions: np.ndarray) -> np.ndarray:
    return np.interp(positions, np.arange(x.size, dtype=np.float64), x)


@dataclass(frozen=True)
class TimeWarp(Augmenter):
    """Warp the whole time axis along a random monotone map."""

    n_knots: int = 4
    intensity: float = 0.5
    probability: float = 1.0
    kind: ClassVar[str] = "time_warp"

    def _validate(self) -> None:
        if self.n_knots < 2:
            raise InvalidParameterError(f"{self.kind}: n_knots must be >= 2")
        if not self.intensity >= 0:
            raise InvalidParameterError(f"{self.kind}: intensity must be >= 0")

    def validate_for_length(self, length: int) -> None:
        if length < 2:
            raise InvalidParameterError(f"{self.kind}: input length must be >= 2")

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.intensity == 0:
            return x.copy()
        return _resample(x, warp_positions(x.size, self.n_knots, self.intensity, rng))


@dataclass(frozen=True)
class WindowWarp(Augmenter):
    """Warp only a random window of the series, leave the rest alone.

    Draw order per series: gate, window start (skipped when the window
    covers the whole series, so a full window reproduces time_warp
    bitwise), then the knot displacements.
    """

    window_size: int
    n_knots: int = 4
    intensity: float = 0.5
    probability: float = 1.0
    kind: ClassVar[str] = "time_warp_window"

    def _validate(self) -> None:
        if self.window_size < 2:
            raise InvalidParameterError(f"{self.kind}: window_size must be >= 2")
        if self.n_knots < 2:
            raise InvalidParameterError(f"{self.kind}: n_knots must be >= 2")
        if not self.intensity >= 0:
            raise InvalidParameterError(f"{self.kind}: intensity must be >= 0")

    def validate_for_length(self, length: int) -> None:
        if self.window_size > length:
            raise InvalidParameterError(
                f"{self.kind}: window_size={self.window_size} exceeds series length {length}"
            )

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self.intensity == 0:
            return x.copy()
        w = self.window_size
        start = 0 if w == x.size else int(rng.integers(0, x.size - w + 1))
        y = x.copy()
        window = x[start : start + w]
        y[start : start + w] = _resample(
            window, warp_positions(w, self.n_knots, self.intensity, rng)
        )
        return y
