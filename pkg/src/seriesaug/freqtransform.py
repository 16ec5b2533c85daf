"""Batch spectral transforms: orthonormal DCT-II and real FFT.

The FFT representation is the half spectrum: L//2 + 1 bins of separate
real and imaginary parts.  The DC bin is always purely real, and so is
the Nyquist bin when the original length is even; those imaginary parts
are pinned to exactly 0.0 and validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from .core import Batch
from .errors import InvalidInputError


def _as_float2d(name: str, arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.float64)
    if out.ndim != 2 or out.size == 0:
        raise InvalidInputError(f"{name} must be a non-empty 2-D array")
    if not np.all(np.isfinite(out)):
        raise InvalidInputError(f"{name} must contain only finite values")
    return out


@dataclass(frozen=True)
class DctBatch:
    """DCT-II coefficients of a batch, one row per series."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _as_float2d("coeffs", self.coeffs))

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    @property
    def original_len(self) -> int:
        return self.coeffs.shape[1]


@dataclass(frozen=True)
class SpectrumBatch:
    """Half spectrum of a real batch: re/im arrays of shape (N, L//2 + 1).

    original_len disambiguates even from odd L (both map onto the same
    bin count otherwise only for different L).
    """

    re: np.ndarray
    im: np.ndarray
    original_len: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_float2d("re", self.re))
        object.__setattr__(self, "im", _as_float2d("im", self.im))
        if self.re.shape != self.im.shape:
            raise InvalidInputError(
                f"re and im must have the same shape, got {self.re.shape} and {self.im.shape}"
            )
        if self.original_len < 1:
            raise InvalidInputError("original_len must be >= 1")
        expected = self.original_len // 2 + 1
        if self.re.shape[1] != expected:
            raise InvalidInputError(
                f"original_len={self.original_len} implies {expected} bins, "
                f"got {self.re.shape[1]}"
            )
        if np.any(self.im[:, 0] != 0.0):
            raise InvalidInputError("DC bin must be purely real")
        if self.original_len % 2 == 0 and np.any(self.im[:, -1] != 0.0):
            raise InvalidInputError("Nyquist bin must be purely real for even lengths")

    @property
    def n(self) -> int:
        return self.re.shape[0]

    @property
    def n_bins(self) -> int:
        return self.re.shape[1]

    def to_complex(self) -> np.ndarray:
        return self.re + 1j * self.im


def dct_forward(batch: Batch) -> DctBatch:
    """Orthonormal DCT-II along the time axis."""
    return DctBatch(scipy.fft.dct(batch.values, type=2, norm="ortho", axis=1))


def dct_inverse(dbatch: DctBatch) -> Batch:
    """Inverse of dct_forward (orthonormal DCT-III)."""
    return Batch(scipy.fft.idct(dbatch.coeffs, type=2, norm="ortho", axis=1))


def fft_forward(batch: Batch) -> SpectrumBatch:
    """Real FFT along the time axis, returned as a half spectrum."""
    spec = np.fft.rfft(batch.values, axis=1)
    re = np.ascontiguousarray(spec.real)
    im = np.ascontiguousarray(spec.imag)
    # pocketfft already yields exact zeros here; pin them regardless so
    # the invariant never depends on the backend
    im[:, 0] = 0.0
    if batch.length % 2 == 0:
        im[:, -1] = 0.0
    return SpectrumBatch(re, im, batch.length)


def fft_inverse(sbatch: SpectrumBatch) -> Batch:
    """Inverse real FFT back to the time domain."""
    return Batch(np.fft.irfft(sbatch.to_complex(), n=sbatch.original_len, axis=1))


TRANSFORMS = ("dct", "fft")


def roundtrip_check(batch: Batch, transform: str) -> float:
    """Max absolute forward-inverse error over the batch."""
    if transform == "dct":
        restored = dct_inverse(dct_forward(batch))
    elif transform == "fft":
        restored = fft_inverse(fft_forward(batch))
    else:
        raise InvalidInputError(
            f"unknown transform {transform!r}, expected one of {TRANSFORMS}"
        )
    return float(np.abs(restored.values - batch.values).max())
