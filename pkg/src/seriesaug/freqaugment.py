"""Spectral augmenters: amplitude/phase perturbation and frequency masking.

Both operate on the half spectrum.  Applied to a time-domain batch they
wrap the perturbation in an FFT round trip; applied to a SpectrumBatch
via augment_spectrum they perturb the bins directly.  The two paths
share one per-row routine and one draw order, so transforming first and
augmenting the spectrum gives bitwise the same spectrum as augmenting
the series and transforming after.
"""

from __future__ import annotations

from abc import abstractmethod
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .core import Augmenter, SeedContext, derive_stream, run_indexed_tasks
from .errors import InvalidParameterError
from .freqtransform import SpectrumBatch


class SpectralAugmenter(Augmenter):
    """Shared plumbing for augmenters defined on the half spectrum."""

    @abstractmethod
    def _perturb_row(
        self, re: np.ndarray, im: np.ndarray, original_len: int, rng: np.random.Generator
    ) -> tuple[np.ndarray, np.ndarray]:
        """Perturb one spectrum row.  May modify the inputs in place."""

    def _is_noop(self) -> bool:
        """True when parameters make the perturbation an exact identity."""
        return False

    def _apply(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        if self._is_noop():
            return x.copy()
        spec = np.fft.rfft(x)
        re = np.ascontiguousarray(spec.real)
        im = np.ascontiguousarray(spec.imag)
        im[0] = 0.0
        if x.size % 2 == 0:
            im[-1] = 0.0
        re, im = self._perturb_row(re, im, x.size, rng)
        return np.fft.irfft(re + 1j * im, n=x.size)

    def augment_spectrum(
        self,
        sbatch: SpectrumBatch,
        master_seed: int,
        parallel: bool = False,
        augmenter_index: int = 0,
    ) -> SpectrumBatch:
        """Apply the augmenter to a half spectrum, row by row.

        Seeding, the probability gate and the parallel contract are the
        same as for time-domain batches.
        """
        self.validate_for_length(sbatch.original_len)
        re_out = np.empty_like(sbatch.re)
        im_out = np.empty_like(sbatch.im)

        def task(i: int) -> None:
            rng = derive_stream(SeedContext(master_seed, augmenter_index, i))
            if rng.random() >= self.probability or self._is_noop():
                re_out[i] = sbatch.re[i]
                im_out[i] = sbatch.im[i]
                return
            re_out[i], im_out[i] = self._perturb_row(
                sbatch.re[i].copy(), sbatch.im[i].copy(), sbatch.original_len, rng
            )

        run_indexed_tasks(task, sbatch.n, parallel and not self.serial_only)
        return SpectrumBatch(re_out, im_out, sbatch.original_len)


@dataclass(frozen=True)
class AmplitudePhasePerturb(SpectralAugmenter):
    """Jitter each bin's magnitude and phase with independent Gaussians.

    Magnitudes get additive N(0, sigma_amp^2) noise clipped at zero;
    phases rotate by N(0, sigma_phase^2) radians.  The DC bin, and the
    Nyquist bin for even lengths, stay purely real: their magnitude is
    perturbed, their sign kept, their phase untouched.

    Draw order per series: gate, then one magnitude-noise value per bin,
    then one phase-noise value per bin.
    """

    sigma_amp: float
    sigma_phase: float
    probability: float = 1.0
    kind: ClassVar[str] = "amplitude_phase_perturb"

    def _validate(self) -> None:
        if not self.sigma_amp >= 0:
            raise InvalidParameterError(f"{self.kind}: sigma_amp must be >= 0")
        if not self.sigma_phase >= 0:
            raise InvalidParameterError(f"{self.kind}: sigma_phase must be >= 0")

    def _is_noop(self) -> bool:
        return self.sigma_amp == 0 and self.sigma_phase == 0

    def _perturb_row(
        self, re: np.ndarray, im: np.ndarray, original_len: int, rng: np.random.Generator
    ) -> tuple[np.ndarray, np.ndarray]:
        bins = re.size
        amp_noise = rng.normal(0.0, self.sigma_amp, bins)
        phase_noise = rng.normal(0.0, self.sigma_phase, bins)

        real_bins = [0] + ([bins - 1] if original_len % 2 == 0 else [])
        lo = 1
        hi = bins - 1 if original_len % 2 == 0 else bins

        r = np.hypot(re[lo:hi], im[lo:hi])
        theta = np.arctan2(im[lo:hi], re[lo:hi]) + phase_noise[lo:hi]
        r = np.maximum(r + amp_noise[lo:hi], 0.0)
        re[lo:hi] = r * np.cos(theta)
        im[lo:hi] = r * np.sin(theta)

        # real bins keep their sign and exact-zero imaginary part; no
        # trig here or rounding would leak into im
        for b in real_bins:
            sign = 1.0 if re[b] >= 0 else -1.0
            re[b] = sign * max(abs(re[b]) + amp_noise[b], 0.0)
            im[b] = 0.0
        return re, im


@dataclass(frozen=True)
class FrequencyMask(SpectralAugmenter):
    """Zero a contiguous band of `width` bins around a random center.

    The center is uniform over the bins; the band is shifted to fit, so
    exactly `width` bins are always zeroed.  width equal to the bin
    count erases the whole spectrum.

    Draw order per series: gate, then the center bin.
    """

    width: int
    probability: float = 1.0
    kind: ClassVar[str] = "frequency_mask"

    def _validate(self) -> None:
        if self.width < 0:
            raise InvalidParameterError(f"{self.kind}: width must be >= 0")

    def validate_for_length(self, length: int) -> None:
        bins = length // 2 + 1
        if self.width > bins:
            raise InvalidParameterError(
                f"{self.kind}: width={self.width} exceeds the {bins} spectrum bins "
                f"of length-{length} series"
            )

    def _is_noop(self) -> bool:
        return self.width == 0

    def _perturb_row(
        self, re: np.ndarray, im: np.ndarray, original_len: int, rng: np.random.Generator
    ) -> tuple[np.ndarray, np.ndarray]:
        bins = re.size
        center = int(rng.integers(0, bins))
        start = min(max(center - self.width // 2, 0), bins - self.width)
        re[start : start + self.width] = 0.0
        im[start : start + self.width] = 0.0
        return re, im
