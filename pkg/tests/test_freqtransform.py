import math

import numpy as np
import pytest

from seriesaug import (
    Batch,
    DctBatch,
    InvalidInputError,
    SpectrumBatch,
    dct_forward,
    dct_inverse,
    fft_forward,
    fft_inverse,
    roundtrip_check,
)


def naive_dft_halfspectrum(x):
    """O(L^2) reference: sum_t x[t] * exp(-2*pi*i*k*t/L) for k in 0..L//2."""
    x = np.asarray(x, dtype=np.float64)
    length = x.size
    bins = length // 2 + 1
    re = np.zeros(bins)
    im = np.zeros(bins)
    for k in range(bins):
        for t in range(length):
            ang = -2.0 * math.pi * k * t / length
            re[k] += x[t] * math.cos(ang)
            im[k] += x[t] * math.sin(ang)
    return re, im


def naive_dct2_ortho(x):
    """O(L^2) orthonormal DCT-II reference from the textbook formula."""
    x = np.asarray(x, dtype=np.float64)
    length = x.size
    out = np.zeros(length)
    for k in range(length):
        acc = 0.0
        for t in range(length):
            acc += x[t] * math.cos(math.pi * k * (2 * t + 1) / (2 * length))
        scale = math.sqrt(1.0 / length) if k == 0 else math.sqrt(2.0 / length)
        out[k] = scale * acc
    return out


def rand_batch(n, length, seed):
    return Batch(np.random.default_rng(seed).normal(0, 1, (n, length)))


class TestFftForward:
    def test_constant_series(self):
        sb = fft_forward(Batch(np.array([[1.0, 1.0, 1.0, 1.0]])))
        assert np.array_equal(sb.re[0], [4.0, 0.0, 0.0])
        assert np.array_equal(sb.im[0], [0.0, 0.0, 0.0])

    def test_alternating_series(self):
        sb = fft_forward(Batch(np.array([[1.0, -1.0, 1.0, -1.0]])))
        assert np.array_equal(sb.re[0], [0.0, 0.0, 4.0])
        assert np.array_equal(sb.im[0], [0.0, 0.0, 0.0])

    @pytest.mark.parametrize("length", [2, 3, 8, 15, 16, 17, 64])
    def test_matches_naive_dft(self, length):
        b = rand_batch(3, length, seed=length)
        sb = fft_forward(b)
        for i in range(3):
            re, im = naive_dft_halfspectrum(b.values[i])
            assert np.allclose(sb.re[i], re, atol=1e-9)
            assert np.allclose(sb.im[i], im, atol=1e-9)

    def test_edge_bins_exactly_real(self):
        sb = fft_forward(rand_batch(5, 10, seed=1))
        assert np.all(sb.im[:, 0] == 0.0)
        assert np.all(sb.im[:, -1] == 0.0)

    def test_odd_length_nyquist_free(self):
        sb = fft_forward(rand_batch(2, 7, seed=2))
        assert sb.n_bins == 4
        assert np.all(sb.im[:, 0] == 0.0)
        # bin 3 of a length-7 spectrum is not Nyquist; may be complex
        assert sb.original_len == 7

    def test_linearity(self):
        a = rand_batch(4, 33, seed=3)
        b = rand_batch(4, 33, seed=4)
        combo = Batch(2.0 * a.values - 0.5 * b.values)
        sa, sb_, sc = fft_forward(a), fft_forward(b), fft_forward(combo)
        assert np.allclose(sc.re, 2.0 * sa.re - 0.5 * sb_.re, atol=1e-9)
        assert np.allclose(sc.im, 2.0 * sa.im - 0.5 * sb_.im, atol=1e-9)

    def test_parseval(self):
        b = rand_batch(3, 97, seed=5)
        sb = fft_forward(b)
        length = b.length
        for i in range(3):
            mag2 = sb.re[i] ** 2 + sb.im[i] ** 2
            # half spectrum: double the interior bins
            interior = slice(1, length // 2 + (1 if length % 2 else 0))
            total = mag2[0] + 2.0 * mag2[interior].sum()
            if length % 2 == 0:
                total += mag2[-1]
            energy = (b.values[i] ** 2).sum() * length
            assert abs(total - energy) / energy < 1e-10


class TestFftRoundTrip:
    @pytest.mark.parametrize("length", [2, 3, 16, 97, 100, 571])
    def test_reconstruction(self, length):
        b = rand_batch(6, length, seed=length + 100)
        out = fft_inverse(fft_forward(b))
        assert np.max(np.abs(out.values - b.values)) < 1e-10

    def test_roundtrip_check_value(self):
        b = rand_batch(4, 50, seed=6)
        assert roundtrip_check(b, "fft") < 1e-10

    def test_scale_invariance_relative(self):
        base = rand_batch(2, 40, seed=7)
        big = Batch(base.values * 1e6)
        err_small = roundtrip_check(base, "fft")
        err_big = roundtrip_check(big, "fft") / 1e6
        assert err_big < 1e-10 and err_small < 1e-10


class TestDct:
    def test_length_two_example(self):
        db = dct_forward(Batch(np.array([[1.0, 0.0]])))
        root_half = math.sqrt(0.5)
        assert np.allclose(db.coeffs[0], [root_half, root_half], atol=1e-15)

    def test_constant_energy_in_dc(self):
        db = dct_forward(Batch(np.full((1, 8), 3.0)))
        assert abs(db.coeffs[0, 0] - 3.0 * math.sqrt(8)) < 1e-12
        assert np.allclose(db.coeffs[0, 1:], 0.0, atol=1e-12)

    @pytest.mark.parametrize("length", [2, 3, 8, 15, 31, 64])
    def test_matches_naive_formula(self, length):
        b = rand_batch(3, length, seed=length + 50)
        db = dct_forward(b)
        for i in range(3):
            assert np.allclose(db.coeffs[i], naive_dct2_ortho(b.values[i]), atol=1e-9)

    def test_orthonormal_energy_preserved(self):
        b = rand_batch(4, 57, seed=8)
        db = dct_forward(b)
        assert np.allclose(
            (db.coeffs**2).sum(axis=1), (b.values**2).sum(axis=1), rtol=1e-12
        )

    @pytest.mark.parametrize("length", [2, 16, 97, 100, 571])
    def test_round_trip(self, length):
        b = rand_batch(5, length, seed=length + 200)
        out = dct_inverse(dct_forward(b))
        assert np.max(np.abs(out.values - b.values)) < 1e-10

    def test_roundtrip_check(self):
        assert roundtrip_check(rand_batch(3, 44, seed=9), "dct") < 1e-10


class TestContainers:
    def test_spectrum_bin_count_validation(self):
        re = np.zeros((2, 4))
        im = np.zeros((2, 4))
        with pytest.raises(InvalidInputError, match="bins"):
            SpectrumBatch(re=re, im=im, original_len=9)

    def test_spectrum_nonreal_dc_rejected(self):
        re = np.zeros((1, 3))
        im = np.array([[0.5, 0.0, 0.0]])
        with pytest.raises(InvalidInputError):
            SpectrumBatch(re=re, im=im, original_len=4)

    def test_spectrum_nonreal_nyquist_rejected(self):
        re = np.zeros((1, 3))
        im = np.array([[0.0, 0.0, 0.5]])
        with pytest.raises(InvalidInputError):
            SpectrumBatch(re=re, im=im, original_len=4)

    def test_spectrum_shape_mismatch(self):
        with pytest.raises(InvalidInputError):
            SpectrumBatch(re=np.zeros((1, 3)), im=np.zeros((2, 3)), original_len=4)

    def test_to_complex(self):
        b = rand_batch(2, 12, seed=10)
        sb = fft_forward(b)
        z = sb.to_complex()
        assert np.array_equal(z.real, sb.re)
        assert np.array_equal(z.imag, sb.im)

    def test_dct_batch_properties(self):
        db = dct_forward(rand_batch(3, 21, seed=11))
        assert db.n == 3
        assert db.original_len == 21

    def test_unknown_transform_name(self):
        with pytest.raises(ValueError):
            roundtrip_check(rand_batch(1, 8, seed=12), "wavelet")
