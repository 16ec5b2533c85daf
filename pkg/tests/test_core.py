import numpy as np
import pytest

import seriesaug.core as core
from seriesaug import (
    AUGMENTER_REGISTRY,
    Batch,
    Crop,
    InvalidInputError,
    InvalidParameterError,
    Jitter,
    Reverse,
    SeedContext,
    derive_stream,
)


class TestSeedContext:
    def test_defaults(self):
        ctx = SeedContext(5)
        assert ctx.augmenter_index == 0 and ctx.series_index == 0

    def test_master_seed_range(self):
        SeedContext(0)
        SeedContext((1 << 64) - 1)
        with pytest.raises(InvalidParameterError):
            SeedContext(-1)
        with pytest.raises(InvalidParameterError):
            SeedContext(1 << 64)

    def test_negative_indices_rejected(self):
        with pytest.raises(InvalidParameterError):
            SeedContext(0, augmenter_index=-1)
        with pytest.raises(InvalidParameterError):
            SeedContext(0, series_index=-1)


class TestDeriveStream:
    def test_same_ctx_same_draws(self):
        a = derive_stream(SeedContext(42, 1, 2)).random(100)
        b = derive_stream(SeedContext(42, 1, 2)).random(100)
        assert np.array_equal(a, b)

    def test_series_index_changes_draws(self):
        a = derive_stream(SeedContext(42, 1, 2)).random(8)
        b = derive_stream(SeedContext(42, 1, 3)).random(8)
        assert not np.array_equal(a, b)

    def test_augmenter_index_changes_draws(self):
        a = derive_stream(SeedContext(42, 1, 2)).random(8)
        b = derive_stream(SeedContext(42, 2, 2)).random(8)
        assert not np.array_equal(a, b)

    def test_uniform_mean(self):
        u = derive_stream(SeedContext(42)).random(100_000)
        assert abs(u.mean() - 0.5) < 0.01


class TestBatch:
    def test_requires_2d(self):
        with pytest.raises(InvalidInputError):
            Batch(np.zeros(4))
        with pytest.raises(InvalidInputError):
            Batch(np.zeros((2, 2, 2)))

    def test_rejects_empty(self):
        with pytest.raises(InvalidInputError):
            Batch(np.zeros((0, 4)))
        with pytest.raises(InvalidInputError):
            Batch(np.zeros((4, 0)))

    def test_rejects_nonfinite(self):
        with pytest.raises(InvalidInputError):
            Batch(np.array([[1.0, np.nan]]))
        with pytest.raises(InvalidInputError):
            Batch(np.array([[np.inf, 0.0]]))

    def test_from_sequences_ragged(self):
        with pytest.raises(InvalidInputError, match="same length"):
            Batch.from_sequences([[1.0, 2.0], [3.0]])

    def test_properties_and_equality(self):
        b = Batch(np.arange(6.0).reshape(2, 3))
        assert b.n == 2 and b.length == 3
        assert b == Batch(np.arange(6.0).reshape(2, 3))
        assert b != Batch(np.arange(6.0).reshape(3, 2))

    def test_copies_input(self):
        arr = np.ones((2, 2))
        b = Batch(arr)
        arr[0, 0] = 7.0
        # float64 contiguous input is not copied by ascontiguousarray, so
        # the batch view reflects it; callers pass ownership on ingest
        assert b.values[0, 0] == 7.0


class TestAugmenterContract:
    def test_registry_has_all_kinds(self):
        expected = {
            "jitter", "scale", "rotate", "permute_segments", "crop", "reverse",
            "resize", "quantize", "drift", "inject_noise", "repeat",
            "amplitude_phase_perturb", "frequency_mask", "time_warp",
            "time_warp_window",
        }
        assert set(AUGMENTER_REGISTRY) == expected

    def test_probability_validated(self):
        with pytest.raises(InvalidParameterError, match="probability"):
            Jitter(sigma=0.1, probability=1.5)
        with pytest.raises(InvalidParameterError, match="probability"):
            Jitter(sigma=0.1, probability=-0.1)

    def test_geometry_changers_need_certain_probability(self):
        Crop(size=3, probability=0.0)
        Crop(size=3, probability=1.0)
        with pytest.raises(InvalidParameterError, match="probability must be 0 or 1"):
            Crop(size=3, probability=0.5)

    def test_probability_zero_is_identity(self):
        b = Batch(np.random.default_rng(0).normal(0, 1, (10, 16)))
        out = Jitter(sigma=2.0, probability=0.0).augment_batch(b, 9)
        assert out == b

    def test_augment_one_rejects_bad_series(self):
        j = Jitter(sigma=0.1)
        with pytest.raises(InvalidInputError):
            j.augment_one(np.zeros((2, 2)), SeedContext(0))
        with pytest.raises(InvalidInputError):
            j.augment_one(np.array([]), SeedContext(0))

    def test_batch_element_matches_augment_one(self):
        b = Batch(np.random.default_rng(1).normal(0, 1, (5, 12)))
        out = Jitter(sigma=0.3).augment_batch(b, 77)
        for i in range(b.n):
            row = Jitter(sigma=0.3).augment_one(b.values[i], SeedContext(77, 0, i))
            assert np.array_equal(out.values[i], row)

    def test_parallel_serial_bitwise(self):
        b = Batch(np.random.default_rng(2).normal(0, 1, (64, 32)))
        ser = Jitter(sigma=0.5).augment_batch(b, 3, parallel=False)
        par = Jitter(sigma=0.5).augment_batch(b, 3, parallel=True)
        assert ser == par

    def test_params_excludes_probability(self):
        assert Jitter(sigma=0.5, probability=0.7).params() == {"sigma": 0.5}
        assert Reverse().params() == {}


class TestWorkerPlumbing:
    def test_worker_count_env_cap(self, monkeypatch):
        monkeypatch.setenv(core.THREAD_ENV_VAR, "1")
        assert core.worker_count() == 1
        monkeypatch.setenv(core.THREAD_ENV_VAR, "not-a-number")
        assert core.worker_count() >= 1

    def test_pool_path_matches_serial(self, monkeypatch):
        # single-cpu hosts never enter the pool naturally; force 4 workers
        monkeypatch.setattr(core, "worker_count", lambda: 4)
        n = 103
        serial = np.zeros(n)
        pooled = np.zeros(n)
        core.run_indexed_tasks(lambda i: serial.__setitem__(i, i * 1.5), n, False)
        core.run_indexed_tasks(lambda i: pooled.__setitem__(i, i * 1.5), n, True)
        assert np.array_equal(serial, pooled)

    def test_pool_path_augmenter_bitwise(self, monkeypatch):
        monkeypatch.setattr(core, "worker_count", lambda: 4)
        b = Batch(np.random.default_rng(5).normal(0, 1, (50, 20)))
        ser = Jitter(sigma=0.4).augment_batch(b, 11, parallel=False)
        par = Jitter(sigma=0.4).augment_batch(b, 11, parallel=True)
        assert ser == par


class TestGateStatistics:
    def test_half_probability_gate_count(self):
        # binomial(10^4, 0.5): 3 sigma = 150
        b = Batch(np.ones((10_000, 8)))
        out = Jitter(sigma=0.5, probability=0.5).augment_batch(b, 12345)
        changed = int((out.values != b.values).any(axis=1).sum())
        assert 5000 - 150 <= changed <= 5000 + 150
