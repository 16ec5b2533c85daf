import numpy as np
import pytest

from seriesaug import (
    Batch,
    InvalidParameterError,
    SeedContext,
    TimeWarp,
    WindowWarp,
)
from seriesaug.core import derive_stream
from seriesaug.warp import warp_positions


def one(aug, x, seed=0, series=0):
    return aug.augment_one(np.asarray(x, dtype=np.float64), SeedContext(seed, 0, series))


def rng_for(seed):
    return derive_stream(SeedContext(seed))


class TestWarpPositions:
    @pytest.mark.parametrize("seed", range(25))
    def test_strictly_increasing(self, seed):
        pos = warp_positions(100, n_knots=4, intensity=0.5, rng=rng_for(seed))
        assert np.all(np.diff(pos) >= 0.0)  # sampled curve is monotone

    @pytest.mark.parametrize("seed", range(25))
    def test_endpoints_pinned(self, seed):
        pos = warp_positions(57, n_knots=5, intensity=0.8, rng=rng_for(seed))
        assert pos[0] == 0.0
        assert pos[-1] == 56.0

    @pytest.mark.parametrize("seed", range(10))
    def test_bounds(self, seed):
        pos = warp_positions(64, n_knots=6, intensity=2.0, rng=rng_for(seed))
        assert pos.min() >= 0.0
        assert pos.max() <= 63.0

    def test_zero_intensity_identity_grid(self):
        pos = warp_positions(40, n_knots=4, intensity=0.0, rng=rng_for(0))
        assert np.allclose(pos, np.arange(40.0), atol=1e-12)

    def test_two_knots_only_endpoints(self):
        # no interior anchors to jitter, so the map is always identity
        pos = warp_positions(30, n_knots=2, intensity=3.0, rng=rng_for(1))
        assert np.allclose(pos, np.arange(30.0), atol=1e-12)

    def test_draw_count(self):
        # exactly n_knots - 2 normals consumed
        rng_a = rng_for(2)
        warp_positions(50, n_knots=5, intensity=0.5, rng=rng_a)
        rng_b = rng_for(2)
        rng_b.normal(0.0, 1.0, 3)
        assert rng_a.random() == rng_b.random()


class TestTimeWarp:
    def test_zero_intensity_identity_bitwise(self):
        x = np.array([1.0, -0.0, 2.0, 5.0])
        assert np.array_equal(one(TimeWarp(intensity=0.0), x), x)

    def test_length_preserved(self):
        x = np.random.default_rng(0).normal(0, 1, 83)
        assert one(TimeWarp(), x, seed=3).size == 83

    def test_endpoints_fixed(self):
        x = np.random.default_rng(1).normal(0, 1, 60)
        for seed in range(10):
            y = one(TimeWarp(n_knots=4, intensity=0.5), x, seed=seed)
            assert y[0] == x[0]
            assert y[-1] == x[-1]

    def test_values_within_range(self):
        x = np.random.default_rng(2).normal(0, 1, 70)
        y = one(TimeWarp(intensity=1.5), x, seed=4)
        assert y.min() >= x.min() - 1e-12
        assert y.max() <= x.max() + 1e-12

    def test_monotone_input_stays_monotone(self):
        x = np.arange(50.0)
        for seed in range(10):
            y = one(TimeWarp(n_knots=5, intensity=0.8), x, seed=seed)
            assert np.all(np.diff(y) >= -1e-9)

    def test_changes_something(self):
        x = np.sin(np.linspace(0, 6, 100))
        assert not np.array_equal(one(TimeWarp(intensity=0.5), x, seed=5), x)

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            TimeWarp(n_knots=1)
        with pytest.raises(InvalidParameterError):
            TimeWarp(intensity=-0.2)
        with pytest.raises(InvalidParameterError, match="length must be >= 2"):
            one(TimeWarp(), [1.0])


class TestWindowWarp:
    def test_complement_untouched_bitwise(self):
        x = np.random.default_rng(3).normal(0, 1, 120)
        aug = WindowWarp(window_size=20, n_knots=4, intensity=0.6)
        for seed in range(12):
            y = one(aug, x, seed=seed)
            changed = np.flatnonzero(y != x)
            if changed.size == 0:
                continue
            lo, hi = changed.min(), changed.max()
            assert hi - lo + 1 <= 20
            assert np.array_equal(y[:lo], x[:lo])
            assert np.array_equal(y[hi + 1 :], x[hi + 1 :])

    def test_at_most_window_size_modified(self):
        # matches the reported upper bound for a 100-wide window on length 577
        x = np.random.default_rng(4).normal(0, 1, 577)
        aug = WindowWarp(window_size=100, n_knots=4, intensity=0.5)
        for seed in range(8):
            y = one(aug, x, seed=seed)
            assert np.count_nonzero(y != x) <= 100

    def test_full_window_equals_whole_series_warp(self):
        x = np.random.default_rng(5).normal(0, 1, 64)
        ww = one(WindowWarp(window_size=64, n_knots=4, intensity=0.5), x, seed=9)
        tw = one(TimeWarp(n_knots=4, intensity=0.5), x, seed=9)
        assert np.array_equal(ww, tw)

    def test_zero_intensity_identity(self):
        x = np.random.default_rng(6).normal(0, 1, 40)
        assert np.array_equal(one(WindowWarp(window_size=10, intensity=0.0), x), x)

    def test_length_preserved(self):
        x = np.random.default_rng(7).normal(0, 1, 55)
        assert one(WindowWarp(window_size=12), x, seed=2).size == 55

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            WindowWarp(window_size=1)
        with pytest.raises(InvalidParameterError, match="exceeds"):
            one(WindowWarp(window_size=30), np.zeros(10))

    def test_kind_names(self):
        assert TimeWarp.kind == "time_warp"
        assert WindowWarp.kind == "time_warp_window"
