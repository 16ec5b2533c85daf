import numpy as np
import pytest

from seriesaug import (
    Batch,
    DtwResult,
    InvalidInputError,
    dtw_distance,
    dtw_similarity,
    mean_similarity,
)


def exhaustive_min_cost(a, b):
    """Enumerate every monotone warping path by DFS and return the cheapest cost.

    Exponential, fine for the tiny inputs used here.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    n, m = a.size, b.size
    best = [np.inf]

    def walk(i, j, cost):
        cost += abs(a[i] - b[j])
        if cost >= best[0]:
            return
        if i == n - 1 and j == m - 1:
            best[0] = cost
            return
        if i + 1 < n and j + 1 < m:
            walk(i + 1, j + 1, cost)
        if i + 1 < n:
            walk(i + 1, j, cost)
        if j + 1 < m:
            walk(i, j + 1, cost)

    walk(0, 0, 0.0)
    return best[0]


class TestDistance:
    def test_identical_series(self):
        r = dtw_distance([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
        assert r.distance == 0.0
        assert r.path == [(0, 0), (1, 1), (2, 2)]
        assert r.similarity == 1.0

    def test_stretched_series(self):
        r = dtw_distance([1.0, 2.0, 3.0], [1.0, 2.0, 2.0, 3.0])
        assert r.distance == 0.0
        assert r.similarity == 1.0

    def test_known_cost(self):
        # best alignment pays |2-3| once
        r = dtw_distance([0.0, 2.0], [0.0, 3.0])
        assert r.distance == 1.0

    def test_single_points(self):
        r = dtw_distance([4.0], [1.5])
        assert r.distance == 2.5
        assert r.path == [(0, 0)]

    def test_symmetry(self):
        rng = np.random.default_rng(0)
        for _ in range(25):
            a = rng.normal(0, 1, rng.integers(1, 9))
            b = rng.normal(0, 1, rng.integers(1, 9))
            assert dtw_distance(a, b).distance == pytest.approx(
                dtw_distance(b, a).distance, abs=1e-12
            )

    def test_matches_exhaustive_search(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            a = rng.integers(-3, 4, rng.integers(1, 7)).astype(np.float64)
            b = rng.integers(-3, 4, rng.integers(1, 7)).astype(np.float64)
            got = dtw_distance(a, b).distance
            want = exhaustive_min_cost(a, b)
            assert got == want, f"a={a} b={b}: dp {got} != brute {want}"


class TestPath:
    def test_endpoints(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            a = rng.normal(0, 1, rng.integers(2, 10))
            b = rng.normal(0, 1, rng.integers(2, 10))
            path = dtw_distance(a, b).path
            assert path[0] == (0, 0)
            assert path[-1] == (a.size - 1, b.size - 1)

    def test_steps_monotone(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            a = rng.normal(0, 1, rng.integers(2, 10))
            b = rng.normal(0, 1, rng.integers(2, 10))
            path = dtw_distance(a, b).path
            for (i0, j0), (i1, j1) in zip(path, path[1:]):
                di, dj = i1 - i0, j1 - j0
                assert (di, dj) in {(1, 0), (0, 1), (1, 1)}

    def test_path_cost_equals_distance(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            a = rng.normal(0, 1, rng.integers(1, 12))
            b = rng.normal(0, 1, rng.integers(1, 12))
            r = dtw_distance(a, b)
            path_cost = sum(abs(a[i] - b[j]) for i, j in r.path)
            assert path_cost == pytest.approx(r.distance, abs=1e-12)

    def test_path_length_property(self):
        r = dtw_distance([1.0, 2.0], [1.0, 2.0, 3.0])
        assert r.path_length == len(r.path)


class TestSimilarity:
    def test_range(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            a = rng.normal(0, 5, 8)
            b = rng.normal(0, 5, 11)
            s = dtw_similarity(a, b)
            assert 0.0 < s <= 1.0

    def test_formula(self):
        a = [0.0, 2.0]
        b = [0.0, 3.0, 1.0]
        r = dtw_distance(a, b)
        assert r.similarity == 1.0 / (1.0 + r.distance / 3.0)

    def test_farther_is_less_similar(self):
        base = np.sin(np.linspace(0, 4, 30))
        near = base + 0.05
        far = base + 2.0
        assert dtw_similarity(base, near) > dtw_similarity(base, far)

    def test_mean_similarity(self):
        a = Batch(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert mean_similarity(a, a) == 1.0

    def test_mean_similarity_is_mean(self):
        a = Batch(np.array([[0.0, 0.0], [0.0, 0.0]]))
        b = Batch(np.array([[0.0, 0.0], [1.0, 1.0]]))
        s0 = dtw_similarity(a.values[0], b.values[0])
        s1 = dtw_similarity(a.values[1], b.values[1])
        assert mean_similarity(a, b) == pytest.approx((s0 + s1) / 2.0, abs=1e-15)

    def test_mean_similarity_count_mismatch(self):
        a = Batch(np.zeros((2, 4)))
        b = Batch(np.zeros((3, 4)))
        with pytest.raises(InvalidInputError):
            mean_similarity(a, b)


class TestValidation:
    def test_empty_series(self):
        with pytest.raises(InvalidInputError):
            dtw_distance([], [1.0])
        with pytest.raises(InvalidInputError):
            dtw_distance([1.0], [])

    def test_non_finite(self):
        with pytest.raises(InvalidInputError):
            dtw_distance([np.nan], [1.0])
        with pytest.raises(InvalidInputError):
            dtw_distance([1.0], [np.inf])

    def test_two_dimensional_rejected(self):
        with pytest.raises(InvalidInputError):
            dtw_distance(np.zeros((2, 2)), [1.0])

    def test_result_is_frozen(self):
        r = dtw_distance([1.0], [1.0])
        assert isinstance(r, DtwResult)
        with pytest.raises(Exception):
            r.distance = 5.0
