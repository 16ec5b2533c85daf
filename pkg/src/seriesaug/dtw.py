"""Dynamic time warping with an explicit alignment path.

Classic O(L1*L2) dynamic program over the |a_i - b_j| local cost, with
steps (1,1), (1,0), (0,1).  The backtrack breaks ties in a fixed order
(diagonal, then advancing a, then advancing b) so the reported path is
deterministic.  Similarity squashes the length-normalized distance into
(0, 1]: identical series score 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Batch
from .errors import InvalidInputError


def _as_series(name: str, values) -> np.ndarray:
    x = np.ascontiguousarray(values, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise InvalidInputError(f"{name} must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError(f"{name} must contain only finite values")
    return x


@dataclass(frozen=True)
class DtwResult:
    distance: float
    path: list  # [(i, j), ...] from (0, 0) to (L1-1, L2-1)
    similarity: float

    @property
    def path_length(self) -> int:
        return len(self.path)


def dtw_distance(a, b) -> DtwResult:
    """Full DTW between two series, returning distance and one optimal path."""
    a = _as_series("a", a)
    b = _as_series("b", b)
    n, m = a.size, b.size

    cost = np.abs(a[:, None] - b[None, :])
    acc = np.empty((n, m))
    acc[0, 0] = cost[0, 0]
    for j in range(1, m):
        acc[0, j] = acc[0, j - 1] + cost[0, j]
    for i in range(1, n):
        acc[i, 0] = acc[i - 1, 0] + cost[i, 0]
        row = acc[i]
        prev = acc[i - 1]
        crow = cost[i]
        for j in range(1, m):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if row[j - 1] < best:
                best = row[j - 1]
            row[j] = crow[j] + best

    path = [(n - 1, m - 1)]
    i, j = n - 1, m - 1
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            best = acc[i - 1, j - 1]
            step = (i - 1, j - 1)
            if acc[i - 1, j] < best:
                best = acc[i - 1, j]
                step = (i - 1, j)
            if acc[i, j - 1] < best:
                step = (i, j - 1)
            i, j = step
            path.append(step)
            continue
        path.append((i, j))
    path.reverse()
    distance = float(acc[n - 1, m - 1])
    return DtwResult(distance, path, similarity_from_distance(distance, n, m))


def similarity_from_distance(distance: float, len_a: int, len_b: int) -> float:
    return 1.0 / (1.0 + distance / max(len_a, len_b))


def dtw_similarity(a, b) -> float:
    """Length-normalized similarity in (0, 1]; 1 means identical."""
    return dtw_distance(a, b).similarity


def mean_similarity(a: Batch, b: Batch) -> float:
    """Mean row-wise DTW similarity between two batches of equal N."""
    if a.n != b.n:
        raise InvalidInputError(
            f"batches must have the same number of series, got {a.n} and {b.n}"
        )
    total = 0.0
    for i in range(a.n):
        total += dtw_similarity(a.values[i], b.values[i])
    return total / a.n
