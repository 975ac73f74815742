from __future__ import annotations

import numpy as np

from app.mapper.regions import RegionMap


def _pairs_at(even: RegionMap, odd: RegionMap, pixels: np.ndarray) -> frozenset[tuple[int, int]]:
    even_ids = even.region_id.reshape(-1)[pixels]
    odd_ids = odd.region_id.reshape(-1)[pixels]
    both = (even_ids >= 0) & (odd_ids >= 0)
    if not both.any():
        return frozenset()
    pairs = np.unique(np.stack([even_ids[both], odd_ids[both]], axis=1), axis=0)
    return frozenset((int(a), int(b)) for a, b in pairs)


def find_edges(
    even: RegionMap, odd: RegionMap, candidates: np.ndarray
) -> frozenset[tuple[int, int]]:
    """(even id, odd id) pairs witnessed at candidate pixels and their left neighbours."""
    width = even.region_id.shape[1]
    candidates = np.asarray(candidates, dtype=np.int64)
    left = candidates[candidates % width > 0] - 1
    return _pairs_at(even, odd, np.concatenate([candidates, left]))


def naive_edges(even: RegionMap, odd: RegionMap) -> frozenset[tuple[int, int]]:
    return _pairs_at(even, odd, np.arange(even.region_id.size))
