from __future__ import annotations

import logging

from dataclasses import dataclass

import numba as nb
import numpy as np

from app.field.scalar_field import EIGHT_OFFSETS, Connectivity, ScalarField
from app.mapper.labeling import LabelMap

logger = logging.getLogger(__name__)

_ROW_STEPS = np.array([dr for dr, _ in EIGHT_OFFSETS], dtype=np.int64)
_COL_STEPS = np.array([dc for _, dc in EIGHT_OFFSETS], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class RegionMap:
    """
    Connected regions of one labelling.

    ``region_id`` holds, per pixel, the minimum linear index of its region
    (-1 when unlabelled). The per-region arrays are sorted by id.
    """

    region_id: np.ndarray
    ids: np.ndarray
    intervals: np.ndarray
    counts: np.ndarray
    value_sums: np.ndarray
    x_sums: np.ndarray
    y_sums: np.ndarray

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def means(self) -> np.ndarray:
        return self.value_sums / self.counts

    @property
    def centroids(self) -> tuple[np.ndarray, np.ndarray]:
        return self.x_sums / self.counts, self.y_sums / self.counts


@nb.njit(cache=True, nogil=True)
def _flood(labels, seeds, width, height, n_steps, row_steps, col_steps):
    size = labels.size
    region = np.full(size, -1, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    n_regions = 0
    for seed in seeds:
        if labels[seed] < 0 or region[seed] >= 0:
            continue
        head = 0
        tail = 1
        queue[0] = seed
        region[seed] = n_regions
        label = labels[seed]
        while head < tail:
            p = queue[head]
            head += 1
            row = p // width
            col = p - row * width
            for k in range(n_steps):
                r = row + row_steps[k]
                c = col + col_steps[k]
                if r < 0 or r >= height or c < 0 or c >= width:
                    continue
                q = r * width + c
                if region[q] < 0 and labels[q] == label:
                    region[q] = n_regions
                    queue[tail] = q
                    tail += 1
        n_regions += 1
    return region, n_regions


def find_regions(
    field: ScalarField,
    label_map: LabelMap,
    candidates: np.ndarray,
    conn: Connectivity = Connectivity.FOUR,
) -> RegionMap:
    """BFS from every candidate pixel labelled in this map; statistics per region."""
    labels = np.ascontiguousarray(label_map.labels.reshape(-1), dtype=np.int64)
    n_steps = 8 if Connectivity(conn).eight else 4
    temp, n_regions = _flood(
        labels,
        np.ascontiguousarray(candidates, dtype=np.int64),
        label_map.width,
        label_map.height,
        n_steps,
        _ROW_STEPS,
        _COL_STEPS,
    )

    pixels = np.flatnonzero(temp >= 0)
    owners = temp[pixels]
    first = np.full(n_regions, labels.size, dtype=np.int64)
    np.minimum.at(first, owners, pixels)

    rows, cols = np.divmod(pixels, label_map.width)
    counts = np.bincount(owners, minlength=n_regions)
    value_sums = np.bincount(owners, weights=field.flat[pixels], minlength=n_regions)
    x_sums = np.bincount(owners, weights=cols, minlength=n_regions)
    y_sums = np.bincount(owners, weights=rows, minlength=n_regions)

    order = np.argsort(first, kind="stable")
    region_id = np.full(labels.size, -1, dtype=np.int64)
    region_id[pixels] = first[owners]

    logger.debug("Found %d regions over %d pixels", n_regions, pixels.size)
    return RegionMap(
        region_id=region_id.reshape(label_map.labels.shape),
        ids=first[order],
        intervals=labels[first[order]],
        counts=counts[order],
        value_sums=value_sums[order],
        x_sums=x_sums[order],
        y_sums=y_sums[order],
    )
