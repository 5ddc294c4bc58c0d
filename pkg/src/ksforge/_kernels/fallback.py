"""Vectorized numpy fallback for the exhaustive assignment scan."""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 22


def _popcount(arr: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    # byte-table popcount for older numpy
    table = np.array([bin(x).count("1") for x in range(256)], dtype=np.uint8)
    return table[arr.view(np.uint8).reshape(arr.shape + (4,))].sum(axis=-1)


def scan(edge_masks, nvert: int):
    """Return all a in [0, 2**nvert) with popcount(a & m) == 1 for every m."""
    if nvert < 0 or nvert > 30:
        raise ValueError("scan supports at most 30 vertices")
    total = 1 << nvert
    masks = np.asarray(edge_masks, dtype=np.uint32)
    out: list[int] = []
    for start in range(0, total, _CHUNK):
        block = np.arange(start, min(start + _CHUNK, total), dtype=np.uint32)
        keep = np.ones(block.shape, dtype=bool)
        for m in masks:
            keep &= _popcount(block & m) == 1
            if not keep.any():
                break
        out.extend(int(a) for a in block[keep])
    return out
