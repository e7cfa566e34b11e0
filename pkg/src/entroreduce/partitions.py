"""Enumeration of set partitions into exactly m nonempty blocks.

Partitions of {0..n-1} are encoded as restricted growth strings: code[i] is the
block id of element i, block ids appear in first-use order (code[0] = 0 and
code[i] <= max(code[:i]) + 1). The full table for one (n, m) is produced by a
vectorized breadth-first growth over positions and cached, since the exhaustive
solvers and the verification suite hit the same small (n, m) pairs repeatedly.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def stirling2(n: int, m: int) -> int:
    """Number of partitions of an n-set into exactly m nonempty blocks."""
    if m < 0 or m > n:
        return 0
    # S(i, k) = k*S(i-1, k) + S(i-1, k-1), rolled over one row
    row = [1] + [0] * m
    for i in range(1, n + 1):
        for k in range(min(m, i), 0, -1):
            row[k] = k * row[k] + row[k - 1]
        row[0] = 0
    return row[m]


@lru_cache(maxsize=None)
def partition_assignments(n: int, m: int) -> np.ndarray:
    """All restricted growth strings of length n with exactly m blocks.

    Returns a read-only uint8 array of shape (S(n, m), n) in lexicographic row
    order. Rows whose prefix can no longer reach m blocks are pruned during
    growth, so memory stays proportional to the answer.
    """
    if n < 1 or m < 1 or m > n:
        raise ValueError(f"need 1 <= m <= n, got n={n} m={m}")
    codes = np.zeros((1, 1), dtype=np.uint8)
    nblocks = np.ones(1, dtype=np.int64)
    for pos in range(1, n):
        reachable = nblocks + (n - pos) >= m
        codes = codes[reachable]
        nblocks = nblocks[reachable]
        fanout = np.minimum(nblocks + 1, m)
        rows = np.repeat(np.arange(codes.shape[0]), fanout)
        offsets = np.repeat(np.cumsum(fanout) - fanout, fanout)
        new_col = (np.arange(rows.shape[0]) - offsets).astype(np.uint8)
        codes = np.concatenate([codes[rows], new_col[:, None]], axis=1)
        nblocks = np.maximum(nblocks[rows], new_col.astype(np.int64) + 1)
    codes = np.ascontiguousarray(codes[nblocks == m])
    codes.setflags(write=False)
    return codes


def blocks_from_code(code) -> tuple[tuple[int, ...], ...]:
    """Group positions 0..n-1 by block id. Block ids are in first-use order,
    so the blocks come out sorted by their smallest element."""
    code = np.asarray(code)
    m = int(code.max()) + 1
    return tuple(
        tuple(int(i) for i in np.nonzero(code == b)[0]) for b in range(m)
    )
