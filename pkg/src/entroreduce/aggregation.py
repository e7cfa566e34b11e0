"""Aggregations: deterministic reductions of a distribution onto m outcomes.

An aggregation is induced by a partition of the component indices into m
nonempty blocks; the reduced distribution is the vector of block sums. This
module provides the greedy merge reduction (maximum entropy up to an additive
constant alpha), the exhaustive exact solvers, and the partition plumbing.
Partitions always refer to the caller's original component indices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels, errors
from .dist import Dist, entropy, make_dist
from .partitions import blocks_from_code

#: exhaustive solvers refuse instances bigger than this by default
DEFAULT_EXACT_CAP = 12

GUARANTEE_EXACT = "exact"
GUARANTEE_ADDITIVE_ALPHA = "additive_alpha"


@dataclass(frozen=True)
class Partition:
    """A partition of {0..n-1} into m nonempty blocks, canonicalized so each
    block is sorted ascending and blocks are ordered by smallest element."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    @property
    def m(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class HuffmanTrace:
    """Record of one greedy merge run.

    merge_steps         -- (node_a, node_b, merged_mass) per step; ids 0..n-1
                           index the working masses in ascending order, id n+t
                           is the node produced by step t
    original_prefix_len -- how many leading components of the final sorted
                           vector are untouched originals (never merged)
    """

    merge_steps: tuple[tuple[int, int, float], ...]
    original_prefix_len: int


@dataclass(frozen=True)
class AggregationResult:
    partition: Partition
    dist: Dist
    h: float
    guarantee: str
    trace: HuffmanTrace | None = None


def make_partition(blocks, n: int) -> Partition:
    """Validate blocks as a partition of {0..n-1} and canonicalize them."""
    try:
        cleaned = tuple(tuple(sorted(int(i) for i in b)) for b in blocks)
    except (TypeError, ValueError) as exc:
        raise errors.BadPartition(f"blocks are not index sequences: {exc}")
    if any(len(b) == 0 for b in cleaned):
        raise errors.BadPartition("empty block")
    flat = [i for b in cleaned for i in b]
    if len(flat) != n or sorted(flat) != list(range(n)):
        raise errors.BadPartition(
            f"blocks do not partition 0..{n - 1}: got indices {sorted(set(flat))[:8]}..."
            if flat
            else "no blocks"
        )
    return Partition(blocks=tuple(sorted(cleaned, key=lambda b: b[0])), n=n)


def aggregate(p: Dist, partition: Partition) -> Dist:
    """Block sums of p under the partition, as a canonical distribution."""
    if partition.n != p.n:
        raise errors.BadPartition(
            f"partition is over {partition.n} components, distribution has {p.n}"
        )
    raw = p.raw()
    sums = np.array([raw[list(b)].sum() for b in partition.blocks])
    return make_dist(sums)


def _check_m(n: int, m) -> int:
    if not float(m).is_integer():
        raise errors.BadM(f"m must be an integer, got {m!r}")
    m = int(m)
    if not 2 <= m < n:
        raise errors.BadM(f"need 2 <= m < n, got m={m} n={n}")
    return m


def _partition_from_positions(position_blocks, p: Dist) -> Partition:
    """Map blocks over canonical (sorted) positions back to original indices."""
    blocks = tuple(tuple(int(p.order[i]) for i in b) for b in position_blocks)
    return make_partition(blocks, p.n)


def huffman_max_aggregation(p: Dist, m: int) -> AggregationResult:
    """Greedy entropy-maximizing reduction to m components.

    Repeatedly merges the two smallest masses (n - m merges total). The
    result's entropy is within alpha() = 0.0861 bits of the best achievable
    over all aggregations onto m outcomes. Ties prefer originals over merged
    nodes and lower original index among equal originals, so the run is
    deterministic.
    """
    m = _check_m(p.n, m)
    n = p.n
    # working order: mass ascending, equal masses by original index ascending
    cons = np.lexsort((p.order, p.probs))
    masses = np.ascontiguousarray(p.probs[cons])
    a, b, v = _kernels.huffman_merges(masses, m)
    k = a.shape[0]
    total = n + k
    node_mass = np.concatenate([masses, v])
    parent = np.full(total, -1, dtype=np.int64)
    new_ids = np.arange(n, total)
    parent[a] = new_ids
    parent[b] = new_ids
    # resolve each node's surviving ancestor (parents always have higher ids)
    root = np.where(parent >= 0, parent, np.arange(total))
    while True:
        nxt = np.where(parent[root] >= 0, parent[root], root)
        if np.array_equal(nxt, root):
            break
        root = nxt
    survivors = np.nonzero(parent < 0)[0]
    # final ordering: mass desc; on ties originals first, then older nodes
    fin = survivors[
        np.lexsort((survivors, survivors >= n, -node_mass[survivors]))
    ]
    original_prefix = 0
    for node in fin:
        if node >= n:
            break
        original_prefix += 1
    # group leaves by surviving ancestor
    leaf_order = np.argsort(root[:n], kind="stable")
    grouped = root[:n][leaf_order]
    cuts = np.nonzero(np.diff(grouped))[0] + 1
    groups = {int(root[g[0]]): g for g in np.split(leaf_order, cuts)}
    orig_blocks = [p.order[cons[groups[int(node)]]] for node in fin]
    part = make_partition([tuple(int(x) for x in blk) for blk in orig_blocks], n)
    dist = aggregate(p, part)
    trace = HuffmanTrace(
        merge_steps=tuple(
            (int(a[t]), int(b[t]), float(v[t])) for t in range(k)
        ),
        original_prefix_len=original_prefix,
    )
    return AggregationResult(
        partition=part,
        dist=dist,
        h=entropy(dist),
        guarantee=GUARANTEE_ADDITIVE_ALPHA,
        trace=trace,
    )


def aggregation_entropy_range(p: Dist, m: int, cap: int = DEFAULT_EXACT_CAP):
    """Exhaustive min and max aggregation entropy.

    Returns (h_min, h_max, partitions_scanned). Refuses n > cap because the
    scan visits every partition of the n components into m blocks.
    """
    m = _check_m(p.n, m)
    if p.n > cap:
        raise errors.TooLarge(f"n={p.n} exceeds the exhaustive cap {cap}")
    h_min, _, h_max, _, count = _kernels.rgs_extremes(
        np.ascontiguousarray(p.probs), m
    )
    return float(h_min), float(h_max), int(count)


def exact_max_aggregation(
    p: Dist, m: int, cap: int = DEFAULT_EXACT_CAP
) -> AggregationResult:
    """Entropy-maximizing aggregation by exhaustive scan (n <= cap).

    Entropy ties keep the lexicographically smallest block assignment over
    the sorted components.
    """
    m = _check_m(p.n, m)
    if p.n > cap:
        raise errors.TooLarge(f"n={p.n} exceeds the exhaustive cap {cap}")
    _, _, _, code_max, _ = _kernels.rgs_extremes(
        np.ascontiguousarray(p.probs), m
    )
    part = _partition_from_positions(blocks_from_code(code_max), p)
    dist = aggregate(p, part)
    return AggregationResult(
        partition=part, dist=dist, h=entropy(dist), guarantee=GUARANTEE_EXACT
    )


def exact_min_aggregation(p: Dist, m: int) -> AggregationResult:
    """Entropy-minimizing aggregation, in closed form.

    The minimum merges the n - m + 1 largest components into one block and
    keeps the rest as singletons; no search is needed, any n is fine.
    """
    m = _check_m(p.n, m)
    head = tuple(range(p.n - m + 1))
    pos_blocks = [head] + [(i,) for i in range(p.n - m + 1, p.n)]
    part = _partition_from_positions(pos_blocks, p)
    dist = aggregate(p, part)
    return AggregationResult(
        partition=part, dist=dist, h=entropy(dist), guarantee=GUARANTEE_EXACT
    )
