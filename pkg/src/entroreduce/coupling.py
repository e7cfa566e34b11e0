"""Min-entropy couplings and the coupling divergence between distributions.

W(p, q) is the smallest joint entropy over all couplings of p and q (the
transportation polytope with column marginals p and row marginals q). The
divergence D(p, q) = 2*W(p, q) - H(p) - H(q) is symmetric, nonnegative, and
at least |H(p) - H(q)|. Joint entropy is concave in the coupling, so the
minimum sits at a polytope vertex; the exact solver scans all vertices via
spanning trees of the bipartite row/column graph, which caps the usable size.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels, errors
from .aggregation import Partition, aggregate, huffman_max_aggregation
from .dist import EPS_SUM, Dist, entropy, entropy_bits

#: the vertex scan is exponential in m + n; refuse anything bigger
DEFAULT_COUPLING_CAP = 10


@dataclass(frozen=True, eq=False)
class Coupling:
    """A joint distribution with row marginal q and column marginal p."""

    matrix: np.ndarray
    p: Dist  # column marginal
    q: Dist  # row marginal


@dataclass(frozen=True)
class DivergenceReport:
    """w = coupling entropy (minimal when exact), d = 2w - H(p) - H(q)."""

    w: float
    d: float
    exact: bool


def make_coupling(matrix, p: Dist, q: Dist) -> Coupling:
    """Validate marginals and wrap the matrix."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape != (q.n, p.n):
        raise errors.MarginalMismatch(
            f"matrix shape {m.shape} does not match (m={q.n}, n={p.n})"
        )
    if m.min() < -EPS_SUM:
        raise errors.NegativeMass(f"negative coupling mass {float(m.min()):.6g}")
    m = np.clip(m, 0.0, None)
    if np.abs(m.sum(axis=1) - q.probs).max() > EPS_SUM:
        raise errors.MarginalMismatch("row sums do not reproduce q")
    if np.abs(m.sum(axis=0) - p.probs).max() > EPS_SUM:
        raise errors.MarginalMismatch("column sums do not reproduce p")
    m.setflags(write=False)
    return Coupling(matrix=m, p=p, q=q)


def aggregation_coupling(p: Dist, partition: Partition) -> Coupling:
    """The canonical coupling witnessing an aggregation q of p.

    Row i carries exactly the components of p belonging to the block with the
    i-th largest sum, each in its own column, so the nonzero entries of the
    matrix are precisely the nonzero components of p and the joint entropy
    equals H(p). This certifies D(p, q) <= H(p) - H(q) for any aggregation.
    """
    q = aggregate(p, partition)
    rank = p.rank()
    matrix = np.zeros((q.n, p.n))
    # q.order[r] recovers which block landed in sorted row r (aggregate() sorts
    # block sums stably over blocks ordered by smallest element)
    for r in range(q.n):
        for orig in partition.blocks[int(q.order[r])]:
            col = int(rank[orig])
            matrix[r, col] = p.probs[col]
    return make_coupling(matrix, p, q)


def divergence_upper_bound(p: Dist, partition: Partition) -> float:
    """H(p) - H(aggregate(p, partition)): an upper bound on D(p, q) obtained
    from the aggregation coupling without any search."""
    return entropy(p) - entropy(aggregate(p, partition))


def min_entropy_coupling_exact(
    p: Dist, q: Dist, cap: int = DEFAULT_COUPLING_CAP
) -> tuple[Coupling, DivergenceReport]:
    """Exact W(p, q) by scanning every transportation-polytope vertex.

    Zero-mass components are stripped before the scan and restored as zero
    rows/columns afterwards. Refuses p.n + q.n > cap.
    """
    if p.n + q.n > cap:
        raise errors.TooLarge(
            f"m + n = {q.n + p.n} exceeds the coupling cap {cap}"
        )
    # probabilities are sorted, so positive entries form a prefix
    np_pos = int((p.probs > 0.0).sum())
    nq_pos = int((q.probs > 0.0).sum())
    w, core, found = _kernels.coupling_vertex_min(
        np.ascontiguousarray(q.probs[:nq_pos]),
        np.ascontiguousarray(p.probs[:np_pos]),
        1e-12,
    )
    if not found:
        raise errors.Unreachable("no feasible vertex; marginals inconsistent")
    matrix = np.zeros((q.n, p.n))
    matrix[:nq_pos, :np_pos] = core
    coupling = make_coupling(matrix, p, q)
    w = float(w)
    report = DivergenceReport(
        w=w, d=2.0 * w - entropy(p) - entropy(q), exact=True
    )
    return coupling, report


def approx_best_approximation(p: Dist, m: int) -> tuple[Dist, float]:
    """An m-outcome approximation of p with a certified divergence bound.

    Returns (q_bar, bound) where q_bar is the greedy merge reduction and
    bound = H(p) - H(q_bar) >= D(p, q_bar). The bound is within alpha() of
    the best divergence achievable by any m-outcome aggregation of p.
    """
    res = huffman_max_aggregation(p, m)
    return res.dist, entropy(p) - res.h
