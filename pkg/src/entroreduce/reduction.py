"""Envelope bounds for reducing a distribution onto m outcomes.

max_entropy_envelope(p, m) is the m-component distribution that majorizes no
achievable aggregation but whose entropy upper-bounds them all: the largest
components of p are kept while the tail is averaged flat. Its entropy may
overshoot the achievable maximum by at most alpha() bits, and the achievable
maximum never exceeds it. head_merge(p, m) is the exactly-achievable opposite
end: the entropy-minimizing aggregation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import errors
from .aggregation import Partition, _check_m, exact_min_aggregation
from .dist import Dist, alpha, entropy, make_dist


@dataclass(frozen=True)
class BoundReport:
    """Entropy range for reductions of one distribution onto m outcomes.

    h_upper            -- entropy of the envelope; no aggregation exceeds it
    h_lower_achievable -- entropy of the minimizing aggregation (achieved)
    alpha              -- additive slack of h_upper over the achievable max
    """

    m: int
    h_upper: float
    h_lower_achievable: float
    alpha: float


def envelope_cut(p: Dist, m: int) -> int:
    """Length of the preserved head in the envelope construction.

    The largest i in {1..m-1} such that p_i >= (sum of the tail after i)
    divided by (m - i); entries up to i are kept, the rest are averaged.
    Only defined in the non-uniform branch (p_1 >= 1/m).
    """
    m = _check_m(p.n, m)
    if p.probs[0] < 1.0 / m:
        raise errors.Unreachable(
            "envelope_cut is undefined when p_1 < 1/m (uniform branch)"
        )
    tail = np.cumsum(p.probs[::-1])[::-1]  # tail[i] = sum of probs[i:]
    best = 0
    for i in range(1, m):  # 1-based cut index
        if p.probs[i - 1] >= tail[i] / (m - i):
            best = i
    if best == 0:
        raise errors.Unreachable("no valid cut index; input violates sorting")
    return best


def max_entropy_envelope(p: Dist, m: int) -> Dist:
    """The m-component envelope whose entropy bounds every aggregation.

    If p_1 < 1/m the envelope is uniform on m outcomes. Otherwise the head up
    to the cut index is preserved and the remaining mass is spread evenly
    over the other components. The envelope is majorized by every
    m-aggregation of p, hence its entropy is an upper bound for all of them.
    """
    m = _check_m(p.n, m)
    if p.probs[0] < 1.0 / m:
        return make_dist(np.full(m, 1.0 / m))
    i = envelope_cut(p, m)
    t = p.probs[i:].sum() / (m - i)
    return make_dist(np.concatenate([p.probs[:i], np.full(m - i, t)]))


def head_merge(p: Dist, m: int) -> tuple[Dist, Partition]:
    """Entropy-minimizing reduction: merge the n-m+1 largest components.

    Returns the reduced distribution and the witnessing partition (over the
    caller's original indices). The minimum is exact, not approximate.
    """
    res = exact_min_aggregation(p, m)
    return res.dist, res.partition


def bound_report(p: Dist, m: int) -> BoundReport:
    """Achievable entropy range for reductions of p onto m outcomes."""
    m = _check_m(p.n, m)
    low, _ = head_merge(p, m)
    return BoundReport(
        m=m,
        h_upper=entropy(max_entropy_envelope(p, m)),
        h_lower_achievable=entropy(low),
        alpha=alpha(),
    )
