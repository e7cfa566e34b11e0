"""Canonical finite probability distributions and Shannon entropy (bits).

A Dist stores the probabilities sorted in non-increasing order together with
the stable permutation that produced the sort, so downstream partitions can be
reported over the caller's original component indices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import errors

# Tolerance for normalization checks and probability comparisons.
EPS_SUM = 1e-9


@dataclass(frozen=True, eq=False)
class Dist:
    """A finite probability distribution in canonical (sorted) form.

    probs -- probabilities, non-increasing, sum 1 within EPS_SUM
    order -- order[i] is the original index of probs[i]; stable on ties
    """

    probs: np.ndarray
    order: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.probs.shape[0]

    def rank(self) -> np.ndarray:
        """Inverse permutation: rank()[orig_index] = position in probs."""
        r = np.empty(self.n, dtype=np.int64)
        r[self.order] = np.arange(self.n)
        return r

    def raw(self) -> np.ndarray:
        """Probabilities back in the caller's original component order."""
        out = np.empty(self.n)
        out[self.order] = self.probs
        return out

    def __repr__(self) -> str:  # keep test failure output readable
        return f"Dist({np.array2string(self.probs, precision=6, floatmode='maxprec')})"


def make_dist(values) -> Dist:
    """Validate and canonicalize a probability vector.

    Negative entries in (-EPS_SUM, 0] are clamped to zero; anything more
    negative raises NegativeMass. The sum must be 1 within EPS_SUM. Sorting is
    stable, so equal probabilities keep their original relative order.
    """
    p = np.asarray(values, dtype=np.float64).ravel().copy()
    if p.size == 0:
        raise errors.Empty("distribution has no components")
    if np.isnan(p).any() or np.isinf(p).any():
        raise errors.NegativeMass("probabilities must be finite numbers")
    lowest = p.min()
    if lowest < -EPS_SUM:
        raise errors.NegativeMass(f"negative probability {float(lowest):.6g}")
    np.clip(p, 0.0, None, out=p)
    total = p.sum()
    if abs(total - 1.0) > EPS_SUM:
        raise errors.NotNormalized(
            f"probabilities sum to {float(total):.12g}, expected 1"
        )
    order = np.argsort(-p, kind="stable")
    probs = p[order]
    probs.setflags(write=False)
    order.setflags(write=False)
    return Dist(probs=probs, order=order)


def entropy_bits(values: np.ndarray) -> float:
    """Shannon entropy in bits of a nonnegative weight array, with 0*log(0)=0.

    No validation; used on block sums and coupling matrices as well as
    distributions.
    """
    v = np.asarray(values, dtype=np.float64).ravel()
    v = v[v > 0.0]
    if v.size == 0:
        return 0.0
    return float(-(v * np.log2(v)).sum())


def entropy(p: Dist) -> float:
    """Shannon entropy H(p) in bits."""
    return entropy_bits(p.probs)


def alpha() -> float:
    """Additive entropy gap of the greedy merge reduction, in bits.

    alpha = 1 - (1 + ln(ln 2)) / ln 2 = 0.0860713... < 0.0861. The greedy
    merge reduction is guaranteed to land within alpha bits of the achievable
    maximum entropy at any target support size.
    """
    return 1.0 - (1.0 + math.log(math.log(2.0))) / math.log(2.0)
