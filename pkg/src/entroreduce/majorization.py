"""Majorization order on probability distributions.

a is majorized by b (a <= b in the majorization order) when every prefix sum
of a's sorted vector is at most b's. Vectors of unequal length are compared by
zero-padding the shorter one. Entropy is Schur-concave, so a <= b implies
H(a) >= H(b); the reduction bounds in this package all ride on that fact.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dist import EPS_SUM, Dist


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of a majorization comparison.

    majorized                -- True iff a is majorized by b
    first_violating_prefix   -- smallest prefix length whose sum exceeds b's
                                (1-based), or None when majorized
    """

    majorized: bool
    first_violating_prefix: int | None = None

    def __bool__(self) -> bool:
        return self.majorized


def majorizes(a: Dist, b: Dist, eps: float = EPS_SUM) -> MajorizationVerdict:
    """Return whether a is majorized by b (i.e. b majorizes a).

    True when every prefix sum of a.probs is <= the matching prefix sum of
    b.probs + eps, after zero-padding to a common length.
    """
    n = max(a.n, b.n)
    ca = np.zeros(n)
    cb = np.zeros(n)
    ca[: a.n] = a.probs
    cb[: b.n] = b.probs
    pa = np.cumsum(ca)
    pb = np.cumsum(cb)
    bad = np.nonzero(pa > pb + eps)[0]
    if bad.size:
        return MajorizationVerdict(False, int(bad[0]) + 1)
    return MajorizationVerdict(True, None)
