"""Entropy lower bounds from a bounded max/min probability ratio.

If p_1/p_n <= rho, then H(p) >= log2(n) - ratio_gap(rho). The gap is
witnessed by a flat majorant of p whose entries all lie in {p_n, rho * p_n}
(plus one interpolating middle entry), and at rho = 2 the gap equals alpha(),
the additive constant of the greedy merge reduction. prior_ratio_gap is an
earlier bound of the same shape kept for comparison; ratio_gap dominates it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .dist import EPS_SUM, Dist, make_dist


@dataclass(frozen=True)
class RatioBound:
    n: int
    rho: float
    gap_bits: float
    lower_bound_bits: float


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if math.isnan(rho) or rho < 1.0:
        raise errors.BadRho(f"rho must be >= 1, got {rho!r}")
    return rho


def ratio_gap(rho: float) -> float:
    """Worst-case entropy deficit below log2(n) when p_1/p_n <= rho.

    gap = (g - 1 - ln g) / ln 2 with g = rho * ln(rho) / (rho - 1).
    Continuous at rho = 1 with gap 0; gap(2) equals alpha() exactly.
    """
    rho = _check_rho(rho)
    if rho == 1.0:
        return 0.0
    g = rho * math.log(rho) / (rho - 1.0)
    return (g - 1.0 - math.log(g)) / math.log(2.0)


def prior_ratio_gap(rho: float) -> float:
    """Entropy deficit guaranteed by the earlier additive-noise bound.

    The reference result states H >= log2(n) - eps once
    1 + 2(e^eps - 1) + 2*sqrt(e^{2 eps} - e^eps) >= rho; the left side is
    strictly increasing in eps, so the tight eps is found by bisection to
    1e-10. ratio_gap(rho) <= prior_ratio_gap(rho) everywhere.
    """
    rho = _check_rho(rho)
    if rho == 1.0:
        return 0.0

    def lhs(e: float) -> float:
        t = math.exp(e)
        return 1.0 + 2.0 * (t - 1.0) + 2.0 * math.sqrt(t * t - t)

    lo, hi = 0.0, 1.0
    while lhs(hi) < rho:
        hi *= 2.0
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        if lhs(mid) < rho:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ratio_lower_bound(n: int, rho: float) -> RatioBound:
    """Package log2(n) - ratio_gap(rho) as a bound report.

    The bound can be vacuous (negative) when rho is huge relative to n; the
    formula is reported as-is.
    """
    n = int(n)
    if n < 1:
        raise errors.Empty(f"need n >= 1, got {n}")
    gap = ratio_gap(rho)
    return RatioBound(
        n=n, rho=float(rho), gap_bits=gap, lower_bound_bits=math.log2(n) - gap
    )


def flat_majorant(p: Dist, rho: float) -> Dist:
    """The flattest majorant of p with entries in {p_n, rho*p_n}.

    Construction: i = floor((1 - n*p_n) / (p_n*(rho - 1))) leading entries of
    rho*p_n, one middle entry making the total exactly 1 (it always lands in
    [p_n, rho*p_n]), and trailing entries of p_n. p is majorized by the
    result, and log2(n) - H(result) <= ratio_gap(rho), which is how the
    ratio bound is proved and how it is verified here.
    """
    rho = _check_rho(rho)
    x = float(p.probs[-1])
    if x <= 0.0:
        raise errors.ZeroMinimum("smallest probability is 0; ratio undefined")
    if p.probs[0] / x > rho + EPS_SUM:
        raise errors.RatioViolated(
            f"p_1/p_n = {float(p.probs[0] / x):.6g} exceeds rho = {rho:g}"
        )
    n = p.n
    if rho == 1.0:
        # ratio check above forces p uniform within tolerance
        return make_dist(p.probs.copy())
    i = int(math.floor((1.0 - n * x) / (x * (rho - 1.0))))
    i = min(max(i, 0), n - 1)
    mid = 1.0 - (n + i * (rho - 1.0) - 1.0) * x
    assert x - EPS_SUM <= mid <= rho * x + EPS_SUM, "middle entry left its bracket"
    z = np.concatenate([np.full(i, rho * x), [mid], np.full(n - i - 1, x)])
    return make_dist(z)
