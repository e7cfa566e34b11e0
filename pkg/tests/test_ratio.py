import math

import numpy as np
import pytest

from entroreduce import (
    BadRho,
    RatioViolated,
    ZeroMinimum,
    alpha,
    entropy,
    flat_majorant,
    majorizes,
    make_dist,
    prior_ratio_gap,
    ratio_gap,
    ratio_lower_bound,
)


def ratio_constrained(rng, n, rho):
    raw = rng.uniform(1.0, rho, n)
    return make_dist(raw / raw.sum())


# ------------------------------------------------------------------ gap(rho)


def test_gap_frozen_values():
    assert ratio_gap(1.0) == 0.0
    assert ratio_gap(2.0) == pytest.approx(alpha(), abs=1.2e-16)
    assert ratio_gap(1.1) == pytest.approx(0.0016379790531358398, abs=1e-15)
    assert ratio_gap(4.0) == pytest.approx(0.3377004994437571, abs=1e-15)
    assert ratio_gap(10.0) == pytest.approx(0.893078609507779, abs=1e-14)


def test_gap_monotone_in_rho():
    grid = np.geomspace(1.0001, 100.0, 200)
    gaps = np.array([ratio_gap(r) for r in grid])
    assert np.all(np.diff(gaps) >= -1e-14)
    assert gaps[0] < 1e-7


def test_gap_matches_worst_case_two_level_distribution():
    # the bound equals the entropy deficit of the flattest two-level
    # distribution with head/tail ratio rho, optimized over the head count;
    # check against a direct minimization for a large n
    n = 4096
    for rho in (1.5, 2.0, 3.0, 7.0):
        worst = 0.0
        for i in range(0, n):
            # i heads at rho*x, n - i tails at x
            x = 1.0 / (n + i * (rho - 1.0))
            vec = np.full(n, x)
            vec[:i] = rho * x
            vec /= vec.sum()
            h = -(vec * np.log2(vec)).sum()
            worst = max(worst, math.log2(n) - h)
        assert ratio_gap(rho) >= worst - 1e-9  # the bound covers every instance
        assert ratio_gap(rho) <= worst + 1e-3  # and is tight up to 1/n effects


def test_bad_rho():
    with pytest.raises(BadRho):
        ratio_gap(0.99)
    with pytest.raises(BadRho):
        ratio_gap(float("nan"))
    with pytest.raises(BadRho):
        prior_ratio_gap(0.5)


# --------------------------------------------------------------- prior bound


def test_prior_bound_frozen_values():
    assert prior_ratio_gap(1.0) == 0.0
    # rho = 2 solves analytically: e^eps = 9/8
    assert prior_ratio_gap(2.0) == pytest.approx(math.log(9 / 8), abs=1e-9)
    assert prior_ratio_gap(1.5) == pytest.approx(0.0408219945206838, abs=1e-9)
    assert prior_ratio_gap(4.0) == pytest.approx(0.4462871026285029, abs=1e-9)


def test_prior_bound_solves_its_equation():
    for rho in (1.2, 2.0, 5.0, 30.0, 100.0):
        eps = prior_ratio_gap(rho)
        left = 1 + 2 * (math.exp(eps) - 1) + 2 * math.sqrt(
            math.exp(2 * eps) - math.exp(eps)
        )
        assert left == pytest.approx(rho, abs=1e-8)


def test_new_bound_dominates_prior_bound():
    for rho in np.linspace(1.02, 100.0, 50):
        assert ratio_gap(rho) <= prior_ratio_gap(rho) + 1e-12


# --------------------------------------------------------------- lower bound


def test_ratio_lower_bound_report():
    rb = ratio_lower_bound(16, 2.0)
    assert rb.n == 16 and rb.rho == 2.0
    assert rb.gap_bits == pytest.approx(alpha(), abs=1e-15)
    assert rb.lower_bound_bits == pytest.approx(4.0 - alpha(), abs=1e-12)


def test_ratio_lower_bound_holds_on_random_instances():
    rng = np.random.default_rng(59)
    for rho in (1.1, 1.5, 2.0, 4.0, 10.0):
        for _ in range(100):
            n = int(rng.integers(4, 65))
            p = ratio_constrained(rng, n, rho)
            assert entropy(p) >= math.log2(n) - ratio_gap(rho) - 1e-9


# -------------------------------------------------------------- flat majorant


def test_flat_majorant_examples():
    z = flat_majorant(make_dist([0.3, 0.25, 0.25, 0.2]), 1.5)
    assert np.allclose(z.probs, [0.3, 0.3, 0.2, 0.2])
    z = flat_majorant(make_dist([0.4, 0.35, 0.25]), 1.6)
    assert np.allclose(z.probs, [0.4, 0.35, 0.25])
    z = flat_majorant(make_dist([0.25] * 4), 3.0)
    assert np.allclose(z.probs, 0.25)


def test_flat_majorant_structure_and_bounds():
    rng = np.random.default_rng(61)
    for rho in (1.1, 1.5, 2.0, 4.0, 10.0):
        for _ in range(100):
            n = int(rng.integers(4, 65))
            p = ratio_constrained(rng, n, rho)
            z = flat_majorant(p, rho)
            assert z.n == n
            assert z.probs.sum() == pytest.approx(1.0, abs=1e-9)
            # two-level shape: everything is p_n or rho*p_n except one entry
            x = p.probs[-1]
            off_level = (
                (np.abs(z.probs - x) > 1e-12)
                & (np.abs(z.probs - rho * x) > 1e-12)
            ).sum()
            assert off_level <= 1
            assert majorizes(p, z).majorized
            assert math.log2(n) - entropy(z) <= ratio_gap(rho) + 1e-9


def test_flat_majorant_rho_one_returns_input():
    p = make_dist([0.25] * 4)
    z = flat_majorant(p, 1.0)
    assert np.allclose(z.probs, p.probs)


def test_flat_majorant_errors():
    with pytest.raises(ZeroMinimum):
        flat_majorant(make_dist([0.5, 0.5, 0.0]), 2.0)
    with pytest.raises(RatioViolated):
        flat_majorant(make_dist([0.5, 0.3, 0.2]), 2.0)
    with pytest.raises(BadRho):
        flat_majorant(make_dist([0.5, 0.5]), 0.3)
