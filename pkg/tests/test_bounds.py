# coding: utf-8
"""Tests for stpm module. Lambert W and correlation thresholds."""
import math
from typing import Any
from typing import Tuple

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
from scipy.special import lambertw

from stpm.bounds import lambert_w0
from stpm.bounds import mu_threshold
from stpm.bounds import season_lower_bound
from stpm.const import BRANCH_POINT
from stpm.exceptions import StpmDomainError
from stpm.information import ProbTable
from stpm.information import nmi
from stpm.model.symbols import SymbolicDatabase


def test_lambert_w0_residual() -> None:
    """Test w * exp(w) gives the argument back over [-1/e, 10]."""
    for x in np.linspace(BRANCH_POINT, 10.0, 10_000):
        w = lambert_w0(float(x))
        assert w >= -1.0
        assert abs(w * math.exp(w) - x) <= 1e-11


def test_lambert_w0_matches_scipy() -> None:
    """Test the principal branch agrees with scipy."""
    for x in np.linspace(-0.3, 50.0, 500):
        assert lambert_w0(float(x)) == pytest.approx(
            float(lambertw(x).real), rel=1e-9, abs=1e-12
        )


def test_lambert_w0_values() -> None:
    """Test the values at 0, e and the branch point."""
    assert lambert_w0(0.0) == 0.0
    assert lambert_w0(math.e) == pytest.approx(1.0)
    assert lambert_w0(BRANCH_POINT) == -1.0
    assert lambert_w0(BRANCH_POINT - 1e-13) == -1.0


@pytest.mark.parametrize("x", [BRANCH_POINT - 1e-6, -1.0, math.nan, math.inf])
def test_lambert_w0_domain(x: float) -> None:
    """Test arguments without a real principal value are refused."""
    with pytest.raises(StpmDomainError):
        lambert_w0(x)


def test_mu_threshold_worked_pair() -> None:
    """Test the thresholds of the C, D pair of the worked database."""
    assert mu_threshold(16 / 42, 24 / 42, 2, 3, 14) == pytest.approx(0.8722, abs=1e-4)
    assert mu_threshold(16 / 42, 18 / 42, 2, 3, 14) == pytest.approx(1.0)
    assert mu_threshold(18 / 42, 26 / 42, 2, 3, 14) == pytest.approx(0.8140, abs=1e-4)
    assert mu_threshold(18 / 42, 16 / 42, 2, 3, 14) == pytest.approx(1.0596, abs=1e-4)


def test_mu_threshold_low_rho() -> None:
    """Test the form used when minSeason * minDensity is small against lambda2 * N."""
    # rho = 1 / 50 <= 1/e
    mu = mu_threshold(0.25, 0.5, 1, 1, 100)

    assert mu == pytest.approx(1.0 - 0.5 / (math.e * math.log(4.0)))


def test_mu_threshold_round_trip() -> None:
    """Test the bound at mu reaches minSeason, exactly when rho > 1/e."""
    rng = np.random.default_rng(3)
    for _ in range(100):
        lambda1 = float(rng.uniform(0.01, 0.5))
        lambda2 = float(rng.uniform(0.01, 1.0))
        min_season = int(rng.integers(1, 6))
        min_density = int(rng.integers(1, 11))
        n_granules = int(rng.integers(10, 1001))
        mu = mu_threshold(lambda1, lambda2, min_season, min_density, n_granules)
        bound = season_lower_bound(lambda1, lambda2, mu, n_granules, min_density)

        assert bound >= min_season - 1e-7
        rho = min_season * min_density / (lambda2 * n_granules)
        if rho > 1.0 / math.e:
            assert bound == pytest.approx(min_season, rel=1e-6)


@pytest.mark.parametrize("scale", [1.0 - 1e-12, 1.0 + 1e-12])
def test_mu_threshold_continuity(scale: float) -> None:
    """Test both forms agree where rho crosses 1/e."""
    # rho = 1 / (10 * lambda2) is 1/e at lambda2 = e / 10
    lambda2 = math.e / 10.0
    at_branch = 1.0 - lambda2 / (math.e * math.log(4.0))

    assert mu_threshold(0.25, lambda2 * scale, 1, 1, 10) == pytest.approx(
        at_branch, abs=1e-9
    )


@pytest.mark.parametrize(
    "args",
    [
        (0.0, 0.5, 1, 1, 10),
        (1.0, 0.5, 1, 1, 10),
        (0.5, 0.0, 1, 1, 10),
        (0.5, 1.5, 1, 1, 10),
        (0.5, 0.5, 1, 1, 0),
    ],
)
def test_mu_threshold_domain(args: Tuple[float, float, int, int, int]) -> None:
    """Test probabilities and sizes out of range are refused."""
    with pytest.raises(StpmDomainError):
        mu_threshold(*args)


def test_season_lower_bound() -> None:
    """Test the bound grows with mu up to lambda2 * N / minDensity."""
    bounds = [
        season_lower_bound(0.3, 0.4, mu, 100, 5) for mu in np.linspace(0.9, 1.0, 50)
    ]

    assert bounds == sorted(bounds)
    assert bounds[-1] == pytest.approx(0.4 * 100 / 5)
    with pytest.raises(StpmDomainError):
        season_lower_bound(0.0, 0.4, 0.5, 100, 5)


@st.composite
def paired_rows(draw: Any) -> Tuple[str, str]:
    """Draw two binary series of equal length."""
    length = draw(st.integers(min_value=2, max_value=80))
    row = st.text(alphabet="01", min_size=length, max_size=length)
    return draw(row), draw(row)


@settings(max_examples=200, deadline=None)
@given(paired_rows())
def test_co_occurrence_bound_holds(rows: Tuple[str, str]) -> None:
    """Test p(x, y) >= lambda2 * exp(W(a)) whenever the bound applies."""
    probs = ProbTable.from_database(
        SymbolicDatabase.from_strings({"X": rows[0], "Y": rows[1]})
    )
    nonzero_x = probs.nonzero_marginals("X")
    if len(nonzero_x) < 2:
        return
    lambda1 = min(nonzero_x)
    score = nmi("X", "Y", probs)
    joint = probs.joint("X", "Y")
    marginal_y = probs.marginal("Y")
    for x in range(2):
        for y in range(2):
            lambda2 = float(marginal_y[y])
            if lambda2 == 0.0:
                continue
            p_xy = float(joint[x, y])
            argument = math.log(lambda1) * (1.0 - score) / lambda2
            if p_xy / lambda2 < 1.0 / math.e or argument < BRANCH_POINT:
                continue
            # with N = minDensity = 1 the bound is a probability
            assert p_xy >= season_lower_bound(lambda1, lambda2, score, 1, 1) - 1e-9
