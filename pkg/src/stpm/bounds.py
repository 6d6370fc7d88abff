# -*- coding: utf-8 -*-
"""Lambert W and the correlation threshold bounding the season count of a pair.

For a series X whose rarest symbol has probability lambda1 and an event of a series Y
of probability lambda2, a normalized mutual information NMI(X;Y) >= mu bounds the
season count of the co-occurring events from below. mu_threshold inverts that bound
for the minimal season count a pattern needs.
"""
import logging
import math

from .const import BRANCH_POINT
from .const import LAMBERT_MAX_ITERATIONS
from .const import LAMBERT_TOLERANCE
from .exceptions import StpmDomainError

_LOGGER = logging.getLogger(__name__)

# 2 * e, for the series expansion of W around the branch point
_TWO_E = 2.0 * math.e


def _initial_guess(x: float) -> float:
    if x > math.e:
        log_x = math.log(x)
        return log_x - math.log(log_x)
    if x >= 0.0:
        return x / (1.0 + x)
    if x < -0.25:
        p = math.sqrt(max(0.0, _TWO_E * x + 2.0))
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    return x / (1.0 + x)


def lambert_w0(x: float) -> float:
    """Evaluate the principal branch of the Lambert W function with Halley's method.

    Args:
        x: Argument, at least -1/e. Values below -1/e by less than the tolerance are
            taken as -1/e.

    Returns:
        w >= -1 such that w * exp(w) = x.

    Raises:
        StpmDomainError: x is below -1/e or not finite.

    Example:
        >>> lambert_w0(0.0)
        0.0
        >>> round(lambert_w0(1.0), 10)
        0.5671432904
    """
    if not math.isfinite(x):
        raise StpmDomainError(f"Lambert W of a non-finite value {x}")
    if x < BRANCH_POINT - LAMBERT_TOLERANCE:
        raise StpmDomainError(f"Lambert W is not real below -1/e, got {x}")
    if x <= BRANCH_POINT:
        return -1.0
    if x == 0.0:
        return 0.0

    w = _initial_guess(x)
    for _ in range(LAMBERT_MAX_ITERATIONS):
        exp_w = math.exp(w)
        residual = w * exp_w - x
        if abs(residual) <= LAMBERT_TOLERANCE:
            return w
        w_plus_one = w + 1.0
        if w_plus_one == 0.0:
            return w
        step = residual / (
            exp_w * w_plus_one - (w + 2.0) * residual / (2.0 * w_plus_one)
        )
        w -= step
        if abs(step) <= 1e-16 * (1.0 + abs(w)):
            return w

    _LOGGER.debug(
        "Lambert W(%r) stopped after %d iterations", x, LAMBERT_MAX_ITERATIONS
    )
    return w


def season_lower_bound(
    lambda1: float, lambda2: float, mu: float, n_granules: int, min_density: int
) -> float:
    """Return the lower bound on the season count of an event pair.

    Args:
        lambda1: Smallest symbol probability of the series X, in (0, 1].
        lambda2: Probability of the event of the series Y, in (0, 1].
        mu: NMI(X;Y) the pair reaches.
        n_granules: Number of coarse granules of the sequence database.
        min_density: Minimal density of a season.

    Returns:
        (lambda2 * N / minDensity) * exp(W(ln(lambda1) * (1 - mu) / lambda2)).

    Raises:
        StpmDomainError: A probability is outside (0, 1] or the Lambert argument
            is below -1/e.
    """
    _check_probability(lambda1, "lambda1")
    _check_probability(lambda2, "lambda2")
    argument = math.log2(lambda1) * (1.0 - mu) * math.log(2.0) / lambda2
    return lambda2 * n_granules / min_density * math.exp(lambert_w0(argument))


def mu_threshold(
    lambda1: float,
    lambda2: float,
    min_season: int,
    min_density: int,
    n_granules: int,
) -> float:
    """Return the minimal NMI for which the bound reaches minSeason.

    With rho = minSeason * minDensity / (lambda2 * N), the threshold is
    1 - lambda2 / (e * ln(1/lambda1)) when rho <= 1/e, and
    1 - rho * lambda2 * ln(rho) / ln(lambda1) otherwise. The two forms agree at
    rho = 1/e. The value is not clamped: at most 0 means any pair qualifies, above 1
    that none does.

    Args:
        lambda1: Smallest symbol probability of the series X, in (0, 1).
        lambda2: Probability of the event of the series Y, in (0, 1].
        min_season: Minimal number of seasons.
        min_density: Minimal density of a season.
        n_granules: Number of coarse granules, at least 1.

    Returns:
        The raw threshold mu.

    Raises:
        StpmDomainError: lambda1 is 0 or 1, or an argument is out of range.
    """
    if not 0.0 < lambda1 < 1.0:
        raise StpmDomainError(f"lambda1 must lie in (0, 1), got {lambda1}")
    _check_probability(lambda2, "lambda2")
    if n_granules < 1:
        raise StpmDomainError(f"n_granules must be >= 1, got {n_granules}")
    rho = min_season * min_density / (lambda2 * n_granules)
    if rho <= 1.0 / math.e:
        return 1.0 - lambda2 / (math.e * math.log(1.0 / lambda1))
    return 1.0 - rho * lambda2 * math.log(rho) / math.log(lambda1)


def _check_probability(value: float, name: str) -> None:
    if not 0.0 < value <= 1.0:
        raise StpmDomainError(f"{name} must lie in (0, 1], got {value}")
