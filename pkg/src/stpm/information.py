# -*- coding: utf-8 -*-
"""Plug-in probability estimates and information measures in bits."""
import logging
from itertools import combinations
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy.stats import entropy as scipy_entropy

from .const import PROBABILITY_TOLERANCE
from .exceptions import StpmDomainError
from .model.symbols import SymbolicDatabase

_LOGGER = logging.getLogger(__name__)


class ProbTable:
    """Relative frequencies of the symbols of a symbolic database.

    Marginals are indexed by symbol index. The joint of an ordered pair (X, Y) is a
    matrix whose rows are the symbols of X and whose columns are the symbols of Y, so
    that its row sums are p(x) and its column sums p(y).
    """

    def __init__(
        self,
        marginals: Dict[str, np.ndarray],
        joints: Dict[Tuple[str, str], np.ndarray],
        alphabets: Dict[str, Tuple[str, ...]],
    ) -> None:
        """Initialize a ProbTable object.

        Args:
            marginals: Series id to its symbol probabilities.
            joints: Sorted series id pair to its joint probability matrix.
            alphabets: Series id to its ordered symbols.

        Raises:
            StpmDomainError: A distribution does not sum to 1 or disagrees with the
                marginals.
        """
        for series_id, marginal in marginals.items():
            _check_distribution(marginal, series_id)
        for (series_x, series_y), joint in joints.items():
            _check_distribution(joint, f"{series_x},{series_y}")
            if not (
                np.allclose(joint.sum(axis=1), marginals[series_x])
                and np.allclose(joint.sum(axis=0), marginals[series_y])
            ):
                raise StpmDomainError(
                    f"Joint of ({series_x}, {series_y}) disagrees with the marginals"
                )
        self._marginals = marginals
        self._joints = joints
        self._alphabets = alphabets

    @classmethod
    def from_database(cls, db: SymbolicDatabase) -> "ProbTable":
        """Estimate every marginal and pairwise joint over all fine granules.

        Args:
            db: The symbolic database.

        Returns:
            The probability table.
        """
        length = db.length
        codes = {
            item.series_id: np.asarray(item.symbols, dtype=np.int64) for item in db
        }
        sizes = {item.series_id: len(item.alphabet) for item in db}
        marginals: Dict[str, np.ndarray] = {}
        joints: Dict[Tuple[str, str], np.ndarray] = {}
        if length == 0:
            return cls(marginals, joints, {})

        for series_id, symbols in codes.items():
            counts = np.bincount(symbols, minlength=sizes[series_id])
            marginals[series_id] = counts / length
        for series_x, series_y in combinations(sorted(codes), 2):
            size_y = sizes[series_y]
            counts = np.bincount(
                codes[series_x] * size_y + codes[series_y],
                minlength=sizes[series_x] * size_y,
            )
            joints[(series_x, series_y)] = (
                counts.reshape(sizes[series_x], size_y) / length
            )
        alphabets = {item.series_id: item.alphabet for item in db}
        return cls(marginals, joints, alphabets)

    @property
    def series_ids(self) -> List[str]:
        """Return the sorted series ids."""
        return sorted(self._marginals)

    def alphabet(self, series_id: str) -> Tuple[str, ...]:
        """Return the ordered symbols of a series."""
        return self._alphabets[series_id]

    def marginal(self, series_id: str) -> np.ndarray:
        """Return p(x) for every symbol x of a series."""
        return self._marginals[series_id]

    def joint(self, series_x: str, series_y: str) -> np.ndarray:
        """Return the p(x, y) matrix of an ordered pair of distinct series."""
        if (series_x, series_y) in self._joints:
            return self._joints[(series_x, series_y)]
        return self._joints[(series_y, series_x)].T

    def nonzero_marginals(self, series_id: str) -> List[float]:
        """Return the non-zero symbol probabilities of a series.

        Symbols never observed are left out, so that their probability never enters
        a logarithm.
        """
        marginal = self.marginal(series_id)
        dropped = [
            self._alphabets[series_id][index]
            for index in np.flatnonzero(marginal == 0.0)
        ]
        if dropped:
            _LOGGER.debug(
                "Series %s: unobserved symbols %s dropped", series_id, dropped
            )
        return [float(p) for p in marginal if p > 0.0]


def _check_distribution(dist: np.ndarray, name: str) -> None:
    if dist.size == 0:
        raise StpmDomainError(f"Empty probability distribution {name}")
    if np.any(dist < 0.0) or not np.all(np.isfinite(dist)):
        raise StpmDomainError(f"Invalid probabilities in {name}: {dist.tolist()}")
    if abs(float(dist.sum()) - 1.0) > PROBABILITY_TOLERANCE:
        raise StpmDomainError(f"Probabilities of {name} sum to {float(dist.sum())}")


def entropy(dist: Sequence[float]) -> float:
    """Return the entropy of a probability vector in bits.

    Args:
        dist: Non-negative probabilities summing to 1.

    Returns:
        -sum(p * log2(p)), zero probabilities contributing nothing.

    Raises:
        StpmDomainError: The vector is not a probability distribution.

    Example:
        >>> entropy([0.5, 0.5])
        1.0
    """
    probabilities = np.asarray(dist, dtype=float)
    _check_distribution(probabilities, "distribution")
    return float(scipy_entropy(probabilities, base=2))


def conditional_entropy(joint: np.ndarray) -> float:
    """Return H(X|Y) of a joint matrix with X on the rows and Y on the columns.

    Args:
        joint: The p(x, y) matrix.

    Returns:
        -sum(p(x, y) * log2(p(x, y) / p(y))) in bits.
    """
    matrix = np.asarray(joint, dtype=float)
    h_xy = entropy(matrix.ravel())
    h_y = entropy(matrix.sum(axis=0))
    return max(0.0, h_xy - h_y)


def mutual_information(joint: np.ndarray) -> float:
    """Return I(X;Y) = H(X) - H(X|Y) of a joint matrix, in bits."""
    matrix = np.asarray(joint, dtype=float)
    return max(0.0, entropy(matrix.sum(axis=1)) - conditional_entropy(matrix))


def nmi(series_x: str, series_y: str, probs: ProbTable) -> float:
    """Return the normalized mutual information I(X;Y) / H(X).

    The measure is directional: NMI(X;Y) and NMI(Y;X) differ when the entropies of
    the two series do. A constant series (H(X) = 0) has a NMI of 0.

    Args:
        series_x: The series whose uncertainty is reduced.
        series_y: The series that is observed.
        probs: Probability table of the database.

    Returns:
        The share of the uncertainty of X removed by knowing Y, in [0, 1].
    """
    h_x = entropy(probs.marginal(series_x))
    if h_x <= PROBABILITY_TOLERANCE:
        return 0.0
    score = mutual_information(probs.joint(series_x, series_y)) / h_x
    return min(1.0, max(0.0, score))
