# -*- coding: utf-8 -*-
"""Seasonal temporal pattern mining module exceptions."""
from typing import Optional


class StpmError(Exception):
    """Generic seasonal temporal pattern mining error."""


class StpmConfigError(StpmError):
    """Invalid configuration value or configuration file."""


class StpmPlantError(StpmConfigError):
    """Synthetic plant geometry that cannot be generated."""


class StpmDataError(StpmError):
    """Malformed input data.

    Attributes:
        line: Optional; 1-based line (or position) where the problem was found.
        column: Optional; column name where the problem was found.
    """

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[str] = None
    ) -> None:
        """Initialize the error and embed the location in the message.

        Args:
            message: Description of the problem.
            line: Optional; 1-based line or position of the problem.
            column: Optional; column name of the problem.
        """
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column!r}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.line = line
        self.column = column


class StpmDomainError(StpmError, ValueError):
    """Mathematical domain violation (Lambert W, logarithms, distributions)."""


class StpmLimitError(StpmError):
    """Input too large for the brute-force oracle."""
