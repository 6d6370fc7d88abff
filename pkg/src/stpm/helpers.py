# -*- coding: utf-8 -*-
"""Helpers shared by the miners."""
import math
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Callable
from typing import List
from typing import Sequence
from typing import TypeVar
from typing import Union

from pytz import timezone
from pytz import utc

from .exceptions import StpmConfigError

_T = TypeVar("_T")
_R = TypeVar("_R")


def period(pos_i: int, pos_j: int) -> int:
    """Compute the time duration between two granule positions (Helper).

    Args:
        pos_i: 1-based position of the first granule.
        pos_j: 1-based position of the second granule.

    Returns:
        Number of granules between the two positions.

    Raises:
        StpmConfigError: A position is below 1.

    Example:
        >>> period(1, 6)
        5
    """
    if pos_i < 1 or pos_j < 1:
        raise StpmConfigError(f"Granule positions start at 1, got {pos_i}, {pos_j}")
    return abs(pos_i - pos_j)


def resolve_threshold(value: Union[int, str], n_granules: int, name: str) -> int:
    """Resolve an absolute or percentage threshold against the database size.

    Percentages (``"K%"``) are taken of the number of coarse granules and rounded up.

    Args:
        value: Integer, integer-like string or percentage string.
        n_granules: Number of coarse granules of the sequence database.
        name: Name of the threshold, used in error messages.

    Returns:
        The absolute threshold, at least 1.

    Raises:
        StpmConfigError: The value cannot be parsed or resolves below 1.

    Example:
        >>> resolve_threshold("10%", 14, "min_density")
        2
    """
    if isinstance(value, str):
        text = value.strip()
        try:
            if text.endswith("%"):
                pct = float(text[:-1])
                resolved = math.ceil(pct / 100.0 * n_granules)
            else:
                resolved = int(text)
        except ValueError as err:
            raise StpmConfigError(f"Invalid {name}: {value!r}") from err
    else:
        resolved = int(value)

    if resolved < 1:
        raise StpmConfigError(f"{name} resolves to {resolved}, expected >= 1")
    return resolved


def timestamp_to_datetime_with_tz(timestamp: float, local_tz: str) -> datetime:
    """Convert a UNIX timestamp in a timezone-aware datetime (Helper).

    Args:
        timestamp: UNIX timestamp in seconds.
        local_tz: Name of the timezone to be used to convert the timestamp.

    Returns:
        Datetime instance corresponding to the timestamp with a timezone.
    """
    dt_utc = utc.localize(datetime.utcfromtimestamp(timestamp))
    return dt_utc.astimezone(timezone(local_tz))


def fan_out(func: Callable[[_T], _R], items: Sequence[_T], threads: int) -> List[_R]:
    """Map func over items on up to `threads` worker threads (Helper).

    Args:
        func: Function applied to every item.
        items: The work items.
        threads: Bound of the worker pool; 1 runs inline.

    Returns:
        The results, in input order.
    """
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))
