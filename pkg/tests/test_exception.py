# coding: utf-8
"""Tests for stpm module. Exception classes."""
import pytest

from stpm.exceptions import StpmConfigError
from stpm.exceptions import StpmDataError
from stpm.exceptions import StpmDomainError
from stpm.exceptions import StpmError
from stpm.exceptions import StpmLimitError
from stpm.exceptions import StpmPlantError


@pytest.mark.parametrize(
    "error",
    [StpmConfigError, StpmDataError, StpmDomainError, StpmLimitError, StpmPlantError],
)
def test_stpm_exception_hierarchy(error: type) -> None:
    """Test every library error is a StpmError."""
    with pytest.raises(StpmError):
        raise error("Test Error")


def test_plant_error_is_config_error() -> None:
    """Test infeasible plants are configuration errors."""
    assert issubclass(StpmPlantError, StpmConfigError)
    assert issubclass(StpmDomainError, ValueError)


def test_data_error_location() -> None:
    """Test the location is kept and embedded in the message."""
    err = StpmDataError("Missing value", line=3, column="C")

    assert err.line == 3
    assert err.column == "C"
    assert str(err) == "Missing value (line 3, column 'C')"
    assert str(StpmDataError("Empty file")) == "Empty file"
    assert str(StpmDataError("Bad", line=1)) == "Bad (line 1)"
