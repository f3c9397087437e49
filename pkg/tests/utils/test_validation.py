"""Tests for validation utilities."""

import pytest

from sqwalk.utils.validation import (
    validate_dimension,
    validate_non_negative_int,
    validate_positive_number,
)


class TestValidatePositiveNumber:
    """Test validate_positive_number function."""

    def test_accepts_positive_integer(self):
        """Test that positive integers pass validation."""
        validate_positive_number("value", 5)
        validate_positive_number("value", 1)

    def test_accepts_positive_float(self):
        """Test that positive floats pass validation."""
        validate_positive_number("value", 1.5)
        validate_positive_number("value", 0.1)

    @pytest.mark.parametrize(
        "value",
        [0, -1, -1.5, "5", None, [1, 2], {"a": 1}],
        ids=["zero", "negative-int", "negative-float", "string", "none", "list", "dict"],
    )
    def test_rejects_invalid_values(self, value):
        """Test that non-positive and non-numeric values are rejected."""
        with pytest.raises(ValueError, match="value must be a positive number"):
            validate_positive_number("value", value)

    def test_rejects_boolean(self):
        """Test that booleans are rejected even though True == 1."""
        with pytest.raises(ValueError, match="value must be a positive number"):
            validate_positive_number("value", True)

    def test_error_message_includes_parameter_name(self):
        """Test that error message includes the parameter name."""
        with pytest.raises(ValueError, match="t_max_factor must be a positive number"):
            validate_positive_number("t_max_factor", -1)


class TestValidateNonNegativeInt:
    """Test validate_non_negative_int function."""

    def test_accepts_zero_and_positive(self):
        """Test that 0 and positive integers pass."""
        validate_non_negative_int("steps", 0)
        validate_non_negative_int("steps", 10_000)

    @pytest.mark.parametrize(
        "value", [-1, 1.0, "3", False], ids=["negative", "float", "str", "bool"]
    )
    def test_rejects_invalid_values(self, value):
        """Test that negatives, floats, strings and booleans are rejected."""
        with pytest.raises(ValueError, match="steps must be a non-negative integer"):
            validate_non_negative_int("steps", value)


class TestValidateDimension:
    """Test validate_dimension function."""

    def test_accepts_two_and_above(self):
        """Test that n >= 2 passes."""
        validate_dimension(2)
        validate_dimension(348)

    def test_rejects_small_dimension(self):
        """Test that n < 2 is rejected with the value in the message."""
        with pytest.raises(ValueError, match="n must be an integer >= 2, got 1"):
            validate_dimension(1)

    def test_custom_minimum(self):
        """Test that the minimum can be lowered."""
        validate_dimension(1, minimum=1)
        with pytest.raises(ValueError):
            validate_dimension(0, minimum=1)
