from typing import Any


def validate_positive_number(name: str, value: Any) -> None:
    """Validate that a value is a positive number."""
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
        raise ValueError(f"{name} must be a positive number")


def validate_non_negative_int(name: str, value: Any) -> None:
    """Validate that a value is an integer >= 0."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer")


def validate_dimension(value: Any, *, minimum: int = 2) -> None:
    """Validate a complex dimension ``n``."""
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {value!r}")
