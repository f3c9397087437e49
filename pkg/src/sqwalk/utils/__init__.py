"""Utilities module."""

from .env import get_env_float, get_env_int, get_env_var
from .json_utils import format_json, to_jsonable, write_json
from .logs import (
    logger,
    setup_logging,
)
from .validation import validate_dimension, validate_non_negative_int, validate_positive_number

__all__ = [
    "logger",
    "setup_logging",
    "get_env_var",
    "get_env_int",
    "get_env_float",
    "to_jsonable",
    "format_json",
    "write_json",
    "validate_positive_number",
    "validate_non_negative_int",
    "validate_dimension",
]
