import os
from typing import Optional

from .._core.exceptions import ConfigurationError


def get_env_var(name: str, default: Optional[str] = None) -> Optional[str]:
    """Get environment variable value."""
    return os.environ.get(name, default)


def get_env_int(name: str, default: Optional[int] = None) -> Optional[int]:
    """Get an integer environment variable, raising ConfigurationError when malformed."""
    raw = get_env_var(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(
            f"The {name} environment variable must be an integer, got {raw!r}",
            setting=name,
            value=raw,
        ) from None


def get_env_float(name: str, default: Optional[float] = None) -> Optional[float]:
    """Get a float environment variable, raising ConfigurationError when malformed."""
    raw = get_env_var(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigurationError(
            f"The {name} environment variable must be a number, got {raw!r}",
            setting=name,
            value=raw,
        ) from None
