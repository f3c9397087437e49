"""Core module initialization."""

from .models import SQWalkBaseModel

__all__ = [
    "SQWalkBaseModel",
]
