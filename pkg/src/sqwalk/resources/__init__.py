"""Simulator resources."""

from ._base import BaseResource
from .complexes import Complexes
from .searches import Searches, summarize
from .spectra import Spectra
from .verifications import Verifications

__all__ = [
    "BaseResource",
    "Complexes",
    "Searches",
    "Spectra",
    "Verifications",
    "summarize",
]
