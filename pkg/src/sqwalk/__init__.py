"""Simplicial quantum walk simulator.

Walks on oriented facet/face pairs of simplicial complexes, their unitary
equivalence with coined walks on duplication graphs, marked-face search and the
discriminant spectra behind it.
"""

from . import types
from ._client import Simulator
from ._core.exceptions import (
    BlockSizeError,
    ComplexError,
    ConfigurationError,
    ConvergenceError,
    DimensionMismatchError,
    GraphError,
    InvalidAngleError,
    InvalidComplexError,
    IsomorphismError,
    MarkedFaceError,
    NonOrientableError,
    NonPureComplexError,
    NonUnitaryError,
    NotSymmetricError,
    OperatorError,
    SearchError,
    SpectralError,
    SQWalkError,
    TimeLimitError,
    UnsupportedComplexError,
    ZeroNormError,
)
from ._version import __version__

__all__ = [
    "types",
    "Simulator",
    "SQWalkError",
    "ComplexError",
    "InvalidComplexError",
    "NonPureComplexError",
    "NonOrientableError",
    "UnsupportedComplexError",
    "OperatorError",
    "DimensionMismatchError",
    "NonUnitaryError",
    "BlockSizeError",
    "ZeroNormError",
    "GraphError",
    "IsomorphismError",
    "SearchError",
    "MarkedFaceError",
    "TimeLimitError",
    "SpectralError",
    "NotSymmetricError",
    "ConvergenceError",
    "InvalidAngleError",
    "ConfigurationError",
    "__version__",
]
