"""sqwalk exceptions."""

from typing import TYPE_CHECKING, Any, Optional, Sequence

if TYPE_CHECKING:
    from ..search.trace import SearchTrace


class SQWalkError(Exception):
    """Base exception class for all sqwalk errors."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class ComplexError(SQWalkError):
    """Base class for simplicial-complex errors."""

    pass


class InvalidComplexError(ComplexError, ValueError):
    """Malformed facet list or complex file."""

    pass


class NonPureComplexError(ComplexError):
    """The complex has facets of different dimensions."""

    def __init__(self, message: str, *, dimensions: Optional[Sequence[int]] = None) -> None:
        super().__init__(message)
        self.dimensions = tuple(sorted(set(dimensions or ())))


class NonOrientableError(ComplexError):
    """No non-contradicting orientation assignment exists.

    ``witness_kind`` is ``"junction"`` when a primary face has more than two cofaces
    (``witness`` is then the face followed by its cofaces) or ``"cycle"`` when sign
    propagation closes a facet cycle inconsistently (``witness`` lists the facets).
    """

    def __init__(
        self,
        message: str,
        *,
        witness_kind: str,
        witness: Sequence[tuple[int, ...]],
    ) -> None:
        super().__init__(message)
        self.witness_kind = witness_kind
        self.witness = tuple(witness)

    @classmethod
    def junction(
        cls, face: tuple[int, ...], cofaces: Sequence[tuple[int, ...]]
    ) -> "NonOrientableError":
        """Create the error for a primary face shared by more than two facets."""
        return cls(
            f"complex has a junction at {face} ({len(cofaces)} cofaces)",
            witness_kind="junction",
            witness=[face, *cofaces],
        )

    @classmethod
    def cycle(cls, facets: Sequence[tuple[int, ...]]) -> "NonOrientableError":
        """Create the error for an inconsistent facet cycle."""
        return cls(
            f"orientation contradicts itself along a cycle of {len(facets)} facets",
            witness_kind="cycle",
            witness=facets,
        )


class UnsupportedComplexError(ComplexError):
    """The complex is valid but outside what an operation supports."""

    pass


class OperatorError(SQWalkError):
    """Base class for operator construction and application errors."""

    pass


class DimensionMismatchError(OperatorError, ValueError):
    """State and operator dimensions disagree."""

    def __init__(self, message: str, *, expected: int, actual: int) -> None:
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class NonUnitaryError(OperatorError):
    """A local block fails the unitarity check."""

    def __init__(self, message: str, *, deviation: float) -> None:
        super().__init__(message)
        self.deviation = deviation


class ZeroNormError(OperatorError, ValueError):
    """A state vector has zero norm and cannot be measured."""

    pass


class BlockSizeError(OperatorError):
    """A local coin does not match the size of its block."""

    pass


class GraphError(SQWalkError):
    """Graph construction error."""

    pass


class IsomorphismError(GraphError):
    """The constructive bijection is not an isomorphism."""

    pass


class SearchError(SQWalkError):
    """Base class for search errors."""

    pass


class MarkedFaceError(SearchError, ValueError):
    """The marked face does not exist or is not shared by exactly two facets."""

    pass


class TimeLimitError(SearchError):
    """No local maximum of the finding probability within ``t_max`` steps."""

    def __init__(self, message: str, *, trace: "SearchTrace") -> None:
        super().__init__(message)
        self.trace = trace


class SpectralError(SQWalkError):
    """Base class for spectral computation errors."""

    pass


class NotSymmetricError(SpectralError, ValueError):
    """Matrix is not real symmetric."""

    pass


class ConvergenceError(SpectralError):
    """Jacobi iteration did not converge."""

    def __init__(self, message: str, *, sweeps: int, off_norm: float) -> None:
        super().__init__(message)
        self.sweeps = sweeps
        self.off_norm = off_norm


class InvalidAngleError(SpectralError, ValueError):
    """Angle is a multiple of pi."""

    pass


class ConfigurationError(SQWalkError):
    """Unusable configuration value."""

    def __init__(self, message: str, *, setting: Optional[str] = None, value: Any = None) -> None:
        super().__init__(message)
        self.setting = setting
        self.value = value
