"""Base class for simulator resources."""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .._client import Simulator


class BaseResource:
    """Base class for simulator resources."""

    def __init__(self, client: "Simulator") -> None:
        self._client = client
