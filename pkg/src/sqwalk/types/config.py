from typing import Literal, Optional

from pydantic import Field, PositiveInt, field_validator, model_validator

from .._core.models import SQWalkBaseModel

Subcommand = Literal["search", "sweep", "verify", "spectrum"]


class ExperimentConfig(SQWalkBaseModel):
    """Validated command-line configuration. All runs are deterministic, so there is no seed."""

    subcommand: Subcommand
    n: Optional[int] = Field(default=None, ge=2)
    n_list: Optional[list[int]] = None
    marked: tuple[int, int] = (0, 1)
    t_max: Optional[PositiveInt] = None
    out: Optional[str] = None
    workers: Optional[PositiveInt] = None
    complex_path: Optional[str] = None

    @field_validator("n_list")
    @classmethod
    def _check_n_list(cls, value: Optional[list[int]]) -> Optional[list[int]]:
        if value is None:
            return value
        if any(n < 2 for n in value):
            raise ValueError("every n in n_list must be >= 2")
        if len(value) != len(set(value)):
            raise ValueError("n_list must not repeat values")
        return value

    @model_validator(mode="after")
    def _check_consistency(self) -> "ExperimentConfig":
        i, j = self.marked
        if i == j:
            raise ValueError("marked facet indices must differ")
        if i < 0 or j < 0:
            raise ValueError("marked facet indices must be nonnegative")
        if self.subcommand == "sweep":
            if not self.n_list or len(self.n_list) < 3:
                raise ValueError("sweep needs an n_list of at least 3 values")
            if max(i, j) >= min(self.n_list) + 2:
                raise ValueError("marked facet indices must be < n+2 for every n in n_list")
            return self
        if self.subcommand == "verify" and self.complex_path is not None:
            return self
        if self.n is None:
            raise ValueError(f"{self.subcommand} needs n")
        if max(i, j) >= self.n + 2:
            raise ValueError(f"marked facet indices must be < n+2 = {self.n + 2}")
        return self
