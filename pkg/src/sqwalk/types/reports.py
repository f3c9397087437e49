from typing import Optional

from pydantic import computed_field

from .._core.models import SQWalkBaseModel


class ComplexValue(SQWalkBaseModel):
    re: float
    im: float

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        return cls(re=float(value.real), im=float(value.imag))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class SearchSummary(SQWalkBaseModel):
    n: int
    num_faces: int
    marked: tuple[int, int]
    marked_face: list[int]
    t_max: int
    t_f: int
    p_f: float
    p_f_target: float
    predicted_tf: float
    loop_probabilities: list[float]


class FitPoint(SQWalkBaseModel):
    x: int
    t_f: int


class FitResult(SQWalkBaseModel):
    slope: float
    intercept: float
    residual_rms: float
    points: list[FitPoint]


class CheckResult(SQWalkBaseModel):
    name: str
    passed: bool
    value: Optional[float] = None
    threshold: Optional[float] = None
    detail: Optional[str] = None


class VerificationReport(SQWalkBaseModel):
    n: Optional[int] = None
    checks: list[CheckResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class SpectralMapReport(SQWalkBaseModel):
    n: int
    lifted: int
    max_lift_error: float
    max_modulus_error: float
    contains_plus_one: bool
    contains_minus_one: bool
    passed: bool


class Residuals(SQWalkBaseModel):
    eigen: float
    closed_form_gap: float
    alignment_gap: float
    norm_sq_gap: float


class SpectrumReport(SQWalkBaseModel):
    n: int
    mu1_closed: float
    mu1_numeric: float
    eta: float
    f1_norm_sq: float
    residuals: Residuals
    predicted_tf: float
    eigenvalues: list[float]
    candidate_matches: dict[str, int]
    spectral_map: Optional[SpectralMapReport] = None


class OverlapReport(SQWalkBaseModel):
    n: int
    in_minus: ComplexValue
    target_plus: ComplexValue
    in_alignment: float
    target_alignment: float
    orthogonality: float
