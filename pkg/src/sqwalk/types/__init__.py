from .complexes import ComplexFile as ComplexFile, GraphExport as GraphExport
from .config import ExperimentConfig as ExperimentConfig, Subcommand as Subcommand
from .reports import (
    CheckResult as CheckResult,
    ComplexValue as ComplexValue,
    FitPoint as FitPoint,
    FitResult as FitResult,
    OverlapReport as OverlapReport,
    Residuals as Residuals,
    SearchSummary as SearchSummary,
    SpectralMapReport as SpectralMapReport,
    SpectrumReport as SpectrumReport,
    VerificationReport as VerificationReport,
)
