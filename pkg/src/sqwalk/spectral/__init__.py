"""Discriminant spectra, closed forms, lifts and overlaps for the search walk."""

from .closed_form import (
    TopEigenpair,
    candidate_eigenvalues,
    mu1_closed_form,
    one_minus_mu1,
    predicted_tf,
    theta1,
)
from .discriminant import Discriminant, discriminant
from .jacobi import EigenPair, symmetric_eigen
from .lift import lift_partial
from .overlaps import overlaps
from .report import spectrum_report
from .spectral_map import spectral_map_check

__all__ = [
    "Discriminant",
    "discriminant",
    "TopEigenpair",
    "mu1_closed_form",
    "one_minus_mu1",
    "theta1",
    "predicted_tf",
    "candidate_eigenvalues",
    "EigenPair",
    "symmetric_eigen",
    "lift_partial",
    "overlaps",
    "spectral_map_check",
    "spectrum_report",
]
