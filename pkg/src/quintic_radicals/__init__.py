"""Quartic and quintic roots by radicals, with candidate enumeration and filtering."""

from .errors import (
    DegenerateCubic,
    DegenerateError,
    DegenerateQuartic,
    DegenerateResolvent,
    NoConvergence,
    ProviderFailed,
    RootSolverError,
    SelectionFailed,
    ZeroPolynomial,
)
from .oracle import aberth_all_roots, eliminant_coeffs, resolvent_cubic_by_elimination
from .poly_core import Polynomial, RootSet, normalize_monic, relative_residual, vieta_defect
from .quintic import AberthProvider, first_root, solve_polynomial, solve_quintic
from .tschirnhaus import QuarticCoeffs, SolveReport, SolverConfig, generate_candidates, solve_quartic

__all__ = [
    "AberthProvider",
    "DegenerateCubic",
    "DegenerateError",
    "DegenerateQuartic",
    "DegenerateResolvent",
    "NoConvergence",
    "Polynomial",
    "ProviderFailed",
    "QuarticCoeffs",
    "RootSet",
    "RootSolverError",
    "SelectionFailed",
    "SolveReport",
    "SolverConfig",
    "ZeroPolynomial",
    "aberth_all_roots",
    "eliminant_coeffs",
    "first_root",
    "generate_candidates",
    "normalize_monic",
    "relative_residual",
    "resolvent_cubic_by_elimination",
    "solve_polynomial",
    "solve_quartic",
    "solve_quintic",
    "vieta_defect",
]
