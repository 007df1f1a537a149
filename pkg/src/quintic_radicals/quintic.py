"""Quintic roots: take one root, deflate to a quartic, solve that by radicals.

The remaining four roots come from the quartic solver's twelve candidates.  A
candidate is only kept if it satisfies both the cofactor quartic and the
original quintic.

The first root is supplied by a provider.  Any callable taking a monic quintic
and returning one root will do; the default runs the Aberth oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .closed_form import cubic_roots, monic_quadratic_roots
from .errors import DegenerateCubic, NoConvergence, ProviderFailed
from .oracle import aberth_all_roots
from .poly_core import (
    Polynomial,
    RootSet,
    deflate,
    newton_polish,
    normalize_monic,
    relative_residual,
    root_sort_key,
    sort_roots,
    vieta_defect,
)
from .tschirnhaus import (
    QuarticCoeffs,
    SolveReport,
    SolverConfig,
    solve_quartic,
    solve_quartic_stage,
)

FirstRootProvider = Callable[[Polynomial], complex]


@dataclass(frozen=True)
class QuinticCoeffs:
    """Monic ``x^5 + m x^4 + n x^3 + p x^2 + q x + r``."""

    m: complex
    n: complex
    p: complex
    q: complex
    r: complex

    def polynomial(self) -> Polynomial:
        return Polynomial((self.r, self.q, self.p, self.n, self.m, 1 + 0j))


@dataclass
class QuinticSolution:
    r1: complex
    roots: tuple[complex, ...]
    report: SolveReport


class AberthProvider:
    """First root from the Aberth oracle: the smallest residual, ties by (re, im)."""

    def __init__(self, max_iter: int = 500, tol: float = 1e-12):
        self.max_iter = max_iter
        self.tol = tol

    def __call__(self, p: Polynomial) -> complex:
        try:
            found = aberth_all_roots(p, self.tol, self.max_iter)
        except NoConvergence as exc:
            raise ProviderFailed(str(exc)) from exc
        best = min(zip(found.residuals, found.roots), key=lambda rr: (rr[0], root_sort_key(rr[1])))
        return best[1]


def first_root(p: Polynomial, provider: Optional[FirstRootProvider] = None, cfg: Optional[SolverConfig] = None) -> complex:
    cfg = cfg or SolverConfig()
    provider = provider or AberthProvider()
    r1 = complex(provider(p))
    res = relative_residual(p, r1)
    if not res <= cfg.tol:
        raise ProviderFailed(f"provider root {r1} has residual {res:.3g} > {cfg.tol:g}")
    return r1


def deflated_quartic_coeffs(p: Polynomial, r1: complex) -> QuarticCoeffs:
    return QuarticCoeffs.from_polynomial(deflate(p, r1))


def solve_quintic(
    p: Polynomial,
    provider: Optional[FirstRootProvider] = None,
    cfg: Optional[SolverConfig] = None,
) -> QuinticSolution:
    cfg = cfg or SolverConfig()
    if p.degree != 5:
        raise ValueError(f"solve_quintic expects degree 5, got {p.degree}")
    original = p
    p = normalize_monic(p)
    trace: list[str] = []

    r1 = first_root(p, provider, cfg)
    # deflation error scales with the residual of r1
    r1 = newton_polish(p, r1, cfg.polish_steps)
    trace.append(f"first root r1 = {r1!r}")
    cofactor = deflated_quartic_coeffs(p, r1).polynomial()

    def on_quintic(x: complex) -> bool:
        return relative_residual(original, x) <= cfg.tol

    stage = solve_quartic_stage(cofactor, cfg, accept=on_quintic, name="cofactor", trace=trace)
    rest = [newton_polish(p, c.value, cfg.polish_steps) for c in stage.candidates if c.accepted]
    roots = sort_roots([r1, *rest])
    report = SolveReport(
        roots=RootSet.build(p, roots),
        method="paper" if cfg.coefficient_source == "formula" else "elimination",
        tolerance=cfg.tol,
        vieta_defect=vieta_defect(p, roots),
        stages=[stage],
        trace=trace,
    )
    return QuinticSolution(r1=r1, roots=tuple(roots), report=report)


def _low_degree(p: Polynomial, cfg: SolverConfig, method: str) -> SolveReport:
    a = p.coeffs
    if p.degree == 1:
        roots = [-a[0]]
    elif p.degree == 2:
        roots = list(monic_quadratic_roots(a[1], a[0]))
    else:
        try:
            roots = list(cubic_roots(a[0], a[1], a[2]))
        except DegenerateCubic:
            roots = [-a[2] / 3] * 3
    roots = sort_roots(newton_polish(p, r, cfg.polish_steps) for r in roots)
    return SolveReport(
        roots=RootSet.build(p, roots),
        method=method,
        tolerance=cfg.tol,
        vieta_defect=vieta_defect(p, roots),
    )


def solve_polynomial(
    p: Polynomial,
    method: str = "paper",
    cfg: Optional[SolverConfig] = None,
    provider: Optional[FirstRootProvider] = None,
) -> SolveReport:
    """Roots of a polynomial of degree 1 to 5.

    ``method`` is ``"paper"`` (radical formulas), ``"elimination"`` (radicals with
    B0, B2 and the resolvent cubic taken from the numeric eliminant) or
    ``"oracle"`` (Aberth iteration only).
    """
    cfg = cfg or SolverConfig()
    p = normalize_monic(p)
    if not 1 <= p.degree <= 5:
        raise ValueError(f"degree must be between 1 and 5, got {p.degree}")
    if method == "oracle":
        found = aberth_all_roots(p, min(cfg.tol, 1e-12))
        return SolveReport(
            roots=found,
            method=method,
            tolerance=cfg.tol,
            vieta_defect=vieta_defect(p, list(found.roots)),
        )
    if method not in ("paper", "elimination"):
        raise ValueError(f"unknown method {method!r}")
    if method == "elimination":
        cfg = SolverConfig(
            tol=cfg.tol,
            degeneracy_threshold=cfg.degeneracy_threshold,
            polish_steps=cfg.polish_steps,
            max_branch_retries=cfg.max_branch_retries,
            coefficient_source="elimination",
        )
    if p.degree <= 3:
        return _low_degree(p, cfg, method)
    if p.degree == 4:
        report = solve_quartic(p, cfg)
    else:
        report = solve_quintic(p, provider, cfg).report
    report.method = method
    return report
