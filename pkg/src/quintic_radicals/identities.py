"""Side-by-side comparison of the closed-form coefficients and the numeric eliminant."""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import (
    EliminantCoeffs,
    aberth_all_roots,
    eliminant_coeffs,
    refine_resolvent_roots,
    resolvent_cubic_by_elimination,
)
from .tschirnhaus import (
    DEFAULT_DEGENERACY,
    QuarticCoeffs,
    ResolventCubicCoeffs,
    TschirnhausCubic,
    compute_B0,
    compute_B2,
    compute_b2,
    resolvent_cubic_coeffs,
)


@dataclass
class IdentityCheck:
    """Everything the elimination mode prints for one quartic.

    Errors are absolute differences divided by ``1 + |c2| + |c0|`` (eliminant
    terms) or by the largest resolvent coefficient (resolvent terms).
    """

    transform: TschirnhausCubic
    eliminant: EliminantCoeffs
    resolvent_formula: ResolventCubicCoeffs
    resolvent_elimination: ResolventCubicCoeffs
    B2: complex
    B0: complex
    c3_rel: float
    c1_rel: float
    B2_rel: float
    B0_rel: float
    resolvent_rel: float

    @property
    def worst(self) -> float:
        return max(self.c3_rel, self.c1_rel, self.B2_rel, self.B0_rel, self.resolvent_rel)


def check_identities(a: QuarticCoeffs, b0_index: int = 0, threshold: float = DEFAULT_DEGENERACY) -> IdentityCheck:
    """Take ``b0`` as a root of the interpolated resolvent, ``b1 = 0``, ``b2`` from
    its formula, and compare the resulting eliminant with the closed-form B2 and B0."""
    rc_elim = resolvent_cubic_by_elimination(a, threshold)
    rc_formula = resolvent_cubic_coeffs(a, threshold)
    roots = aberth_all_roots(a.polynomial()).roots
    b0 = refine_resolvent_roots(a, rc_elim, roots, threshold)[b0_index]
    t = TschirnhausCubic(b0, 0j, compute_b2(a, b0, 0j, threshold))
    el = eliminant_coeffs(a, t, roots)
    B2 = compute_B2(a, t)
    B0 = compute_B0(a, t)
    scale = 1 + abs(el.c2) + abs(el.c0)
    pairs = list(zip(
        (rc_elim.b00, rc_elim.b01, rc_elim.b02, rc_elim.b03),
        (rc_formula.b00, rc_formula.b01, rc_formula.b02, rc_formula.b03),
    ))
    rc_scale = max(abs(w) for _, w in pairs) or 1.0
    return IdentityCheck(
        transform=t,
        eliminant=el,
        resolvent_formula=rc_formula,
        resolvent_elimination=rc_elim,
        B2=B2,
        B0=B0,
        c3_rel=abs(el.c3) / scale,
        c1_rel=abs(el.c1) / scale,
        B2_rel=abs(el.c2 - B2) / scale,
        B0_rel=abs(el.c0 - B0) / scale,
        resolvent_rel=max(abs(g - w) for g, w in pairs) / rc_scale,
    )
