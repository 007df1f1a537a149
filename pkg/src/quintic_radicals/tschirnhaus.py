"""Quartic solver via a cubic Tschirnhaus transformation.

The monic quartic ``x^4 + a3 x^3 + a2 x^2 + a1 x + a0`` is mapped by

    x^3 + b2 x^2 + b1 x + b0 + y = 0

onto a biquadratic ``y^4 + B2 y^2 + B0``.  Choosing ``b1 = 0``, ``b2`` kills the
``y^3`` term and ``b0`` (a root of a resolvent cubic) kills the ``y`` term.  Each
of the four ``y`` values is then pushed back through the cubic, giving twelve
candidates ``x_mn``; four of them are roots of the quartic and are picked out by
substitution.

The polynomial expressions below are kept term-for-term in their published
order so they can be audited against it.  Every one of them has been checked
against the resultant of the quartic and the transform (see the test suite).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from .closed_form import BiquadraticResolvent, biquadratic_roots, cubic_roots, monic_quadratic_roots
from .errors import (
    DegenerateCubic,
    DegenerateError,
    DegenerateQuartic,
    DegenerateResolvent,
    SelectionFailed,
)
from .poly_core import (
    Polynomial,
    RootSet,
    newton_polish,
    normalize_monic,
    relative_residual,
    shift,
    sort_roots,
    vieta_defect,
)

DEFAULT_DEGENERACY = 1e-6
RESOLVENT_DEGENERACY = 1e-10
SHIFTS = (0j, 1 + 0j, 1j, 1 + 1j)


@dataclass(frozen=True)
class QuarticCoeffs:
    """Monic quartic ``x^4 + a3 x^3 + a2 x^2 + a1 x + a0``."""

    a0: complex
    a1: complex
    a2: complex
    a3: complex

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> QuarticCoeffs:
        if p.degree != 4 or p.leading != 1:
            raise ValueError("expected a monic quartic")
        a0, a1, a2, a3, _ = p.coeffs
        return cls(a0, a1, a2, a3)

    def polynomial(self) -> Polynomial:
        return Polynomial((self.a0, self.a1, self.a2, self.a3, 1 + 0j))

    @property
    def denominator(self) -> complex:
        """``a3^2 - 2 a2``, the common denominator of b2 and the resolvent cubic."""
        return self.a3**2 - 2 * self.a2

    def is_degenerate(self, threshold: float = DEFAULT_DEGENERACY) -> bool:
        scale = 1 + abs(self.a3) ** 2 + abs(self.a2)
        return abs(self.denominator) <= threshold * scale


@dataclass(frozen=True)
class TschirnhausCubic:
    b0: complex
    b1: complex
    b2: complex


@dataclass(frozen=True)
class ResolventCubicCoeffs:
    """``b03 t^3 + b02 t^2 + b01 t + b00``; any root ``t`` is a valid ``b0``."""

    b00: complex
    b01: complex
    b02: complex
    b03: complex


@dataclass(frozen=True)
class CandidateRoot:
    value: complex
    m: int
    n: int
    residual: float
    accepted: bool = False


@dataclass
class SolverConfig:
    """Knobs for the closed-form solvers.

    ``tol`` is the relative residual a candidate must reach to be accepted.
    ``coefficient_source`` picks where B0, B2 and the resolvent cubic come from:
    the closed-form expressions (``"formula"``) or the numeric eliminant
    (``"elimination"``).
    """

    tol: float = 1e-8
    degeneracy_threshold: float = DEFAULT_DEGENERACY
    polish_steps: int = 2
    max_branch_retries: int = 2
    coefficient_source: str = "formula"

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.polish_steps < 0:
            raise ValueError("polish_steps must be >= 0")
        if self.coefficient_source not in ("formula", "elimination"):
            raise ValueError(f"unknown coefficient source {self.coefficient_source!r}")


@dataclass
class Stage:
    """One quartic solve as seen in the trace.

    ``polynomial``, ``transform`` and ``resolvent`` are in the shifted variable
    ``z = x - shift``; candidate values have already been shifted back to ``x``.
    """

    name: str
    polynomial: Polynomial
    shift: complex
    branch: int
    b0_index: int
    transform: TschirnhausCubic
    resolvent: BiquadraticResolvent
    candidates: list[CandidateRoot]
    low_confidence: bool
    vieta_defect: float


@dataclass
class SolveReport:
    roots: RootSet
    method: str
    tolerance: float
    vieta_defect: float
    stages: list[Stage] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    @property
    def low_confidence(self) -> bool:
        return any(s.low_confidence for s in self.stages)

    @property
    def candidates(self) -> list[CandidateRoot]:
        return [c for s in self.stages for c in s.candidates]


@dataclass(frozen=True)
class Selection:
    roots: RootSet
    indices: tuple[int, ...]
    low_confidence: bool
    vieta_defect: float


def _check_denominator(a: QuarticCoeffs, threshold: float) -> complex:
    if a.is_degenerate(threshold):
        raise DegenerateQuartic(f"a3^2 - 2 a2 = {a.denominator} is numerically zero")
    return a.denominator


def compute_b2(a: QuarticCoeffs, b0: complex, b1: complex = 0j, threshold: float = DEFAULT_DEGENERACY) -> complex:
    """Coefficient of x^2 in the transform that removes the y^3 term."""
    den = _check_denominator(a, threshold)
    a1, a2, a3 = a.a1, a.a2, a.a3
    return (a3**3 + 3 * a1 - 4 * b0 + b1 * a3 - 3 * a3 * a2) / den


def resolvent_cubic_numerators(a: QuarticCoeffs) -> ResolventCubicCoeffs:
    """Numerators of the resolvent cubic, before division by (a3^2 - 2 a2)^3.

    Works on any ring elements (Fractions included), which is how the tests
    check the expressions exactly.
    """
    a0, a1, a2, a3 = a.a0, a.a1, a.a2, a.a3
    b00 = (
        a0**2 * a3**7 + 20 * a2**3 * a1**3 + 2 * a3**6 * a1**3 + 18 * a3**3 * a1**4
        - 36 * a1 * a2**3 * a0 * a3**2 + 150 * a3 * a1**2 * a2**2 * a0
        + 29 * a1 * a2**2 * a3**4 * a0 - 54 * a3**3 * a1**2 * a0 * a2
        - 4 * a3**6 * a0 * a1 * a2 - 48 * a3**2 * a0**2 * a1 * a2 + 27 * a1**5
        - a3**5 * a2**2 * a1**2 + 28 * a3**3 * a0**2 * a2**2 - 24 * a2**3 * a0**2 * a3
        + 48 * a2**2 * a0**2 * a1 + 24 * a2**5 * a0 * a3 + 12 * a3**4 * a0**2 * a1
        - 10 * a3**5 * a0**2 * a2 - 14 * a3**3 * a0 * a2**4 + 2 * a3**5 * a0 * a2**3
        - 12 * a3 * a2**4 * a1**2 + 7 * a3**3 * a2**3 * a1**2 - 48 * a1 * a2**4 * a0
        + 3 * a3**5 * a1**2 * a0 + 21 * a2**2 * a1**3 * a3**2 - 15 * a2 * a1**3 * a3**4
        - 72 * a1**3 * a2 * a0 + 9 * a1**3 * a3**2 * a0 - 63 * a3 * a1**4 * a2
    )
    # The published b01 has no operator between the a3^2 a0^2 a2 and
    # a3 a1^3 a2 terms; "+" is the reading that matches the resultant.
    b01 = (
        -10 * a3**6 * a1**2 - 84 * a3**3 * a1**3 + 80 * a0 * a2**4 - 76 * a2**3 * a1**2
        - 64 * a0**2 * a2**2 - 2 * a3**4 * a2**4 + 12 * a3**2 * a2**5 - 16 * a3**4 * a0**2
        - 108 * a1**4 - 16 * a2**6 + 120 * a3**3 * a1 * a2 * a0
        - 344 * a3 * a1 * a2**2 * a0 + 16 * a2**3 * a3**2 * a0 - 10 * a3**5 * a1 * a0
        - 24 * a2**2 * a3**4 * a0 - 74 * a2**2 * a1**2 * a3**2 + 70 * a2 * a1**2 * a3**4
        + 72 * a3 * a2**4 * a1 - 52 * a3**3 * a2**3 * a1 + 8 * a3**5 * a2**2 * a1
        + 4 * a3**6 * a0 * a2 + 64 * a3**2 * a0**2 * a2 + 240 * a3 * a1**3 * a2
        + 12 * a3**2 * a0 * a1**2 + 192 * a0 * a2 * a1**2
    )
    b02 = (
        -64 * a3**3 * a2 * a0 + 8 * a3**5 * a0 + 16 * a1 * a3**6 - 104 * a1 * a3**4 * a2
        + 112 * a3**2 * a1 * a2**2 - 64 * a3 * a2**4 + 128 * a1**2 * a3**3
        - 8 * a3**5 * a2**2 - 304 * a3 * a2 * a1**2 + 144 * a1**3 + 64 * a1 * a2**3
        + 48 * a3**3 * a2**3 + 192 * a0 * a3 * a2**2 - 80 * a1 * a3**2 * a0
        - 128 * a1 * a2 * a0
    )
    b03 = (
        -64 * a3**2 * a2**2 + 48 * a3**4 * a2 - 8 * a3**6 + 64 * a3**2 * a0
        - 64 * a1**2 + 128 * a3 * a2 * a1 - 64 * a1 * a3**3
    )
    return ResolventCubicCoeffs(b00, b01, b02, b03)


def resolvent_cubic_coeffs(a: QuarticCoeffs, threshold: float = DEFAULT_DEGENERACY) -> ResolventCubicCoeffs:
    den = _check_denominator(a, threshold) ** 3
    num = resolvent_cubic_numerators(a)
    return ResolventCubicCoeffs(num.b00 / den, num.b01 / den, num.b02 / den, num.b03 / den)


def compute_b0(rc: ResolventCubicCoeffs, branch: int = 0) -> complex:
    """Principal Cardano root of the resolvent cubic."""
    if _resolvent_degree(rc) < 3:
        raise DegenerateResolvent("leading coefficient of the resolvent cubic vanishes")
    return cubic_roots(rc.b00 / rc.b03, rc.b01 / rc.b03, rc.b02 / rc.b03, 0j, branch)[0]


def root_scale(a: QuarticCoeffs) -> float:
    """Typical root magnitude ``max(|a3|, |a2|^(1/2), |a1|^(1/3), |a0|^(1/4))``."""
    rho = max(abs(a.a3), abs(a.a2) ** 0.5, abs(a.a1) ** (1 / 3), abs(a.a0) ** 0.25)
    return rho or 1.0


def _resolvent_degree(rc: ResolventCubicCoeffs, a: Optional[QuarticCoeffs] = None) -> int:
    # b0 carries the weight of a cubed root, so b0k is compared after scaling by
    # rho^(3 (3 - k)).  Given the quartic, the yardstick is the natural size
    # rho^6 / |a3^2 - 2 a2|^3 of these coefficients, which also catches the case
    # where all of them are rounding noise.
    cs = (rc.b00, rc.b01, rc.b02, rc.b03)
    if a is None:
        scaled = cs
        ref = max(abs(c) for c in cs)
    else:
        rho = root_scale(a)
        scaled = tuple(c / rho ** (3 * (3 - k)) for k, c in enumerate(cs))
        ref = rho**6 / abs(a.denominator) ** 3
    for deg in (3, 2, 1):
        if abs(scaled[deg]) > RESOLVENT_DEGENERACY * ref:
            return deg
    return 0


def resolvent_roots(rc: ResolventCubicCoeffs, a: Optional[QuarticCoeffs] = None) -> list[complex]:
    """All usable values of ``b0``, principal Cardano root first.

    If the leading coefficient vanishes the cubic drops degree and its remaining
    roots are used; if it vanishes identically every ``b0`` works and 0 is taken.
    Passing the quartic ``a`` lets the vanishing test use an absolute yardstick.
    """
    deg = _resolvent_degree(rc, a)
    if deg == 3:
        try:
            return list(cubic_roots(rc.b00 / rc.b03, rc.b01 / rc.b03, rc.b02 / rc.b03))
        except DegenerateCubic:
            return [-rc.b02 / (3 * rc.b03)]
    if deg == 2:
        # t^2 + (b01/b02) t + b00/b02, written as w^2 + B2 w + B0
        w1, w3 = monic_quadratic_roots(rc.b01 / rc.b02, rc.b00 / rc.b02)
        return [w1, w3]
    if deg == 1:
        return [-rc.b00 / rc.b01]
    return [0j]


def compute_B2(a: QuarticCoeffs, t: TschirnhausCubic) -> complex:
    """Coefficient of y^2 in the transformed quartic."""
    a0, a1, a2, a3 = a.a0, a.a1, a.a2, a.a3
    b0, b1, b2 = t.b0, t.b1, t.b2
    return (
        a3**2 * a2 * b1 + 2 * a1 * b2 * a3**2 - 6 * b0 * b2 * a2 - 5 * b2 * a3 * a0
        + 4 * b1 * a0 - 3 * a2 * a0 + 3 * a3**2 * a0 - 3 * a3 * a2 * a1 - 3 * b0 * a3**3
        + 6 * b0**2 - 9 * b0 * a1 + b2**2 * a2**2 + 3 * a1**2 - 2 * b1 * a2**2
        + b1**2 * a2 - b2 * a2 * b1 * a3 - a3 * a2**2 * b2 + a2**3 + 3 * b1 * b2 * a1
        - a1 * b1 * a3 - 3 * b0 * b1 * a3 + 3 * b0 * b2 * a3**2 + 2 * a0 * b2**2
        + 9 * a3 * a2 * b0 + b2 * a2 * a1 - 2 * b2**2 * a3 * a1
    )


def compute_B0(a: QuarticCoeffs, t: TschirnhausCubic) -> complex:
    """Constant term of the transformed quartic."""
    a0, a1, a2, a3 = a.a0, a.a1, a.a2, a.a3
    b0, b1, b2 = t.b0, t.b1, t.b2
    return (
        3 * b0**2 * a3**2 * a0 + b0**3 * b2 * a3**2 + b0**2 * b2**2 * a2**2
        - 2 * b0**3 * b2 * a2 + 3 * a3 * a2 * b0**3 + b0 * b2**3 * a1**2 - b0**3 * b1 * a3
        + 4 * b0 * b2 * a0**2 + 4 * b0**2 * b1 * a0 + b0**2 * b1**2 * a2
        - 2 * b0**2 * b1 * a2**2 - b2**3 * a0**2 * a3 - 2 * a0 * b1**3 * a2
        + a3**2 * a0 * b1**3
        - b2 * a0**2 * a1 - 2 * b1 * a0**2 * a2 + b1 * a0 * a1**2 + a0 * b1**2 * a2**2
        + a1 * b0**2 * b2 * a2 - 3 * b0 * a3 * a0**2 + 2 * a1 * b0**2 * b2 * a3**2
        - 3 * a1 * a3 * a2 * b0**2 + b0**2 * a3**2 * a2 * b1 - 5 * b0**2 * b2 * a3 * a0
        - b0**2 * a3 * a2**2 * b2 + 3 * b0**2 * b1 * b2 * a1
        - 2 * b0**2 * b2**2 * a3 * a1 - 2 * b0 * b2**3 * a0 * a2 - 4 * b0 * b2 * a0 * b1**2
        - 2 * b0 * b2 * a0 * a2**2 + 2 * b0 * a1 * b1**2 * a2 + b0 * b2**2 * a0 * a1
        - b0 * a3**2 * a1 * b1**2 + 2 * b0 * a3 * a1**2 * b1 - b0 * b2**2 * a3 * a1**2
        + b0 * b2 * a2 * a1**2 - b0 * a1 * b1 * a2**2 + 3 * b0 * a1 * a2 * a0
        - 3 * b0 * b1 * b2 * a1**2 - 5 * b0 * a1 * b1 * a0 + 3 * b1 * b2 * a3 * a0**2
        + a0 * b0 * b1**2 * a3 + a0 * b1 * a3 * a2 * b0 - a0 * b1 * b2 * a2 * a1
        - a0 * b2 * a2 * b1**2 * a3 + 2 * b1**2 * a0**2 + b2**4 * a0**2 + b1**4 * a0
        - b0 * b1**3 * a1 + a0**2 * b2**2 * a2 - 4 * b2**2 * a0**2 * b1
        - 3 * a1 * b0**3 + 3 * b0**2 * a1**2 - b0 * a1**3 - 3 * b0**2 * a2 * a0 + b0**4
        + 2 * b2**2 * a0 * b0**2 - b0**3 * a3**3 + b0**2 * a2**3 - a1 * b0**2 * b1 * a3
        + a0**3 - b0**2 * b2 * a2 * b1 * a3 - b0 * a1 * b2 * a3 * a0
        + b0 * b2 * a1 * b1**2 * a3 + 2 * b0 * a0 * b2**2 * a3 * a2
        - 3 * b0 * a0 * b1 * b2 * a3**2
        + 4 * b0 * b2 * a0 * b1 * a2 + 3 * b0 * b2**2 * a0 * b1 * a3
        - b0 * b1 * a1 * b2**2 * a2 + b0 * a1 * b2 * a2 * b1 * a3 + 3 * b1**2 * a0 * b2 * a1
        - 2 * b1**2 * a0 * a1 * a3 - b1 * a0 * b2**3 * a1 + b1**2 * a0 * b2**2 * a2
        + b2**2 * a0 * b1 * a3 * a1 - b2 * a0 * b1**3 * a3
    )


def tschirnhaus_transform(
    a: QuarticCoeffs,
    b0_index: int = 0,
    source: str = "formula",
    threshold: float = DEFAULT_DEGENERACY,
) -> tuple[TschirnhausCubic, BiquadraticResolvent]:
    """Pick (b0, b1 = 0, b2) and compute the biquadratic resolvent (B2, B0)."""
    if source == "elimination":
        from .oracle import eliminant_coeffs, refine_resolvent_roots, resolvent_cubic_by_elimination

        _check_denominator(a, threshold)
        choices = refine_resolvent_roots(a, resolvent_cubic_by_elimination(a, threshold), threshold=threshold)
    else:
        choices = resolvent_roots(resolvent_cubic_coeffs(a, threshold), a)
    if b0_index >= len(choices):
        raise DegenerateResolvent(f"resolvent has only {len(choices)} usable root(s)")
    b0 = choices[b0_index]
    t = TschirnhausCubic(b0, 0j, compute_b2(a, b0, 0j, threshold))
    if source == "elimination":
        el = eliminant_coeffs(a, t)
        return t, BiquadraticResolvent(el.c2, el.c0)
    return t, BiquadraticResolvent(compute_B2(a, t), compute_B0(a, t))


def candidates_from_transform(
    a: QuarticCoeffs, t: TschirnhausCubic, res: BiquadraticResolvent, branch: int = 0
) -> list[CandidateRoot]:
    quartic = a.polynomial()
    out = []
    for n, y in enumerate(biquadratic_roots(res), start=1):
        for m, x in enumerate(cubic_roots(t.b0, t.b1, t.b2, y, branch), start=1):
            out.append(CandidateRoot(x, m, n, relative_residual(quartic, x)))
    return out


def generate_candidates(
    a: QuarticCoeffs,
    branch: int = 0,
    b0_index: int = 0,
    source: str = "formula",
    threshold: float = DEFAULT_DEGENERACY,
) -> list[CandidateRoot]:
    """The twelve values ``x_mn`` (m = cubic root, n = y root) with residuals."""
    t, res = tschirnhaus_transform(a, b0_index, source, threshold)
    return candidates_from_transform(a, t, res, branch)


def select_quartic_roots(
    p: Polynomial,
    candidates: Sequence[CandidateRoot],
    tol: float,
    accept: Optional[Callable[[CandidateRoot], bool]] = None,
) -> Selection:
    """Choose the four candidates that are roots of ``p``.

    Candidates must pass ``residual <= tol`` (and ``accept`` if given).  Among
    the passing ones, the 4-subset whose elementary symmetric functions best
    reproduce the coefficients wins.  If fewer than four pass, the best subset of
    all candidates is returned flagged low-confidence.
    """
    if len(candidates) < 4:
        raise SelectionFailed(f"need at least 4 candidates, got {len(candidates)}")
    passing = [
        i for i, c in enumerate(candidates)
        if c.residual <= tol and (accept is None or accept(c))
    ]
    low_confidence = len(passing) < 4
    pool = range(len(candidates)) if low_confidence else passing
    best = None
    best_defect = math.inf
    for combo in itertools.combinations(pool, 4):
        d = vieta_defect(p, [candidates[i].value for i in combo])
        if d < best_defect:
            best, best_defect = combo, d
    if best is None or not best_defect <= math.sqrt(tol):
        raise SelectionFailed(f"best candidate subset misses the coefficients by {best_defect:.3g}")
    return Selection(
        roots=RootSet.build(p, [candidates[i].value for i in best]),
        indices=best,
        low_confidence=low_confidence,
        vieta_defect=best_defect,
    )


def _attempts(cfg: SolverConfig):
    # b0 roots are tried before the cube-root branch is widened
    for branch in range(min(3, cfg.max_branch_retries + 1)):
        for b0_index in range(3):
            yield branch, b0_index


def solve_quartic_stage(
    p: Polynomial,
    cfg: SolverConfig,
    accept: Optional[Callable[[complex], bool]] = None,
    name: str = "quartic",
    trace: Optional[list[str]] = None,
) -> Stage:
    """Run the candidate search on monic quartic ``p``; roots are left unpolished.

    ``accept`` receives candidate values in the coordinates of ``p`` (after any
    internal shift is undone).
    """
    trace = trace if trace is not None else []
    fallback: Optional[Stage] = None
    last_error: Optional[Exception] = None
    saw_nondegenerate = False
    for s in SHIFTS:
        ps = shift(p, s) if s else p
        a = QuarticCoeffs.from_polynomial(ps)
        if a.is_degenerate(cfg.degeneracy_threshold):
            trace.append(f"{name}: shift {_fmt(s)} leaves a3^2 - 2a2 ~ 0, skipping")
            continue
        saw_nondegenerate = True
        if s:
            trace.append(f"{name}: solving shifted quartic z = x - {_fmt(s)}")

        def shifted_accept(c: CandidateRoot, s=s) -> bool:
            return accept is None or accept(c.value + s)

        for branch, b0_index in _attempts(cfg):
            try:
                t, res = tschirnhaus_transform(a, b0_index, cfg.coefficient_source, cfg.degeneracy_threshold)
                cands = candidates_from_transform(a, t, res, branch)
                sel = select_quartic_roots(ps, cands, cfg.tol, shifted_accept)
            except (DegenerateError, SelectionFailed) as exc:
                last_error = exc
                trace.append(f"{name}: branch {branch}, b0 #{b0_index}: {exc}")
                continue
            chosen = set(sel.indices)
            marked = [
                replace(c, value=c.value + s, accepted=i in chosen,
                        residual=relative_residual(p, c.value + s))
                for i, c in enumerate(cands)
            ]
            stage = Stage(
                name=name, polynomial=ps, shift=s, branch=branch, b0_index=b0_index,
                transform=t, resolvent=res, candidates=marked,
                low_confidence=sel.low_confidence, vieta_defect=sel.vieta_defect,
            )
            if not sel.low_confidence:
                trace.append(f"{name}: accepted 4 of 12 candidates (branch {branch}, b0 #{b0_index})")
                return stage
            trace.append(f"{name}: only a low-confidence subset (branch {branch}, b0 #{b0_index})")
            if fallback is None or stage.vieta_defect < fallback.vieta_defect:
                fallback = stage
    if fallback is not None:
        return fallback
    if not saw_nondegenerate:
        raise DegenerateQuartic("a3^2 - 2 a2 vanishes for every trial shift")
    if isinstance(last_error, DegenerateError):
        raise last_error
    raise SelectionFailed(f"{name}: no branch or shift produced four roots ({last_error})")


def solve_quartic(p: Polynomial, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """All four roots of a quartic, with the candidate trace."""
    cfg = cfg or SolverConfig()
    if p.degree != 4:
        raise ValueError(f"solve_quartic expects degree 4, got {p.degree}")
    p = normalize_monic(p)
    trace: list[str] = []
    stage = solve_quartic_stage(p, cfg, trace=trace)
    chosen = [c.value for c in stage.candidates if c.accepted]
    polished = [newton_polish(p, x, cfg.polish_steps) for x in chosen]
    roots = RootSet.build(p, sort_roots(polished))
    return SolveReport(
        roots=roots,
        method="paper",
        tolerance=cfg.tol,
        vieta_defect=vieta_defect(p, list(roots.roots)),
        stages=[stage],
        trace=trace,
    )


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"
