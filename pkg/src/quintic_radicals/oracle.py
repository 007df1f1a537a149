"""Independent ground truth: Aberth-Ehrlich iteration and a numeric eliminant.

Nothing here uses the closed-form expressions, so agreement with them is a real
check rather than a tautology.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import NoConvergence
from .poly_core import (
    Polynomial,
    RootSet,
    eval_with_derivative,
    normalize_monic,
    residual_scale,
)

EPS = sys.float_info.epsilon
INITIAL_ANGLE = 0.4
LOCAL_RADIUS = 1e-4


@dataclass(frozen=True)
class EliminantCoeffs:
    """``c4 y^4 + c3 y^3 + c2 y^2 + c1 y + c0`` from eliminating x."""

    c0: complex
    c1: complex
    c2: complex
    c3: complex
    c4: complex

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.c0, self.c1, self.c2, self.c3, self.c4)

    def __call__(self, y: complex) -> complex:
        acc = 0j
        for c in reversed(self.as_tuple()):
            acc = acc * y + c
        return acc


def aberth_all_roots(p: Polynomial, tol: float = 1e-12, max_iter: int = 500) -> RootSet:
    """All roots of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Starting points sit on a circle of radius ``1 + max|a_k|`` (a bound on every
    root of the monic polynomial), rotated by a fixed angle so no start lies on a
    symmetry axis.  Updates are applied in place, one root after another.  A root
    stops moving once its correction is at rounding level or its value is below
    the rounding-error bound of Horner's rule.  Raises NoConvergence if any root
    still has relative residual above ``tol`` when the sweeps stop.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    p = normalize_monic(p)
    d = p.degree
    if d == 1:
        return RootSet.build(p, [-p.coeffs[0]])

    radius = 1 + max(abs(c) for c in p.coeffs[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / d + INITIAL_ANGLE)) for k in range(d)]
    done = [False] * d

    for _ in range(max_iter):
        if all(done):
            break
        for k in range(d):
            if done[k]:
                continue
            val, der = eval_with_derivative(p, z[k])
            if val == 0 or abs(val) <= 4 * d * EPS * residual_scale(p, z[k]):
                done[k] = True
                continue
            repulsion = 0j
            for j in range(d):
                if j != k and z[j] != z[k]:
                    repulsion += 1 / (z[k] - z[j])
            denom = der / val - repulsion
            if denom == 0:
                continue
            w = 1 / denom
            nxt = z[k] - w
            if not (math.isfinite(nxt.real) and math.isfinite(nxt.imag)):
                continue
            z[k] = nxt
            if abs(w) <= EPS * abs(nxt):
                done[k] = True

    roots = RootSet.build(p, z)
    worst = max(roots.residuals)
    if not worst <= tol:
        raise NoConvergence(f"Aberth iteration stopped with residual {worst:.3g} > {tol:g}")
    return roots


def circle_nodes(count: int, radius: float) -> np.ndarray:
    """``radius * exp(2 pi i k / count)``; their Vandermonde matrix is a scaled DFT."""
    return radius * np.exp(2j * np.pi * np.arange(count) / count)


def _interpolate(nodes: Sequence[complex], values: Sequence[complex]) -> np.ndarray:
    """Ascending coefficients of the polynomial through (nodes, values)."""
    vander = np.vander(np.asarray(nodes, dtype=complex), len(nodes), increasing=True)
    return np.linalg.solve(vander, np.asarray(values, dtype=complex))


def _transform_values(roots: Sequence[complex], b0: complex, b1: complex, b2: complex) -> list[complex]:
    return [x**3 + b2 * x**2 + b1 * x + b0 for x in roots]


def eliminant_coeffs(a, t, roots: Optional[Sequence[complex]] = None) -> EliminantCoeffs:
    """Quartic in ``y`` whose roots are ``-(x^3 + b2 x^2 + b1 x + b0)`` at each root x.

    ``a`` is a QuarticCoeffs and ``t`` a TschirnhausCubic.  The product
    ``R(y) = prod_i (y + x_i^3 + b2 x_i^2 + b1 x_i + b0)`` is sampled at five
    points on a circle whose radius matches the size of its roots, then
    interpolated.  ``roots`` may be passed to reuse a previous
    oracle solve of the same quartic.
    """
    if roots is None:
        roots = aberth_all_roots(a.polynomial()).roots
    vals = _transform_values(roots, t.b0, t.b1, t.b2)
    nodes = circle_nodes(5, max([1.0] + [abs(v) for v in vals]))
    samples = []
    for y in nodes:
        prod = 1 + 0j
        for v in vals:
            prod *= y + v
        samples.append(prod)
    c = _interpolate(nodes, samples)
    c = c / c[4]
    return EliminantCoeffs(*(complex(ci) for ci in c))


def _c1_samples(a, nodes, roots, threshold: float) -> list[complex]:
    from .tschirnhaus import TschirnhausCubic, compute_b2

    out = []
    for b0 in nodes:
        t = TschirnhausCubic(complex(b0), 0j, compute_b2(a, complex(b0), 0j, threshold))
        out.append(eliminant_coeffs(a, t, roots).c1)
    return out


def resolvent_cubic_by_elimination(a, threshold: float = 1e-6):
    """Resolvent cubic recovered numerically from the eliminant's ``y`` coefficient.

    With ``b1 = 0`` and ``b2`` the function of ``b0`` that removes the ``y^3``
    term, the ``y`` coefficient of the eliminant is a cubic in ``b0``.  It is
    sampled at four points on a circle and interpolated; the radius is where the
    ``b0``-dependent part of the transform becomes as large as the rest.  Its scale already equals that of the
    closed-form coefficients (both are divided by ``(a3^2 - 2 a2)^3``), so no
    rescaling is applied.
    """
    from .tschirnhaus import ResolventCubicCoeffs, compute_b2

    compute_b2(a, 0j, 0j, threshold)  # raises DegenerateQuartic early
    roots = aberth_all_roots(a.polynomial()).roots
    # transform value at x is u(x) + b0 w(x) once b2 is written in terms of b0
    b2_at_zero = compute_b2(a, 0j, 0j, threshold)
    slope = -4 / a.denominator
    u = max(abs(x**3 + b2_at_zero * x**2) for x in roots)
    w = max(abs(1 + slope * x**2) for x in roots)
    nodes = circle_nodes(4, max(1.0, u / w) if w else max(1.0, u))
    c = _interpolate(nodes, _c1_samples(a, nodes, roots, threshold))
    return ResolventCubicCoeffs(*(complex(ci) for ci in c))


def refine_resolvent_roots(a, rc, roots: Optional[Sequence[complex]] = None, threshold: float = 1e-6) -> list[complex]:
    """Roots of the interpolated resolvent, each re-interpolated around itself.

    One interpolation over a wide circle fixes the coefficients only to rounding
    level relative to the largest of them, which blurs clustered roots and small
    roots sitting next to large ones.  Around each rough root ``r`` the same
    cubic is interpolated again in ``z = b0 - r`` on a circle of radius
    ``1e-4 max(1, |r|)``, kept inside half the distance to the nearest other
    root; the local root closest to ``z = 0`` replaces ``r``.
    """
    from .tschirnhaus import _resolvent_degree, resolvent_roots

    rough = resolvent_roots(rc, a)
    if _resolvent_degree(rc, a) == 0:
        return rough
    if roots is None:
        roots = aberth_all_roots(a.polynomial()).roots
    out = []
    for k, r in enumerate(rough):
        radius = LOCAL_RADIUS * max(1.0, abs(r))
        gaps = [abs(r - o) for j, o in enumerate(rough) if j != k and o != r]
        if gaps:
            radius = min(radius, 0.5 * min(gaps))
        offsets = circle_nodes(4, radius)
        local = _interpolate(offsets, _c1_samples(a, r + offsets, roots, threshold))
        zs = np.roots(local[::-1]) if np.any(local) else []
        out.append(complex(r + min(zs, key=abs)) if len(zs) else r)
    return out
