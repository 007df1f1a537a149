import cmath
import math
from fractions import Fraction

import pytest
import sympy as sp

from quintic_radicals.errors import DegenerateQuartic, DegenerateResolvent, SelectionFailed
from quintic_radicals.oracle import aberth_all_roots, eliminant_coeffs
from quintic_radicals.poly_core import Polynomial, relative_residual, shift
from quintic_radicals.tschirnhaus import (
    CandidateRoot,
    QuarticCoeffs,
    ResolventCubicCoeffs,
    SolverConfig,
    TschirnhausCubic,
    compute_B0,
    compute_B2,
    compute_b0,
    compute_b2,
    generate_candidates,
    resolvent_cubic_coeffs,
    select_quartic_roots,
    solve_quartic,
    tschirnhaus_transform,
)

from conftest import disc_sample, match_error

FIFTH = [cmath.exp(2j * math.pi * k / 5) for k in range(1, 5)]
X, Y = sp.symbols("x y")


def random_quartic(rng, radius=2.0):
    while True:
        a = QuarticCoeffs(*disc_sample(rng, 4, radius))
        if abs(a.denominator) > 1e-3:
            return a


def rational_quartic(rng):
    while True:
        a = QuarticCoeffs(*(Fraction(int(rng.integers(-10, 11)), int(rng.integers(1, 11))) for _ in range(4)))
        if a.denominator != 0:
            return a


def exact_eliminant(a, b0, b2):
    """y-coefficients (ascending) of Res_x(quartic, y + x^3 + b2 x^2 + b0)."""
    q = X**4 + sum(sp.Rational(c) * X**k for k, c in enumerate((a.a0, a.a1, a.a2, a.a3)))
    g = Y + X**3 + sp.Rational(b2) * X**2 + sp.Rational(b0)
    r = sp.Poly(sp.resultant(q, g, X), Y)
    return [r.coeff_monomial(Y**k) for k in range(5)]


# --- transform coefficients ------------------------------------------------

def test_compute_b2_examples():
    assert compute_b2(QuarticCoeffs(5, 0, -1, 0), 0, 0) == 0
    assert compute_b2(QuarticCoeffs(1, 1, 1, 1), 0, 0) == -1
    with pytest.raises(DegenerateQuartic):
        compute_b2(QuarticCoeffs(0, 0, 0, 0), 1)


def test_resolvent_b03_examples():
    assert resolvent_cubic_coeffs(QuarticCoeffs(1, 1, 1, 1)).b03 == pytest.approx(-40)
    assert resolvent_cubic_coeffs(QuarticCoeffs(0, 0, -1, 0)).b03 == 0


@pytest.mark.parametrize(
    "rc, allowed",
    [
        (ResolventCubicCoeffs(-6, 11, -6, 1), (1, 2, 3)),
        (ResolventCubicCoeffs(-8, 0, 0, 1), (2,)),
    ],
)
def test_compute_b0_examples(rc, allowed):
    b0 = compute_b0(rc)
    assert min(abs(b0 - t) for t in allowed) < 1e-10


def test_compute_b0_principal_is_two():
    assert abs(compute_b0(ResolventCubicCoeffs(-8, 0, 0, 1)) - 2) < 1e-12


def test_compute_b0_degenerate():
    with pytest.raises(DegenerateResolvent):
        compute_b0(ResolventCubicCoeffs(-1, 0, 1, 0))


@pytest.mark.parametrize("fn, expected", [(compute_B2, 6), (compute_B0, 1)])
def test_biquadratic_coefficient_examples(fn, expected):
    zero = QuarticCoeffs(0, 0, 0, 0)
    assert fn(zero, TschirnhausCubic(1, 0, 0)) == expected
    assert fn(zero, TschirnhausCubic(0, 0, 0)) == 0


def test_B2_B0_exact_against_resultant(rng):
    # arbitrary rational transform, not just the one with b1 = 0
    for _ in range(5):
        a = rational_quartic(rng)
        b0, b2 = (Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))) for _ in range(2))
        c = exact_eliminant(a, b0, b2)
        t = TschirnhausCubic(b0, 0, b2)
        assert compute_B2(a, t) == c[2]
        assert compute_B0(a, t) == c[0]


def test_b2_kills_cubic_term_exactly(rng):
    for _ in range(5):
        a = rational_quartic(rng)
        b0 = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))
        c = exact_eliminant(a, b0, compute_b2(a, b0, 0))
        assert c[3] == 0


def test_resolvent_cubic_exact_against_resultant(rng):
    # the linear eliminant coefficient is a cubic in b0; five exact samples pin it down
    for _ in range(4):
        a = rational_quartic(rng)
        rc = resolvent_cubic_coeffs(a)
        for b0 in (Fraction(k, 3) for k in (-2, -1, 0, 1, 2)):
            c = exact_eliminant(a, b0, compute_b2(a, b0, 0))
            assert rc.b00 + rc.b01 * b0 + rc.b02 * b0**2 + rc.b03 * b0**3 == c[1]


# --- candidates and selection ---------------------------------------------

def test_cyclotomic_candidates():
    cands = generate_candidates(QuarticCoeffs(1, 1, 1, 1))
    assert len(cands) == 12
    assert {(c.m, c.n) for c in cands} == {(m, n) for m in (1, 2, 3) for n in (1, 2, 3, 4)}
    for r in FIFTH:
        assert min(abs(c.value - r) for c in cands) < 1e-8


def test_generate_candidates_degenerate():
    with pytest.raises(DegenerateQuartic):
        generate_candidates(QuarticCoeffs(-1, 0, 0, 0))


def test_select_cyclotomic():
    p = Polynomial((1, 1, 1, 1, 1))
    sel = select_quartic_roots(p, generate_candidates(QuarticCoeffs(1, 1, 1, 1)), 1e-6)
    assert match_error(sel.roots.roots, FIFTH) < 1e-8


def test_select_exact_candidates_among_decoys():
    p = Polynomial.from_descending([1, 0, -5, 0, 4])
    values = [0.5, 1, 3j, -1, 2.5, 2, 7, -2, -0.3 + 1j, 1.5]
    cands = [CandidateRoot(v, 1, k, relative_residual(p, v)) for k, v in enumerate(values)]
    sel = select_quartic_roots(p, cands, 1e-12)
    assert sel.roots.roots == (-2, -1, 1, 2)
    assert not sel.low_confidence


def test_select_garbage_fails():
    p = Polynomial.from_descending([1, 0, -5, 0, 4])
    cands = [CandidateRoot(10 + k, 1, k, relative_residual(p, 10 + k)) for k in range(12)]
    with pytest.raises(SelectionFailed):
        select_quartic_roots(p, cands, 1e-12)


# --- solve ----------------------------------------------------------------

@pytest.mark.parametrize(
    "desc, expected",
    [
        ([1, 0, 0, 0, -1], [1, -1, 1j, -1j]),
        ([1, 1, 1, 1, 1], FIFTH),
        ([1, -10, 35, -50, 24], [1, 2, 3, 4]),
    ],
)
def test_solve_quartic_examples(desc, expected):
    rep = solve_quartic(Polynomial.from_descending(desc))
    assert max(abs(r - e) for r, e in zip(rep.roots.roots, sorted(expected, key=lambda z: (z.real, z.imag)))) < 1e-10


def test_x4_minus_1_uses_shift():
    rep = solve_quartic(Polynomial.from_descending([1, 0, 0, 0, -1]))
    assert rep.stages[0].shift != 0


def test_solve_quartic_rejects_other_degrees():
    with pytest.raises(ValueError):
        solve_quartic(Polynomial.from_descending([1, 0, 1]))


def test_solve_matches_oracle(rng):
    for _ in range(100):
        p = random_quartic(rng).polynomial()
        rep = solve_quartic(p)
        assert match_error(rep.roots.roots, aberth_all_roots(p).roots) < 1e-8
        assert rep.vieta_defect < 1e-8


def test_transform_substitution(rng):
    for _ in range(100):
        a = random_quartic(rng)
        t, res = tschirnhaus_transform(a)
        for x in aberth_all_roots(a.polynomial()).roots:
            y = -(x**3 + t.b2 * x**2 + t.b1 * x + t.b0)
            scale = 1 + abs(res.B2) * abs(y) ** 2 + abs(res.B0) + abs(y) ** 4
            assert abs(y**4 + res.B2 * y**2 + res.B0) / scale < 1e-9


def test_eliminant_vanishing(rng):
    for _ in range(100):
        a = random_quartic(rng)
        t, res = tschirnhaus_transform(a)
        el = eliminant_coeffs(a, t)
        scale = 1 + abs(res.B2) + abs(res.B0)
        assert abs(el.c3) <= 1e-9 * scale
        assert abs(el.c1) <= 1e-9 * scale


def test_shift_correctness(rng):
    for _ in range(50):
        p = random_quartic(rng).polynomial()
        s = disc_sample(rng, 1, 1.0)[0]
        q = shift(p, s)
        if QuarticCoeffs.from_polynomial(q).is_degenerate(1e-3):
            continue
        direct = solve_quartic(p).roots.roots
        via = [z + s for z in solve_quartic(q).roots.roots]
        assert match_error(via, direct) < 1e-8


def test_elimination_source_agrees(rng):
    cfg = SolverConfig(coefficient_source="elimination")
    for _ in range(20):
        p = random_quartic(rng).polynomial()
        rep = solve_quartic(p, cfg)
        assert match_error(rep.roots.roots, solve_quartic(p).roots.roots) < 1e-8


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(tol=0)
    with pytest.raises(ValueError):
        SolverConfig(coefficient_source="guess")
