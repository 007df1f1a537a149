"""Acceptance criteria, each at its stated tolerance, corpus size and time budget.

Every test prints one ``PASS``/``FAIL`` line.  Run with ``pytest -s`` or look
for the lines in the ``-v`` output.
"""

import cmath
import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from quintic_radicals.closed_form import cardano_delta, cubic_roots
from quintic_radicals.identities import check_identities
from quintic_radicals.oracle import aberth_all_roots
from quintic_radicals.poly_core import Polynomial
from quintic_radicals.quintic import solve_quintic
from quintic_radicals.tschirnhaus import QuarticCoeffs, SolverConfig, generate_candidates, solve_quartic

from conftest import disc_sample, match_error


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")

    return emit


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.fixture(scope="module")
def quartic_corpus():
    rng = np.random.default_rng(1)
    corpus = []
    while len(corpus) < 500:
        a = QuarticCoeffs(*disc_sample(rng, 4, 2.0))
        if abs(a.denominator) > 1e-3:
            corpus.append(a)
    oracle = [aberth_all_roots(a.polynomial()).roots for a in corpus]
    return corpus, oracle


def test_1_candidate_coverage(quartic_corpus, report):
    corpus, oracle = quartic_corpus
    t0 = time.perf_counter()
    counts, worst = set(), 0.0
    for a, roots in zip(corpus, oracle):
        cands = generate_candidates(a)
        counts.add(len(cands))
        for r in roots:
            worst = max(worst, min(rel(c.value, r) for c in cands))
    elapsed = time.perf_counter() - t0
    ok = counts == {12} and worst <= 1e-6 and elapsed < 5
    report("1 candidate coverage", ok, f"500 quartics, counts {sorted(counts)}, worst {worst:.2e} <= 1e-6, {elapsed:.2f}s < 5s")
    assert ok


def test_2_quartic_solve_accuracy(quartic_corpus, report):
    corpus, oracle = quartic_corpus
    cfg = SolverConfig(polish_steps=2)
    t0 = time.perf_counter()
    worst = max(match_error(solve_quartic(a.polynomial(), cfg).roots.roots, roots) for a, roots in zip(corpus, oracle))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 5
    report("2 quartic solve accuracy", ok, f"500 quartics, worst {worst:.2e} <= 1e-8, {elapsed:.2f}s < 5s")
    assert ok


def test_3_quintic_pipeline(report):
    rng = np.random.default_rng(3)
    polys = [Polynomial(tuple(disc_sample(rng, 5, 2.0)) + (1,)) for _ in range(200)]
    oracle = [aberth_all_roots(p).roots for p in polys]
    t0 = time.perf_counter()
    sols = [solve_quintic(p) for p in polys]
    elapsed = time.perf_counter() - t0
    match = max(match_error(s.roots, r) for s, r in zip(sols, oracle))
    vieta = max(s.report.vieta_defect for s in sols)
    unity = [cmath.exp(2j * math.pi * k / 5) for k in range(5)]
    e_unity = match_error(solve_quintic(Polynomial.from_descending([1, 0, 0, 0, 0, -1])).roots, unity)
    e_prod = match_error(solve_quintic(Polynomial.from_roots([1, 2, 3, 4, 5])).roots, [1, 2, 3, 4, 5])
    ok = match <= 1e-8 and vieta <= 1e-8 and e_unity <= 1e-10 and e_prod <= 1e-8 and elapsed < 5
    report(
        "3 quintic pipeline", ok,
        f"200 quintics, oracle {match:.2e} <= 1e-8, vieta {vieta:.2e} <= 1e-8, "
        f"x^5-1 {e_unity:.2e} <= 1e-10, prod(x-k) {e_prod:.2e} <= 1e-8, {elapsed:.2f}s < 5s",
    )
    assert ok


def test_4_eliminant_identities(report):
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    checks = []
    while len(checks) < 100:
        a = QuarticCoeffs(*(complex(Fraction(int(rng.integers(-10, 11)), int(rng.integers(1, 11)))) for _ in range(4)))
        if a.is_degenerate():
            continue
        checks.append(check_identities(a))
    elapsed = time.perf_counter() - t0
    worst = {k: max(getattr(c, k) for c in checks) for k in ("c3_rel", "c1_rel", "B2_rel", "B0_rel")}
    failing = sum(max(c.c3_rel, c.c1_rel, c.B2_rel, c.B0_rel) > 1e-9 for c in checks)
    ok = max(worst.values()) <= 1e-9 and elapsed < 10
    detail = ", ".join(f"{k} {v:.2e}" for k, v in worst.items())
    report("4 eliminant identities", ok, f"100 rational quartics, {detail} (all <= 1e-9), {failing} over, {elapsed:.2f}s < 10s")
    assert ok


def test_5_degeneracy(report):
    rep4 = solve_quartic(Polynomial.from_descending([1, 0, 0, 0, -1]))
    e4 = match_error(rep4.roots.roots, [1, -1, 1j, -1j])
    sol5 = solve_quintic(Polynomial.from_descending([1, 0, 0, 0, 0, 0]))
    e5 = max(abs(r) for r in sol5.roots)
    shifted = rep4.stages[0].shift != 0 and sol5.report.stages[0].shift != 0
    ok = e4 <= 1e-10 and e5 <= 1e-10 and shifted
    report("5 degeneracy handling", ok, f"x^4-1 {e4:.2e}, x^5 {e5:.2e} (<= 1e-10), shift path used: {shifted}")
    assert ok


def test_6_branch_invariance(report):
    rng = np.random.default_rng(6)
    worst, n = 0.0, 0
    while n < 200:
        b0, b1, b2, y = disc_sample(rng, 4, 2.0)
        if min(abs(cardano_delta(b0, b1, b2, y, k).delta) for k in range(3)) <= 1e-6:
            continue
        base = cubic_roots(b0, b1, b2, y, 0)
        for k in (1, 2):
            worst = max(worst, match_error(cubic_roots(b0, b1, b2, y, k), base))
        n += 1
    ok = worst <= 1e-9
    report("6 branch invariance", ok, f"200 cubics, worst {worst:.2e} <= 1e-9")
    assert ok


def _cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "quintic_radicals", "solve", *args],
        capture_output=True, text=True, check=False,
    )
    return proc.returncode, proc.stdout


def test_7_cli_contract(report):
    problems = []
    code, out = _cli("--coeffs", "1,0,0,0,0,-1", "--format", "json")
    doc = json.loads(out)
    if code != 0 or list(doc) != ["degree", "method", "tolerance", "roots", "vieta_defect"]:
        problems.append("x^5-1 exit/keys")
    if any(list(r) != ["re", "im", "residual"] or r["residual"] > 1e-10 for r in doc["roots"]) or len(doc["roots"]) != 5:
        problems.append("x^5-1 roots")
    if [(r["re"], r["im"]) for r in doc["roots"]] != sorted((r["re"], r["im"]) for r in doc["roots"]):
        problems.append("x^5-1 order")

    code, out = _cli("--coeffs", "1,1,1,1,1", "--trace", "--format", "json")
    doc = json.loads(out)
    cands = doc.get("candidates", [])
    if code != 0 or list(doc)[-1] != "candidates" or len(cands) != 12 or sum(c["accepted"] for c in cands) != 4:
        problems.append("cyclotomic trace")
    code, text = _cli("--coeffs", "1,1,1,1,1", "--trace")
    lines = [ln for ln in text.splitlines() if ln.strip().startswith("x[")]
    if code != 0 or len(lines) != 12 or sum(ln.endswith("accepted") for ln in lines) != 4:
        problems.append("cyclotomic trace text")

    code, out = _cli("--coeffs", "1,0,0,0,-1", "--format", "json")
    roots = [complex(r["re"], r["im"]) for r in json.loads(out)["roots"]]
    if code != 0 or match_error(roots, [1, -1, 1j, -1j]) > 1e-10:
        problems.append("x^4-1")

    if _cli("--coeffs", "1,bogus")[0] != 2:
        problems.append("usage exit code")
    ok = not problems
    report("7 CLI contract", ok, "three examples, exit codes and JSON key order" + (f"; broken: {problems}" if problems else ""))
    assert ok
