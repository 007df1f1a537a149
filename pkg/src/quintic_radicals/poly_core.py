"""Complex polynomials: evaluation, residuals, deflation, shifting and Vieta checks.

Coefficients are stored in ascending order of power, ``coeffs[k]`` multiplying
``x**k``.  All arithmetic is done on the builtin ``complex`` type; ``Scalar`` is the
single place to swap in a different number type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ZeroPolynomial

Scalar = complex


def root_sort_key(z: complex) -> tuple[float, float]:
    return (z.real, z.imag)


def sort_roots(roots: Iterable[complex]) -> list[complex]:
    """Lexicographic (re, im) order, used for every returned root collection."""
    return sorted((Scalar(r) for r in roots), key=root_sort_key)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with complex coefficients, ascending by power.

    Trailing (highest power) zero coefficients are dropped on construction so that
    ``degree`` is the index of the highest nonzero coefficient.  The zero
    polynomial keeps a single ``0j`` coefficient.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        cs = [Scalar(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0j]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Sequence[complex]) -> Polynomial:
        """Build from the ``c_n, ..., c_0`` order used when writing equations."""
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> Polynomial:
        """Monic polynomial with the given roots (multiplicities respected)."""
        cs = [1 + 0j]
        for r in roots:
            nxt = [0j] * (len(cs) + 1)
            for k, c in enumerate(cs):
                nxt[k + 1] += c
                nxt[k] -= r * c
            cs = nxt
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    def descending(self) -> tuple[complex, ...]:
        return tuple(reversed(self.coeffs))

    def derivative(self) -> Polynomial:
        if self.degree == 0:
            return Polynomial((0j,))
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def __call__(self, x: complex) -> complex:
        return eval_horner(self, x)


@dataclass(frozen=True)
class RootSet:
    """Roots sorted by (re, im) with their relative residuals in parallel."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    @classmethod
    def build(cls, p: Polynomial, roots: Iterable[complex]) -> RootSet:
        ordered = sort_roots(roots)
        return cls(tuple(ordered), tuple(relative_residual(p, r) for r in ordered))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def normalize_monic(p: Polynomial) -> Polynomial:
    """Scale ``p`` so the leading coefficient is exactly 1."""
    if p.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    lead = p.leading
    cs = [c / lead for c in p.coeffs[:-1]]
    cs.append(1 + 0j)
    return Polynomial(tuple(cs))


def eval_horner(p: Polynomial, x: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_with_derivative(p: Polynomial, x: complex) -> tuple[complex, complex]:
    """Return ``(p(x), p'(x))`` in one Horner pass."""
    val = 0j
    der = 0j
    for c in reversed(p.coeffs):
        der = der * x + val
        val = val * x + c
    return val, der


def residual_scale(p: Polynomial, x: complex) -> float:
    """Sum of |a_k| |x|**k, the magnitude of the terms of p(x) before cancellation."""
    ax = abs(x)
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * ax + abs(c)
    return acc


def relative_residual(p: Polynomial, x: complex) -> float:
    """|p(x)| / max(1, sum |a_k| |x|**k).

    The floor of 1 keeps tiny roots from being judged against a vanishing
    denominator.
    """
    val = eval_horner(p, x)
    if val == 0:
        return 0.0
    return abs(val) / max(1.0, residual_scale(p, x))


def deflate(p: Polynomial, r1: complex) -> Polynomial:
    """Quartic cofactor of a monic quintic after removing the factor ``x - r1``.

    With ``x^5 + m x^4 + n x^3 + p x^2 + q x + r`` the cofactor is
    ``x^4 + a3 x^3 + a2 x^2 + a1 x + a0`` where::

        a3 = m + r1
        a2 = n + m r1 + r1^2
        a1 = p + n r1 + m r1^2 + r1^3
        a0 = q + p r1 + n r1^2 + m r1^3 + r1^4

    The printed form of ``a0`` has a token ``m r_3``; only ``m r1^3`` agrees with
    synthetic division, which is what is used here.  The remainder ``p(r1)`` is
    discarded, so the result is defined even when ``r1`` is not a root.
    """
    if p.degree != 5:
        raise ValueError(f"deflate expects a quintic, got degree {p.degree}")
    if p.leading != 1:
        raise ValueError("deflate expects a monic polynomial")
    q, pp, n, m = p.coeffs[1], p.coeffs[2], p.coeffs[3], p.coeffs[4]
    a3 = m + r1
    a2 = n + m * r1 + r1**2
    a1 = pp + n * r1 + m * r1**2 + r1**3
    a0 = q + pp * r1 + n * r1**2 + m * r1**3 + r1**4
    return Polynomial((a0, a1, a2, a3, 1 + 0j))


def synthetic_division(p: Polynomial, r: complex) -> tuple[Polynomial, complex]:
    """Divide by ``x - r`` for any degree; returns ``(quotient, remainder)``."""
    if p.degree < 1:
        raise ValueError("need degree >= 1 to divide by a linear factor")
    out = []
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * r + c
        out.append(acc)
    remainder = out.pop()
    return Polynomial(tuple(reversed(out))), remainder


def shift(p: Polynomial, s: complex) -> Polynomial:
    """Taylor shift: the polynomial ``z -> p(z + s)``."""
    cs = list(p.coeffs)
    n = len(cs)
    # repeated synthetic division by (x - s); O(n^2), exact for integer data
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            cs[k] += s * cs[k + 1]
    return Polynomial(tuple(cs))


def vieta_defect(p: Polynomial, roots: Sequence[complex]) -> float:
    """Largest mismatch between the coefficients of prod(x - r) and monic ``p``.

    The coefficient of ``x**(d-k)`` in the product is ``(-1)**k e_k(roots)``, so
    this is max_k |e_k(roots) - (-1)**k a_(d-k)|.
    """
    if len(roots) != p.degree:
        raise ValueError(f"expected {p.degree} roots, got {len(roots)}")
    expanded = Polynomial.from_roots(roots).coeffs
    # from_roots may have dropped nothing (leading 1), but pad defensively
    expanded = expanded + (0j,) * (len(p.coeffs) - len(expanded))
    return max(
        (abs(expanded[k] - p.coeffs[k]) for k in range(p.degree)),
        default=0.0,
    )


def newton_polish(p: Polynomial, x: complex, steps: int) -> complex:
    """Apply up to ``steps`` Newton updates, stopping early on an exact zero."""
    for _ in range(steps):
        val, der = eval_with_derivative(p, x)
        if val == 0 or der == 0:
            break
        nxt = x - val / der
        if not (math.isfinite(nxt.real) and math.isfinite(nxt.imag)):
            break
        # never accept a step that makes the residual worse
        if abs(eval_horner(p, nxt)) > abs(val):
            break
        x = nxt
    return x
