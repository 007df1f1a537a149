"""Radical formulas: the biquadratic ``y^4 + B2 y^2 + B0`` and Cardano's cubic.

The cubic solved here is ``x^3 + b2 x^2 + b1 x + (b0 + y)``, i.e. the cubic
Tschirnhaus transform set equal to zero for a fixed value of ``y``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateCubic

SQRT3 = math.sqrt(3.0)
OMEGA = cmath.exp(2j * math.pi / 3)
DELTA_UNDERFLOW = 1e-300


@dataclass(frozen=True)
class BiquadraticResolvent:
    B2: complex
    B0: complex


@dataclass(frozen=True)
class CardanoDiscriminant:
    delta: complex
    branch: int


def cbrt(z: complex) -> complex:
    """Principal complex cube root; ``cbrt(0) == 0``."""
    z = complex(z)
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3)


def monic_quadratic_roots(B2: complex, B0: complex) -> tuple[complex, complex]:
    """Roots ``((-B2 + s)/2, (-B2 - s)/2)`` of ``w^2 + B2 w + B0``, ``s`` principal.

    The smaller root is recovered from the product ``B0`` so it keeps full
    relative accuracy.
    """
    s = cmath.sqrt(B2 * B2 - 4 * B0)
    w1 = (-B2 + s) / 2
    w3 = (-B2 - s) / 2
    if abs(w1) >= abs(w3):
        if w1 != 0:
            w3 = B0 / w1
    else:
        w1 = B0 / w3
    return w1, w3


def biquadratic_roots(res: BiquadraticResolvent) -> tuple[complex, complex, complex, complex]:
    """Four roots ``(y1, -y1, y3, -y3)`` of ``y^4 + B2 y^2 + B0``.

    ``y1 = 1/2 sqrt(-2 B2 + 2 sqrt(B2^2 - 4 B0))`` and ``y3`` takes the minus sign
    on the inner radical; all square roots are principal.
    """
    w1, w3 = monic_quadratic_roots(complex(res.B2), complex(res.B0))
    y1 = cmath.sqrt(w1)
    y3 = cmath.sqrt(w3)
    return (y1, -y1, y3, -y3)


def cardano_delta(b0: complex, b1: complex, b2: complex, y: complex, branch: int = 0) -> CardanoDiscriminant:
    """Cube root ``delta`` used by the Cardano formulas for the transformed cubic.

    The radicand is ``36 b1 b2 - 108 (y + b0) - 8 b2^3 + 12 sqrt(D)`` with
    ``D = 12 b1^3 - 3 b1^2 b2^2 - 54 b1 b2 (y + b0) + 81 (y + b0)^2 + 12 (y + b0) b2^3``.
    Both pieces are evaluated through the depressed cubic ``t^3 + P t + Q``
    (``x = t - b2/3``), where they read ``-108 Q`` and ``81 Q^2 + 12 P^3``; the
    expanded form cancels catastrophically near a multiple root.

    The principal square root is taken unless it cancels against the rational
    part, in which case the opposite sign is used; both signs produce the same
    three roots, only the conditioning differs.  ``branch`` selects which of the
    three cube roots is returned, rotating the principal one by
    ``exp(2 pi i branch / 3)``.
    """
    if branch not in (0, 1, 2):
        raise ValueError(f"branch must be 0, 1 or 2, got {branch}")
    P, Q = _depressed(b0, b1, b2, y)
    rational = -108 * Q
    root = 12 * cmath.sqrt(81 * Q * Q + 12 * P**3)
    radicand = rational + root
    alt = rational - root
    if abs(alt) > abs(radicand):
        radicand = alt
    delta = cbrt(radicand) * OMEGA**branch
    return CardanoDiscriminant(delta=delta, branch=branch)


def _depressed(b0, b1, b2, y):
    b0, b1, b2, y = complex(b0), complex(b1), complex(b2), complex(y)
    s = b2 / 3
    P = b1 - b2 * s
    Q = (b0 + y) - s * (b1 - 2 * s * s)
    return P, Q


def cubic_roots(b0: complex, b1: complex, b2: complex, y: complex = 0j, branch: int = 0) -> tuple[complex, complex, complex]:
    """Roots of ``x^3 + b2 x^2 + b1 x + (b0 + y) = 0`` by Cardano's formulas.

    With ``T = (b1 - b2^2/3) / delta``::

        x1 = delta/6 - 2 T - b2/3
        x2 = -delta/12 + T - b2/3 + i sqrt(3) (delta/12 + T)
        x3 = -delta/12 + T - b2/3 - i sqrt(3) (delta/12 + T)

    Raises DegenerateCubic when ``delta`` underflows, which only happens for a
    triple root.
    """
    delta = cardano_delta(b0, b1, b2, y, branch).delta
    if abs(delta) < DELTA_UNDERFLOW:
        raise DegenerateCubic("Cardano delta vanishes (triple root)")
    t = _depressed(b0, b1, b2, y)[0] / delta
    shift = b2 / 3
    x1 = delta / 6 - 2 * t - shift
    rot = 1j * SQRT3 * (delta / 12 + t)
    base = -delta / 12 + t - shift
    return (x1, base + rot, base - rot)
