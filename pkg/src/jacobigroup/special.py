"""Scalar special functions: Pochhammer symbols, Laguerre polynomials,
terminating Gauss series and the discrete-series normalization constants.

Gamma ratios are always reduced to finite Pochhammer products.
"""

import math
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "HalfWeight",
    "half_weight",
    "pochhammer",
    "laguerre",
    "hyp2f1_terminating",
    "lambda_coeff",
]


class HalfWeight:
    """The pair ``(k, h)`` with ``h = (2k - 1)/4``."""

    __slots__ = ("k", "h")

    def __init__(self, k):
        self.k = float(k)
        self.h = (2.0 * self.k - 1.0) / 4.0

    def __repr__(self):
        return f"HalfWeight(k={self.k}, h={self.h})"


def half_weight(k):
    return HalfWeight(k)


def pochhammer(x, n):
    """Rising factorial ``x (x+1) ... (x+n-1)``; ``1`` for ``n = 0``."""
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    out = 1.0
    for j in range(int(n)):
        out *= x + j
    return out


def laguerre(n, s, x):
    """Generalized Laguerre polynomial ``L_n^(s)(x)`` from its explicit finite sum.

    The sum is accumulated in exact rational arithmetic on the binary value of
    ``x``: in floating point the alternating terms cancel badly once ``x`` is a
    few units (terms near 1e11 for a result near 1e2 at n = 30, x = 10).
    """
    xq = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)
    for j in range(n + 1):
        total += (-1) ** j * math.comb(n + s, n - j) * power / math.factorial(j)
        power *= xq
    return float(total)


def hyp2f1_terminating(n, b, c, x):
    """``2F1(-n, b; c; x)`` for a non-negative integer ``n``.

    Terms are generated by the forward ratio
    ``t_{j+1} / t_j = (j - n)(b + j) x / ((c + j)(j + 1))``.
    """
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    for j in range(n):
        if c + j == 0:
            raise DomainError(f"c = {c} hits a non-positive integer before the series terminates")
    term = 1.0
    total = 1.0
    for j in range(n):
        term *= (j - n) * (b + j) * x / ((c + j) * (j + 1))
        total += term
    return total


def lambda_coeff(k, c):
    """``[c! (2h)_c]^(-1/2)`` with ``h = (2k - 1)/4``, i.e. ``(2h)_c = (k - 1/2)_c``."""
    if k <= 0.5:
        raise DomainError(f"weight k = {k} must exceed 1/2")
    two_h = k - 0.5
    return (math.factorial(c) * pochhammer(two_h, c)) ** -0.5
