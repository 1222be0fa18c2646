"""Positive discrete series on the two-index basis ``phi_(n', n)``.

Matrix elements follow from acting with the holomorphic differential operators
on the normalized monomials ``D_(n'n) z^n' zeta^n``:

* ``a``: ``(n', n) -> (n'-1, n)`` with ``sqrt(n')``
* ``K_0``: diagonal ``k/2 + n'/2 + n``
* ``K_-``: ``(n', n) -> (n'-2, n)`` with ``sqrt(n'(n'-1))/2`` and
  ``(n', n) -> (n', n-1)`` with ``sqrt(n (k - 3/2 + n))``

``a^dagger`` and ``K_+`` are the adjoints; the ``W`` operators subtract the
oscillator parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .operators import (
    TruncatedOperator,
    adjoint,
    ds_basis,
    interior_indices,
    max_abs,
)
from .polynomials import BivarPoly
from .special import pochhammer

__all__ = [
    "DSWeight",
    "DSGenerators",
    "build_ds_generators",
    "casimir_value",
    "ds_casimir",
    "ds_poly",
    "sigma_k_apply",
    "sigma_k_matrix",
    "intertwine_check_ds",
]


@dataclass(frozen=True)
class DSWeight:
    k: float

    def __post_init__(self):
        if not self.k > 0.5:
            raise DomainError(f"weight k = {self.k} must exceed 1/2")

    @property
    def square_integrable(self) -> bool:
        """Whether the holomorphic model is an L^2 space (``k > 3/2``)."""
        return self.k > 1.5


@dataclass(frozen=True)
class DSGenerators:
    a: TruncatedOperator
    a_dag: TruncatedOperator
    K0: TruncatedOperator
    K_plus: TruncatedOperator
    K_minus: TruncatedOperator
    W0: TruncatedOperator
    W_plus: TruncatedOperator
    W_minus: TruncatedOperator
    k: float

    @property
    def basis(self):
        return self.a.basis


def _weight(k) -> float:
    return DSWeight(k.k if isinstance(k, DSWeight) else float(k)).k


@lru_cache(maxsize=32)
def _build(k: float, D: int) -> DSGenerators:
    basis = ds_basis(k, D)
    dim = basis.dim
    a = np.zeros((dim, dim))
    Km = np.zeros((dim, dim))
    K0 = np.zeros(dim)
    for col, (p, n) in enumerate(basis.labels):
        K0[col] = k / 2 + p / 2 + n
        if p >= 1:
            a[basis.index((p - 1, n)), col] = math.sqrt(p)
        if p >= 2:
            Km[basis.index((p - 2, n)), col] = math.sqrt(p * (p - 1)) / 2
        if n >= 1:
            Km[basis.index((p, n - 1)), col] = math.sqrt(n * (k - 1.5 + n))
    a = TruncatedOperator(basis, a, -1)
    Km = TruncatedOperator(basis, Km, -2)
    K0 = TruncatedOperator(basis, np.diag(K0), 0)
    ad = adjoint(a)
    Kp = adjoint(Km)
    return DSGenerators(
        a=a,
        a_dag=ad,
        K0=K0,
        K_plus=Kp,
        K_minus=Km,
        W0=K0 - (ad @ a) / 2 - 0.25,
        W_plus=Kp - (ad @ ad) / 2,
        W_minus=Km - (a @ a) / 2,
        k=k,
    )


def build_ds_generators(k, D: int) -> DSGenerators:
    if D < 2:
        raise DomainError("level cutoff D must be at least 2")
    return _build(_weight(k), int(D))


def casimir_value(k) -> float:
    """``(k - 1/2)(k - 5/2)/4``."""
    return (k - 0.5) * (k - 2.5) / 4


def ds_casimir(k, D: int):
    """Casimir ``W_0^2 - (W_+ W_- + W_- W_+)/2`` and its deviation from the scalar.

    Returns ``(C, expected, max_deviation)``; the deviation is measured on states of
    grade ``<= 2D - 2``.
    """
    k = _weight(k)
    if D < 3:
        raise DomainError("need D >= 3")
    g = build_ds_generators(k, D)
    C = g.W0 @ g.W0 - (g.W_plus @ g.W_minus + g.W_minus @ g.W_plus) / 2
    expected = casimir_value(k)
    idx = interior_indices(C.basis, 2)
    dev = max_abs(C.block(idx) - expected * np.eye(len(idx)))
    return C, expected, dev


def ds_norm(k, n_prime: int, n: int) -> float:
    """``(n! n'!)^(-1/2) ((k - 1/2)_n)^(1/2)``."""
    return math.sqrt(pochhammer(k - 0.5, n) / (math.factorial(n) * math.factorial(n_prime)))


def ds_poly(k, n_prime: int, n: int) -> BivarPoly:
    k = _weight(k)
    return BivarPoly.monomial(n_prime, n, ds_norm(k, n_prime, n), ("z", "zeta"))


DS_GENERATORS = ("a", "a_dag", "K0", "K_plus", "K_minus")


def sigma_k_apply(k, X: str, f: BivarPoly) -> BivarPoly:
    """Holomorphic differential operator of generator ``X`` acting on ``f(z, zeta)``."""
    k = _weight(k)
    if f.variables != ("z", "zeta"):
        raise ValueError(f"expected variables ('z', 'zeta'), got {f.variables}")
    if X == "a":
        return f.diff(0)
    if X == "a_dag":
        return f.shift(1, 0)
    if X == "K0":
        return (k / 2) * f + f.diff(0).shift(1, 0, 0.5) + f.diff(1).shift(0, 1)
    if X == "K_minus":
        return 0.5 * f.diff(0, 2) + f.diff(1)
    if X == "K_plus":
        return f.shift(2, 0, 0.5) + f.shift(0, 1, k - 0.5) + f.diff(1).shift(0, 2)
    raise ValueError(f"unknown generator {X!r}; expected one of {DS_GENERATORS}")


def sigma_k_matrix(k, X: str, D: int) -> np.ndarray:
    """Matrix of ``sigma_k_apply(k, X, .)`` over the normalized monomials of grade ``<= 2D``."""
    k = _weight(k)
    basis = ds_basis(k, D)
    M = np.zeros((basis.dim, basis.dim), dtype=complex)
    for col, (p, n) in enumerate(basis.labels):
        image = sigma_k_apply(k, X, ds_poly(k, p, n))
        for (i, j), c in image.terms.items():
            if (i, j) in basis:
                M[basis.index((i, j)), col] = c / ds_norm(k, i, j)
    return M


def intertwine_check_ds(k, D: int) -> dict:
    k = _weight(k)
    g = build_ds_generators(k, D)
    out = {X: max_abs(sigma_k_matrix(k, X, D) - getattr(g, X).matrix) for X in DS_GENERATORS}
    out["max"] = max(out.values())
    return out


def lowest_weight_residuals(g: DSGenerators) -> dict:
    """Residuals of ``a phi_0 = 0``, ``K_- phi_0 = 0``, ``2 K_0 phi_0 = k phi_0``."""
    e0 = np.zeros(g.basis.dim)
    e0[0] = 1.0
    return {
        "a": max_abs(g.a.matrix @ e0),
        "K_minus": max_abs(g.K_minus.matrix @ e0),
        "K0": max_abs(2 * g.K0.matrix @ e0 - g.k * e0),
    }
