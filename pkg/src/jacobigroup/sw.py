"""Schrödinger-Weil representation on the truncated Fock basis and its
holomorphic model on polynomials ``f_n(alpha, w)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from .errors import DomainError
from .operators import TruncatedOperator, adjoint, identity, max_abs, sw_basis
from .polynomials import BivarPoly

__all__ = [
    "SWIndex",
    "SWGenerators",
    "DEFAULT_M",
    "SW_DIFFERENTIAL_OPERATORS",
    "build_ladder",
    "build_sw_generators",
    "sw_algebra_realization",
    "f_poly",
    "t0_transform",
    "generating_residual",
    "heat_pde_residual",
    "pi0_apply",
    "pi0_matrix",
    "intertwine_check_sw",
]

DEFAULT_M = 1.0 / (2.0 * math.pi)  # mu = 1, hbar = 1/2

# Position-space form of the six basis generators (documentation only; the Fock
# matrices below are the working realization).
SW_DIFFERENTIAL_OPERATORS = {
    "P": "d/dq",
    "Q": "2i mu q",
    "R": "i mu",
    "F": "i mu q^2",
    "G": "(i / (4 mu)) d^2/dq^2",
    "H": "q d/dq + 1/2",
}


@dataclass(frozen=True)
class SWIndex:
    """Central-character index ``m`` with ``mu = 2 pi m`` and ``hbar = 1/(2 mu^2)``."""

    m: float = DEFAULT_M

    def __post_init__(self):
        if self.m == 0 or not math.isfinite(self.m):
            raise DomainError("index m must be finite and nonzero")

    @property
    def mu(self) -> float:
        return 2.0 * math.pi * self.m

    @property
    def sigma(self) -> int:
        return 1 if self.mu > 0 else -1

    @property
    def hbar(self) -> float:
        return 1.0 / (2.0 * self.mu**2)


@dataclass(frozen=True)
class SWGenerators:
    a: TruncatedOperator
    a_dag: TruncatedOperator
    K0: TruncatedOperator
    K_plus: TruncatedOperator
    K_minus: TruncatedOperator
    W0: TruncatedOperator
    W_plus: TruncatedOperator
    W_minus: TruncatedOperator
    q: TruncatedOperator
    p: TruncatedOperator
    N: TruncatedOperator
    index: SWIndex

    @property
    def basis(self):
        return self.a.basis


def build_ladder(N: int):
    """Annihilation and creation matrices on ``phi_0 .. phi_N``."""
    basis = sw_basis(N)
    a = np.diag(np.sqrt(np.arange(1, N + 1, dtype=float)), 1)
    a = TruncatedOperator(basis, a, -1)
    return a, adjoint(a)


@lru_cache(maxsize=32)
def build_sw_generators(N: int, idx: SWIndex = SWIndex()) -> SWGenerators:
    if N < 2:
        raise DomainError("Fock cutoff must be at least 2")
    a, ad = build_ladder(N)
    num = ad @ a
    K_minus = a @ a / 2
    K_plus = ad @ ad / 2
    K0 = num / 2 + 0.25
    s = math.sqrt(idx.hbar / 2)
    q = s * (a + ad)
    p = -1j * s * (a - ad)
    return SWGenerators(
        a=a,
        a_dag=ad,
        K0=K0,
        K_plus=K_plus,
        K_minus=K_minus,
        W0=K0 - num / 2 - 0.25,
        W_plus=K_plus - ad @ ad / 2,
        W_minus=K_minus - a @ a / 2,
        q=q,
        p=p,
        N=num,
        index=idx,
    )


def sw_algebra_realization(gens: SWGenerators) -> dict:
    """Images of the real basis ``P, Q, R, F, G, H`` as Fock matrices.

    Obtained by inverting the definitions of ``a``, ``a^dagger``, ``K_{0,+,-}``
    in terms of the real generators.
    """
    idx = gens.index
    rt = math.sqrt(abs(idx.mu))
    isg = 1j * idx.sigma
    Kp, Km, K0 = gens.K_plus, gens.K_minus, gens.K0
    return {
        "P": rt * (gens.a - gens.a_dag),
        "Q": isg * rt * (gens.a + gens.a_dag),
        "R": 1j * idx.mu * identity(gens.basis),
        "F": isg / 2 * (Kp + Km + 2 * K0),
        "G": isg / 2 * (Kp + Km - 2 * K0),
        "H": Km - Kp,
    }


# -- holomorphic model --------------------------------------------------------

def f_poly(n: int, exact: bool = False) -> BivarPoly:
    """``f_n(alpha, w) = sqrt(n!) sum_j alpha^(n-2j) (w/2)^j / ((n-2j)! j!)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if exact:
        pref = sympy.sqrt(sympy.factorial(n))
        terms = {
            (n - 2 * j, j): pref * sympy.Rational(1, math.factorial(n - 2 * j) * math.factorial(j) * 2**j)
            for j in range(n // 2 + 1)
        }
    else:
        pref = math.sqrt(math.factorial(n))
        terms = {
            (n - 2 * j, j): pref / (math.factorial(n - 2 * j) * math.factorial(j) * 2.0**j)
            for j in range(n // 2 + 1)
        }
    return BivarPoly(terms, ("alpha", "w"))


def t0_transform(coeffs) -> BivarPoly:
    """Image ``sum_n c_n f_n`` of the Fock vector with coefficients ``c_n``."""
    out = BivarPoly({}, ("alpha", "w"))
    for n, c in enumerate(coeffs):
        if c != 0:
            out = out + c * f_poly(n)
    return out


def generating_residual(z: complex, alpha: complex, w: complex, terms: int) -> float:
    """``|exp(alpha z + w z^2 / 2) - sum_{n < terms} z^n f_n(alpha, w) / sqrt(n!)|``."""
    if abs(w) >= 1:
        raise DomainError("|w| must be < 1")
    total = 0j
    for n in range(terms):
        total += z**n * f_poly(n)(alpha, w) / math.sqrt(math.factorial(n))
    return abs(np.exp(alpha * z + 0.5 * w * z * z) - total)


def heat_pde_residual(f: BivarPoly) -> BivarPoly:
    """``d^2 f / d alpha^2 - 2 d f / d w``."""
    if f.variables != ("alpha", "w"):
        raise ValueError(f"expected variables ('alpha', 'w'), got {f.variables}")
    return f.diff(0, 2) - 2 * f.diff(1)


PI0_GENERATORS = ("a", "a_dag", "K0", "K_plus", "K_minus")


def pi0_apply(X: str, f: BivarPoly) -> BivarPoly:
    """Differential-operator image of a generator acting on ``f(alpha, w)``.

    ``a = d/da``, ``a^dagger = alpha + w d/dalpha``, ``K_- = d/dw``,
    ``K_0 = 1/4 + (alpha/2) d/dalpha + w d/dw``,
    ``K_+ = alpha^2/2 + w/2 + alpha w d/dalpha + w^2 d/dw``.
    """
    if f.variables != ("alpha", "w"):
        raise ValueError(f"expected variables ('alpha', 'w'), got {f.variables}")
    da, dw = f.diff(0), f.diff(1)
    if X == "a":
        return da
    if X == "a_dag":
        return f.shift(1, 0) + da.shift(0, 1)
    if X == "K_minus":
        return dw
    if X == "K0":
        return 0.25 * f + da.shift(1, 0, 0.5) + dw.shift(0, 1)
    if X == "K_plus":
        return f.shift(2, 0, 0.5) + f.shift(0, 1, 0.5) + da.shift(1, 1) + dw.shift(0, 2)
    raise ValueError(f"unknown generator {X!r}; expected one of {PI0_GENERATORS}")


def _expand_in_f(g: BivarPoly, nmax: int):
    """Coefficients ``c_i`` (``i <= nmax``) with ``g = sum c_i f_i`` plus the residual.

    A heat-equation polynomial is fixed by its ``w = 0`` restriction, and
    ``f_i(alpha, 0) = alpha^i / sqrt(i!)``.
    """
    c = np.zeros(nmax + 1, dtype=complex)
    rest = g
    for i in range(g.degree(), -1, -1):
        ci = g.coeff(i, 0) * math.sqrt(math.factorial(i))
        if ci == 0:
            continue
        rest = rest - ci * f_poly(i)
        if i <= nmax:
            c[i] = ci
    return c, rest


def pi0_matrix(X: str, N: int):
    """Matrix of ``pi0_apply(X, .)`` in the basis ``f_0 .. f_N``.

    Returns the matrix and the largest coefficient left over after expanding
    each image in the ``f`` basis (zero up to round-off when the image lies in
    their span).
    """
    M = np.zeros((N + 1, N + 1), dtype=complex)
    leftover = 0.0
    for j in range(N + 1):
        col, rest = _expand_in_f(pi0_apply(X, f_poly(j)), N)
        M[:, j] = col
        leftover = max(leftover, rest.max_abs_coeff())
    return M, leftover


def intertwine_check_sw(N: int) -> dict:
    """Largest deviation between the polynomial-model matrices and the Fock matrices.

    Returns ``{generator: deviation}`` plus ``"max"``; deviations include the
    expansion leftover.
    """
    if N < 4:
        raise DomainError("need N >= 4")
    gens = build_sw_generators(N)
    out = {}
    for X in PI0_GENERATORS:
        M, leftover = pi0_matrix(X, N)
        out[X] = max(max_abs(M - getattr(gens, X).matrix), leftover)
    out["max"] = max(out.values())
    return out
