"""Quadrature covariances, the squeezing region and Mandel's Q parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, VacuumError
from .operators import Basis, sw_basis
from .squeezing import SqueezeParams, expectation_poly, generators_for, squeezed_state
from .sw import SWIndex

__all__ = [
    "CovarianceTriple",
    "SqueezeDisk",
    "u_plus_minus",
    "covariance_closed",
    "covariance_numeric",
    "squeezing_disk",
    "is_squeezed",
    "mandel_q_closed",
    "mandel_q_numeric",
    "mandel_zero_radius",
]


@dataclass(frozen=True)
class CovarianceTriple:
    sigma_qq: float
    sigma_pp: float
    sigma_pq: float
    hbar: float
    n0: float

    @property
    def schrodinger_gap(self) -> float:
        """``sigma_qq sigma_pp - sigma_pq^2 - hbar^2/4`` (non-negative for any state)."""
        return self.sigma_qq * self.sigma_pp - self.sigma_pq**2 - self.hbar**2 / 4

    @property
    def product_check(self) -> float:
        """``sigma_qq sigma_pp - sigma_pq^2 - n0^2 hbar^2`` (zero for the closed forms)."""
        return self.sigma_qq * self.sigma_pp - self.sigma_pq**2 - (self.n0 * self.hbar) ** 2


@dataclass(frozen=True)
class SqueezeDisk:
    """Open disk ``|w - center| < radius``."""

    center: complex
    radius: float

    def __contains__(self, w) -> bool:
        return abs(complex(w) - self.center) < self.radius

    def boundary(self, count: int = 64) -> np.ndarray:
        t = 2 * np.pi * np.arange(count) / count
        return self.center + self.radius * np.exp(1j * t)


def _check_w(w):
    w = complex(w)
    if not abs(w) < 1:
        raise DomainError(f"|w| = {abs(w)} must be < 1")
    return w


def u_plus_minus(w):
    """``u_pm = r^2 |1 pm w|^2``."""
    w = _check_w(w)
    r2 = 1.0 / (1.0 - abs(w) ** 2)
    return r2 * abs(1 + w) ** 2, r2 * abs(1 - w) ** 2


def covariance_closed(n: int, w, hbar: float = SWIndex().hbar) -> CovarianceTriple:
    if n < 0:
        raise DomainError("n must be non-negative")
    w = _check_w(w)
    n0 = n + 0.5
    up, um = u_plus_minus(w)
    r2 = 1.0 / (1.0 - abs(w) ** 2)
    return CovarianceTriple(n0 * hbar * up, n0 * hbar * um, 2 * n0 * hbar * r2 * w.imag, hbar, n0)


def covariance_numeric(
    n,
    params: SqueezeParams,
    basis: Basis | None = None,
    idx: SWIndex = SWIndex(),
    method: str = "sandwich",
    leakage_budget: float = 1e-10,
) -> CovarianceTriple:
    """Covariances of ``q, p`` over ``T(alpha, w)`` applied to a basis vector.

    ``n`` is a Fock label, or a discrete-series label ``(n', n)`` whose oscillator
    index ``n'`` sets ``n0 = n' + 1/2``. ``method="sandwich"`` evaluates on the
    truncated squeezed state (leakage-checked); ``method="engine"`` goes through
    the transformed generators.
    """
    if basis is None:
        basis = sw_basis(128)
    hbar = idx.hbar
    osc = n if basis.kind == "sw" else n[0]
    if method == "sandwich":
        psi = squeezed_state(params, basis, n, leakage_budget)
        g = generators_for(basis)
        s = math.sqrt(hbar / 2)
        q = s * (g.a + g.a_dag)
        p = -1j * s * (g.a - g.a_dag)
        qv, pv = q.matrix @ psi.coeffs, p.matrix @ psi.coeffs
        mq = np.vdot(psi.coeffs, qv).real
        mp = np.vdot(psi.coeffs, pv).real
        qq = np.vdot(qv, qv).real
        pp = np.vdot(pv, pv).real
        sym = np.vdot(qv, pv).real  # Re<q psi, p psi> = <qp + pq>/2
    elif method == "engine":
        E = lambda word: expectation_poly(word, params, n, basis)
        a = E((0, 0, 0, 0, 1))
        a2 = E((0, 0, 0, 0, 2))
        ada = E((1, 0, 0, 0, 1))
        mq = math.sqrt(2 * hbar) * a.real
        mp = math.sqrt(2 * hbar) * a.imag
        # q^2 = (hbar/2)(a^2 + a^dag^2 + 2 a^dag a + 1), p^2 likewise with signs
        qq = hbar / 2 * (2 * a2.real + 2 * ada.real + 1)
        pp = hbar / 2 * (-2 * a2.real + 2 * ada.real + 1)
        sym = hbar * a2.imag  # <qp + pq>/2 = -(i hbar/2) <a^2 - a^dag^2>
    else:
        raise ValueError(f"unknown method {method!r}")
    return CovarianceTriple(qq - mq**2, pp - mp**2, sym - mq * mp, hbar, osc + 0.5)


def squeezing_disk(n: int) -> SqueezeDisk:
    """``|(2 n0 + 1) w + 2 n0| < 1`` written as a disk."""
    if n < 0:
        raise DomainError("n must be non-negative")
    n0 = n + 0.5
    return SqueezeDisk(complex(-2 * n0 / (2 * n0 + 1)), 1 / (2 * n0 + 1))


def is_squeezed(n: int, w) -> bool:
    """``2 n0 u_+ < 1``: position variance below the vacuum value."""
    up, _ = u_plus_minus(w)
    return 2 * (n + 0.5) * up < 1


def mandel_q_closed(alpha, w, n: int) -> float:
    alpha = complex(alpha)
    w = _check_w(w)
    n0 = n + 0.5
    x = abs(w) ** 2
    num = (4 * n0**2 + 3) * x + 4 * n0 * abs(alpha * w.conjugate() + alpha.conjugate()) ** 2 * (1 - x)
    den = 2 * n0 * (1 - x * x) + (2 * abs(alpha) ** 2 - 1) * (1 - x) ** 2
    # den = 2 <N> (1 - |w|^2)^2
    if den <= 1e-300:
        raise VacuumError("<N> = 0: Mandel's Q is undefined for the vacuum")
    return num / den - 1


def mandel_q_numeric(alpha, w, n, basis: Basis | None = None, method: str = "engine", leakage_budget: float = 1e-10) -> float:
    """``(<N^2> - <N>^2)/<N> - 1`` over ``T(alpha, w)`` applied to a basis vector.

    ``N^2 = a^dag^2 a^2 + a^dag a`` in the fixed generator order.
    """
    params = SqueezeParams(alpha, w)
    if method == "engine":
        E = lambda word: expectation_poly(word, params, n, basis).real
        N1 = E((1, 0, 0, 0, 1))
        N2 = E((2, 0, 0, 0, 2)) + N1
    elif method == "sandwich":
        basis = sw_basis(128) if basis is None else basis
        psi = squeezed_state(params, basis, n, leakage_budget)
        g = generators_for(basis)
        v = g.N.matrix @ psi.coeffs
        N1 = np.vdot(psi.coeffs, v).real
        N2 = np.vdot(v, v).real
    else:
        raise ValueError(f"unknown method {method!r}")
    if N1 <= 1e-14:
        raise VacuumError("<N> = 0: Mandel's Q is undefined for the vacuum")
    return (N2 - N1**2) / N1 - 1


def mandel_zero_radius(n: int) -> float:
    """``|w|`` on the zero locus of ``Q(0, w)``.

    ``|w|^2 = (sqrt(16 n0^4 + 24 n0^2 - 3) - 4 n0^2 - 1) / (2 (2 n0 + 1))``.
    For ``n = 0`` this root is ``|w| = 0``, i.e. the vacuum, where Q is undefined.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    n0 = n + 0.5
    disc = 16 * n0**4 + 24 * n0**2 - 3
    if disc < 0:
        raise DomainError(f"negative discriminant {disc} for n = {n}")
    x = (math.sqrt(disc) - 4 * n0**2 - 1) / (2 * (2 * n0 + 1))
    if x < 0:
        raise DomainError(f"negative |w|^2 = {x} for n = {n}")
    return math.sqrt(x)
