"""Sparse polynomials in two variables with arbitrary coefficient type.

Coefficients may be Python/NumPy numbers or SymPy expressions; arithmetic is
whatever the coefficient type provides, so exact inputs stay exact.
"""

from __future__ import annotations

from typing import Mapping

__all__ = ["BivarPoly"]


def _is_zero(c) -> bool:
    try:
        return bool(c == 0)
    except TypeError:
        return False


class BivarPoly:
    """``sum c_ij x^i y^j`` stored as ``{(i, j): c_ij}``; zero coefficients are dropped.

    ``variables`` names the two formal variables, e.g. ``("alpha", "w")`` or
    ``("z", "zeta")``. Polynomials with different variable tags do not mix.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, terms: Mapping | None = None, variables=("alpha", "w")):
        self.variables = tuple(variables)
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be non-negative")
            if not _is_zero(c):
                clean[(int(i), int(j))] = c
        self._terms = clean

    @classmethod
    def constant(cls, c, variables=("alpha", "w")):
        return cls({(0, 0): c}, variables)

    @classmethod
    def monomial(cls, i, j, c=1, variables=("alpha", "w")):
        return cls({(i, j): c}, variables)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, i, j, default=0):
        return self._terms.get((i, j), default)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def _check(self, other):
        if isinstance(other, BivarPoly) and other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other):
        if isinstance(other, BivarPoly):
            self._check(other)
            return other
        return BivarPoly.constant(other, self.variables)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out[key] + c if key in out else c
        return BivarPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out[key] + c1 * c2 if key in out else c1 * c2
        return BivarPoly(out, self.variables)

    __rmul__ = __mul__

    def diff(self, var: int, order: int = 1) -> "BivarPoly":
        """Partial derivative with respect to variable ``0`` or ``1``."""
        out = {}
        for (i, j), c in self._terms.items():
            e = (i, j)[var]
            if e < order:
                continue
            f = 1
            for t in range(order):
                f *= e - t
            key = (i - order, j) if var == 0 else (i, j - order)
            out[key] = f * c
        return BivarPoly(out, self.variables)

    def shift(self, di: int, dj: int, c=1) -> "BivarPoly":
        """Multiply by ``c x^di y^dj``."""
        return BivarPoly({(i + di, j + dj): c * v for (i, j), v in self._terms.items()}, self.variables)

    def __call__(self, x, y):
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), 0)

    def evalf(self) -> "BivarPoly":
        """Coefficients converted to Python complex numbers."""
        return BivarPoly({k: complex(c) for k, c in self._terms.items()}, self.variables)

    def max_abs_coeff(self) -> float:
        return max((abs(complex(c)) for c in self._terms.values()), default=0.0)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.variables == other.variables and (self - other).is_zero()

    def __repr__(self):
        x, y = self.variables
        if not self._terms:
            return f"BivarPoly(0; {x}, {y})"
        parts = [f"({c})*{x}^{i}*{y}^{j}" for (i, j), c in sorted(self._terms.items())]
        return "BivarPoly(" + " + ".join(parts) + ")"
