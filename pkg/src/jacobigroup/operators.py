"""Dense truncated operators over graded bases.

Two kinds of basis are supported:

* ``sw``: the Fock basis ``phi_n``, ``n = 0..N``; grade of ``phi_n`` is ``n``.
* ``ds``: the two-index discrete-series basis ``phi_(n', n)`` with
  ``n' + 2n <= 2D``; grade is ``n' + 2n``.

With this grading ``a^dagger``, ``K_+`` and ``W_+`` strictly raise the grade, so
the power series of their exponentials terminate on the truncated space and every
retained entry coincides with the entry of the untruncated operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np
from scipy import sparse

from .errors import BasisMismatchError, GradeError, JacobiError

__all__ = [
    "Basis",
    "sw_basis",
    "ds_basis",
    "TruncatedOperator",
    "StateVector",
    "identity",
    "commutator",
    "adjoint",
    "graded_exp",
    "exp_diag",
    "expm_dense",
    "basis_state",
    "apply",
    "interior_indices",
    "column_leakage",
    "leading_block",
    "max_abs",
]


@dataclass(frozen=True)
class Basis:
    """Ordered, tagged list of basis labels.

    ``cutoff`` is ``N`` for the Fock basis and the level ``D`` for the
    discrete-series basis (maximal grade ``2D``).
    """

    kind: str
    cutoff: int
    k: float | None = None

    def __post_init__(self):
        if self.kind not in ("sw", "ds"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if int(self.cutoff) != self.cutoff or self.cutoff < 0:
            raise ValueError("cutoff must be a non-negative integer")
        if self.kind == "ds" and self.k is None:
            raise ValueError("discrete-series basis needs a weight k")
        if self.kind == "sw" and self.k is not None:
            raise ValueError("Fock basis carries no weight")

    @cached_property
    def labels(self) -> tuple:
        if self.kind == "sw":
            return tuple(range(self.cutoff + 1))
        # ordered by grade, then by n'
        out = []
        for g in range(2 * self.cutoff + 1):
            for n in range(g // 2, -1, -1):
                out.append((g - 2 * n, n))
        return tuple(out)

    @cached_property
    def grades(self) -> np.ndarray:
        if self.kind == "sw":
            g = np.arange(self.cutoff + 1)
        else:
            g = np.array([p + 2 * n for p, n in self.labels])
        g.setflags(write=False)
        return g

    @cached_property
    def _index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def max_grade(self) -> int:
        return self.cutoff if self.kind == "sw" else 2 * self.cutoff

    def index(self, label) -> int:
        if self.kind == "sw":
            label = int(label)
        else:
            label = tuple(int(x) for x in label)
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label} is outside {self}") from None

    def __contains__(self, label) -> bool:
        try:
            self.index(label)
        except (KeyError, TypeError, ValueError):
            return False
        return True


def sw_basis(N: int) -> Basis:
    return Basis("sw", int(N))


def ds_basis(k: float, D: int) -> Basis:
    return Basis("ds", int(D), float(k))


def _check_same_basis(*bases: Basis) -> None:
    first = bases[0]
    for b in bases[1:]:
        if b != first:
            raise BasisMismatchError(f"basis mismatch: {first} vs {b}")


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    """Dense complex matrix over a :class:`Basis`.

    ``grade_shift`` (optional) records by how many grade units the operator
    moves every basis vector; it is validated on construction.
    """

    basis: Basis
    matrix: np.ndarray
    grade_shift: int | None = None

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (self.basis.dim, self.basis.dim):
            raise ValueError(f"matrix shape {m.shape} does not match basis dimension {self.basis.dim}")
        if not np.all(np.isfinite(m)):
            raise ValueError("operator entries must be finite")
        if self.grade_shift is not None:
            g = self.basis.grades
            bad = (m != 0) & (g[:, None] - g[None, :] != self.grade_shift)
            if bad.any():
                raise GradeError(f"entries violate declared grade shift {self.grade_shift}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def dag(self) -> "TruncatedOperator":
        return adjoint(self)

    def entry(self, row_label, col_label) -> complex:
        return complex(self.matrix[self.basis.index(row_label), self.basis.index(col_label)])

    def block(self, idx) -> np.ndarray:
        idx = np.asarray(idx)
        return self.matrix[np.ix_(idx, idx)]

    def __matmul__(self, other):
        if isinstance(other, StateVector):
            return apply(self, other)
        if not isinstance(other, TruncatedOperator):
            return NotImplemented
        _check_same_basis(self.basis, other.basis)
        shift = None
        if self.grade_shift is not None and other.grade_shift is not None:
            shift = self.grade_shift + other.grade_shift
        return TruncatedOperator(self.basis, self.matrix @ other.matrix, shift)

    def _combine(self, other, sign):
        if isinstance(other, TruncatedOperator):
            _check_same_basis(self.basis, other.basis)
            shift = self.grade_shift if self.grade_shift == other.grade_shift else None
            return TruncatedOperator(self.basis, self.matrix + sign * other.matrix, shift)
        if np.isscalar(other):
            # scalar means scalar * identity
            shift = 0 if self.grade_shift == 0 else None
            return TruncatedOperator(self.basis, self.matrix + sign * other * np.eye(self.dim), shift)
        return NotImplemented

    def __add__(self, other):
        return self._combine(other, 1)

    def __radd__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return TruncatedOperator(self.basis, -self.matrix, self.grade_shift)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return TruncatedOperator(self.basis, scalar * self.matrix, self.grade_shift)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return TruncatedOperator(self.basis, self.matrix / scalar, self.grade_shift)

    def __pow__(self, power: int):
        if int(power) != power or power < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = identity(self.basis)
        for _ in range(int(power)):
            out = out @ self
        return out

    def __repr__(self):
        return f"TruncatedOperator({self.basis.kind}, dim={self.dim}, grade_shift={self.grade_shift})"


@dataclass(frozen=True, eq=False)
class StateVector:
    """Coefficient vector with an upper bound on the squared norm lost to truncation."""

    basis: Basis
    coeffs: np.ndarray
    leakage: float = 0.0

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.shape != (self.basis.dim,):
            raise ValueError(f"coefficient length {c.shape} does not match basis dimension {self.basis.dim}")
        if self.leakage < 0:
            raise ValueError("leakage must be non-negative")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def norm2(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def expect(self, op: TruncatedOperator) -> complex:
        _check_same_basis(self.basis, op.basis)
        return complex(np.vdot(self.coeffs, op.matrix @ self.coeffs))


def identity(basis: Basis) -> TruncatedOperator:
    return TruncatedOperator(basis, np.eye(basis.dim), 0)


def commutator(A: TruncatedOperator, B: TruncatedOperator) -> TruncatedOperator:
    """Return ``AB - BA``."""
    _check_same_basis(A.basis, B.basis)
    shift = None
    if A.grade_shift is not None and B.grade_shift is not None:
        shift = A.grade_shift + B.grade_shift
    return TruncatedOperator(A.basis, A.matrix @ B.matrix - B.matrix @ A.matrix, shift)


def adjoint(A: TruncatedOperator) -> TruncatedOperator:
    shift = None if A.grade_shift is None else -A.grade_shift
    return TruncatedOperator(A.basis, A.matrix.conj().T, shift)


def graded_exp(A: TruncatedOperator, t: complex = 1.0) -> TruncatedOperator:
    """Terminating series ``sum_j t^j A^j / j!`` for a grade-shifting operator.

    The series stops at the first vanishing power, which happens after at most
    ``max_grade / |grade_shift| + 1`` terms.
    """
    if not A.grade_shift:
        raise GradeError("graded_exp needs a nonzero grade shift; use exp_diag or expm_dense")
    # powers of a grade-shifting matrix stay as sparse as the matrix itself
    step = sparse.csr_matrix(t * A.matrix)
    term = sparse.identity(A.dim, dtype=complex, format="csr")
    total = np.eye(A.dim, dtype=complex)
    for j in range(1, A.basis.max_grade // abs(A.grade_shift) + 2):
        term = (term @ step) / j
        term.eliminate_zeros()
        if term.nnz == 0:
            break
        total += term.toarray()
    return TruncatedOperator(A.basis, total)


def exp_diag(A: TruncatedOperator, t: complex = 1.0) -> TruncatedOperator:
    """Exponential of a diagonal operator."""
    d = np.diag(A.matrix)
    if np.count_nonzero(A.matrix - np.diag(d)):
        raise GradeError("exp_diag needs a diagonal operator")
    return TruncatedOperator(A.basis, np.diag(np.exp(t * d)), 0)


def expm_dense(A: TruncatedOperator, t: complex = 1.0) -> TruncatedOperator:
    """Matrix exponential of ``tA`` by scaling and squaring of a Taylor series.

    Used as an oracle only; the production unitaries come from the graded
    factorizations.
    """
    X = t * A.matrix
    if not np.all(np.isfinite(X)):
        raise JacobiError("non-finite entries in exponent")
    norm = np.linalg.norm(X, 1)
    s = max(0, int(math.ceil(math.log2(norm / 0.25)))) if norm > 0.25 else 0
    X = X / 2.0**s
    # ||X||_1 <= 1/4: 20 terms leave a remainder below 4^-21/21!, far under eps
    term = np.eye(A.dim, dtype=complex)
    E = term.copy()
    for j in range(1, 21):
        term = term @ X / j
        E += term
    for _ in range(s):
        E = E @ E
    return TruncatedOperator(A.basis, E)


def basis_state(basis: Basis, label) -> StateVector:
    c = np.zeros(basis.dim, dtype=complex)
    c[basis.index(label)] = 1.0
    return StateVector(basis, c)


def apply(op: TruncatedOperator, state: StateVector) -> StateVector:
    """Apply ``op`` to ``state``; norm lost in the product is added to the leakage.

    The leakage estimate is meaningful for (truncations of) unitary operators.
    """
    _check_same_basis(op.basis, state.basis)
    out = op.matrix @ state.coeffs
    lost = max(0.0, state.norm2 - float(np.vdot(out, out).real))
    return StateVector(state.basis, out, state.leakage + lost)


def interior_indices(basis: Basis, budget: int) -> np.ndarray:
    """Indices of basis vectors whose grade is at most ``max_grade - budget``."""
    return np.flatnonzero(basis.grades <= basis.max_grade - budget)


def column_leakage(U: TruncatedOperator) -> np.ndarray:
    """Squared norm each column of a truncated unitary loses beyond the cutoff."""
    return np.clip(1.0 - np.sum(np.abs(U.matrix) ** 2, axis=0), 0.0, None)


def leading_block(U: TruncatedOperator, budget: float) -> np.ndarray:
    """Indices of the longest run of leading columns with leakage at most ``budget``.

    This is the interior block on which identities involving ``U`` are asserted.
    """
    bad = np.flatnonzero(column_leakage(U) > budget)
    stop = bad[0] if bad.size else U.dim
    return np.arange(stop)


def max_abs(x: np.ndarray | Iterable | TruncatedOperator) -> float:
    if isinstance(x, TruncatedOperator):
        x = x.matrix
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0
