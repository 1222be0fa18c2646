"""The Jacobi group as 4x4 real matrices, its Lie algebra, and its action on C x H."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DomainError

__all__ = [
    "GroupElement",
    "AlgebraElement",
    "PointCH",
    "ALGEBRA_NAMES",
    "embed",
    "from_matrix",
    "compose",
    "algebra_basis",
    "expected_brackets",
    "check_structure_constants",
    "jacobi_action",
]

DET_TOL = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """``((lambda, mu_H, kappa), M)`` with ``M = [[a, b], [c, d]]`` in SL(2, R)."""

    lam: float
    mu_H: float
    kappa: float
    M: tuple = ((1.0, 0.0), (0.0, 1.0))

    def __post_init__(self):
        M = np.asarray(self.M, dtype=float)
        if M.shape != (2, 2):
            raise ValueError("M must be 2x2")
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        if abs(det - 1.0) > DET_TOL:
            raise DomainError(f"det M = {det!r}, expected 1")
        object.__setattr__(self, "M", tuple(map(tuple, M.tolist())))

    @property
    def abcd(self):
        (a, b), (c, d) = self.M
        return a, b, c, d

    @classmethod
    def identity(cls):
        return cls(0.0, 0.0, 0.0)

    def __matmul__(self, other):
        return compose(self, other)


def embed(g: GroupElement) -> np.ndarray:
    a, b, c, d = g.abcd
    lam, mu, kap = g.lam, g.mu_H, g.kappa
    return np.array(
        [
            [a, 0.0, b, a * mu - b * lam],
            [lam, 1.0, mu, kap],
            [c, 0.0, d, c * mu - d * lam],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def from_matrix(X: np.ndarray, tol: float = 1e-9) -> GroupElement:
    """Read the coordinates back from an embedded matrix; checks the shape of ``X``."""
    X = np.asarray(X, dtype=float)
    g = GroupElement(X[1, 0], X[1, 2], X[1, 3], ((X[0, 0], X[0, 2]), (X[2, 0], X[2, 2])))
    if np.max(np.abs(embed(g) - X)) > tol:
        raise DomainError("matrix is not in the image of the embedding")
    return g


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Group product, defined through the matrix product of the embeddings."""
    X = embed(g1) @ embed(g2)
    # renormalize det M against round-off before re-validation
    M = np.array([[X[0, 0], X[0, 2]], [X[2, 0], X[2, 2]]])
    X[[0, 0, 2, 2], [0, 2, 0, 2]] = (M / np.sqrt(np.linalg.det(M))).ravel()
    return from_matrix(X)


ALGEBRA_NAMES = ("P", "Q", "R", "F", "G", "H")


@dataclass(frozen=True)
class AlgebraElement:
    """Real linear combination of the basis ``P, Q, R, F, G, H``."""

    coeffs: tuple

    @property
    def matrix(self) -> np.ndarray:
        B = _basis_matrices()
        return sum(c * B[name] for c, name in zip(self.coeffs, ALGEBRA_NAMES))

    @classmethod
    def named(cls, name):
        return cls(tuple(1 if n == name else 0 for n in ALGEBRA_NAMES))


def _delta(i, j):
    m = np.zeros((4, 4), dtype=np.int64)
    m[i - 1, j - 1] = 1
    return m


def _basis_matrices() -> dict:
    return {
        "P": _delta(2, 1) - _delta(3, 4),
        "Q": _delta(1, 4) + _delta(2, 3),
        "R": _delta(2, 4),
        "F": _delta(1, 3),
        "G": _delta(3, 1),
        "H": _delta(1, 1) - _delta(3, 3),
    }


def algebra_basis() -> dict:
    """The six integer basis matrices of the Lie algebra, keyed by name."""
    return _basis_matrices()


def expected_brackets() -> dict:
    """Nonzero brackets ``[X, Y]`` as ``{(X, Y): {Z: coeff}}``; all other pairs vanish."""
    table = {
        ("P", "Q"): {"R": 2},
        ("F", "G"): {"H": 1},
        ("H", "F"): {"F": 2},
        ("G", "H"): {"G": 2},
        ("P", "F"): {"Q": 1},
        ("Q", "G"): {"P": 1},
        ("P", "H"): {"P": 1},
        ("H", "Q"): {"Q": 1},
    }
    out = {}
    for x, y in combinations(ALGEBRA_NAMES, 2):
        if (x, y) in table:
            out[(x, y)] = table[(x, y)]
        elif (y, x) in table:
            out[(x, y)] = {z: -c for z, c in table[(y, x)].items()}
        else:
            out[(x, y)] = {}
    return out


def check_structure_constants() -> dict:
    """Evaluate all 15 brackets in exact integer arithmetic.

    Returns ``{"max_deviation": int, "pairs": {(X, Y): deviation}}``.
    """
    B = _basis_matrices()
    pairs = {}
    for (x, y), rhs in expected_brackets().items():
        lhs = B[x] @ B[y] - B[y] @ B[x]
        target = np.zeros((4, 4), dtype=np.int64)
        for z, c in rhs.items():
            target = target + c * B[z]
        pairs[(x, y)] = int(np.max(np.abs(lhs - target)))
    return {"max_deviation": max(pairs.values()), "pairs": pairs}


@dataclass(frozen=True)
class PointCH:
    z: complex
    tau: complex

    def __post_init__(self):
        if not complex(self.tau).imag > 0:
            raise DomainError(f"Im tau must be positive, got tau = {self.tau}")


def jacobi_action(g: GroupElement, p: PointCH, m: float, k: float):
    """Map ``(z, tau) -> (z_g, tau_g)`` together with the automorphy factor.

    The factor is ``(c tau + d)^(-k) exp(2 pi i m (kappa + theta))`` with
    ``theta = lambda z + (lambda z_g - c z_g^2)(c tau + d)``; non-integer ``k``
    uses the principal branch.
    """
    a, b, c, d = g.abcd
    z, tau = complex(p.z), complex(p.tau)
    j = c * tau + d
    z_g = (z + g.lam * tau + g.mu_H) / j
    tau_g = (a * tau + b) / j
    theta = g.lam * z + (g.lam * z_g - c * z_g**2) * j
    if float(k).is_integer():
        power = j ** (-int(k))
    else:
        power = cmath.exp(-k * cmath.log(j))
    factor = power * cmath.exp(2j * cmath.pi * m * (g.kappa + theta))
    return PointCH(z_g, tau_g), factor
