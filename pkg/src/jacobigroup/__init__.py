"""Truncated-matrix realizations of the Jacobi group representations, squeezed
states built from them, and the closed forms they are checked against."""

from .errors import (
    BasisMismatchError,
    CutoffBudgetError,
    DomainError,
    GradeError,
    JacobiError,
    LeakageError,
    VacuumError,
)
from .operators import (
    Basis,
    StateVector,
    TruncatedOperator,
    adjoint,
    apply,
    basis_state,
    commutator,
    ds_basis,
    exp_diag,
    expm_dense,
    graded_exp,
    identity,
    sw_basis,
)
from .group import GroupElement, PointCH, algebra_basis, check_structure_constants, embed, jacobi_action
from .sw import SWIndex, build_sw_generators, f_poly, pi0_apply
from .ds import DSWeight, build_ds_generators, ds_casimir, ds_poly, sigma_k_apply
from .squeezing import (
    SqueezeParams,
    displacement,
    expectation_poly,
    squeeze,
    squeeze_me_closed,
    squeezed_op,
    squeezed_state,
    transformed_generators,
)
from .observables import (
    covariance_closed,
    covariance_numeric,
    is_squeezed,
    mandel_q_closed,
    mandel_q_numeric,
    mandel_zero_radius,
    squeezing_disk,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMismatchError",
    "CutoffBudgetError",
    "DomainError",
    "GradeError",
    "JacobiError",
    "LeakageError",
    "VacuumError",
    "Basis",
    "StateVector",
    "TruncatedOperator",
    "adjoint",
    "apply",
    "basis_state",
    "commutator",
    "ds_basis",
    "exp_diag",
    "expm_dense",
    "graded_exp",
    "identity",
    "sw_basis",
    "SqueezeParams",
    "displacement",
    "expectation_poly",
    "squeeze",
    "squeeze_me_closed",
    "squeezed_op",
    "squeezed_state",
    "transformed_generators",
    "covariance_closed",
    "covariance_numeric",
    "is_squeezed",
    "mandel_q_closed",
    "mandel_q_numeric",
    "mandel_zero_radius",
    "squeezing_disk",
    "GroupElement",
    "PointCH",
    "algebra_basis",
    "check_structure_constants",
    "embed",
    "jacobi_action",
    "SWIndex",
    "build_sw_generators",
    "f_poly",
    "pi0_apply",
    "DSWeight",
    "build_ds_generators",
    "ds_casimir",
    "ds_poly",
    "sigma_k_apply",
]
