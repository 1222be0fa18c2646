import math

import numpy as np
import pytest

from jacobigroup.ds import (
    DSWeight,
    build_ds_generators,
    casimir_value,
    ds_casimir,
    ds_poly,
    intertwine_check_ds,
    lowest_weight_residuals,
    sigma_k_apply,
)
from jacobigroup.errors import DomainError
from jacobigroup.operators import commutator, interior_indices, max_abs
from jacobigroup.polynomials import BivarPoly

WEIGHTS = (1.7, 2.5, 3.0, 4.25)
ZZ = ("z", "zeta")


def test_weight_validation():
    assert DSWeight(2.0).square_integrable
    assert not DSWeight(1.2).square_integrable
    with pytest.raises(DomainError):
        DSWeight(0.5)
    with pytest.raises(DomainError):
        build_ds_generators(3.0, 1)


@pytest.mark.parametrize("k", WEIGHTS)
def test_lowest_weight_vector(k):
    g = build_ds_generators(k, 6)
    res = lowest_weight_residuals(g)
    assert max(res.values()) < 1e-14
    e = g.basis
    assert g.K0.entry((0, 0), (0, 0)) * 2 == pytest.approx(k)
    assert g.K_minus.entry((0, 0), (0, 1)) == pytest.approx(math.sqrt(k - 0.5))
    assert g.a.entry((1, 0), (2, 0)) == pytest.approx(math.sqrt(2))
    assert e.dim == len(e.labels)


@pytest.mark.parametrize("k", WEIGHTS)
def test_ds_boson_relations(k):
    g = build_ds_generators(k, 10)
    blk = interior_indices(g.basis, 2)
    I = np.eye(len(blk))
    assert max_abs(commutator(g.a, g.a_dag).block(blk) - I) < 1e-12
    assert max_abs(commutator(g.K_minus, g.K_plus).block(blk) - 2 * g.K0.block(blk)) < 1e-12
    assert max_abs(commutator(g.a, g.K_plus).block(blk) - g.a_dag.block(blk)) < 1e-12
    for W in (g.W0, g.W_plus, g.W_minus):
        assert max_abs(commutator(g.a, W).block(blk)) < 1e-12


def test_casimir_values():
    assert casimir_value(2.5) == 0
    assert casimir_value(3.0) == pytest.approx(0.3125)
    _, expected, dev = ds_casimir(1.7, 10)
    assert expected == pytest.approx(1.2 * -0.8 / 4)
    assert dev < 1e-10
    _, expected, dev = ds_casimir(2.5, 10)
    assert expected == 0 and dev < 1e-12


def test_ds_poly():
    assert ds_poly(3.0, 0, 0) == BivarPoly.constant(1.0, ZZ)
    assert ds_poly(3.0, 1, 0) == BivarPoly.monomial(1, 0, 1.0, ZZ)
    assert ds_poly(3.0, 0, 1).coeff(0, 1) == pytest.approx(math.sqrt(2.5))


def test_sigma_k_on_constant():
    k = 3.0
    one = BivarPoly.constant(1.0, ZZ)
    assert sigma_k_apply(k, "K0", one) == (k / 2) * one
    Kp = sigma_k_apply(k, "K_plus", one)
    assert Kp == BivarPoly({(2, 0): 0.5, (0, 1): k - 0.5}, ZZ)


@pytest.mark.parametrize("k", WEIGHTS)
def test_intertwine_ds(k):
    assert intertwine_check_ds(k, 8)["max"] < 1e-12
