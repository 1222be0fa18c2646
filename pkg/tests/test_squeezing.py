import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_disk
from jacobigroup.errors import CutoffBudgetError, DomainError, LeakageError
from jacobigroup.operators import ds_basis, expm_dense, leading_block, max_abs, sw_basis
from jacobigroup.squeezing import (
    SqueezeParams,
    displacement,
    displacement_factored,
    displacement_me_closed,
    squeeze_me_normalization,
    expectation_poly,
    expectation_sandwich,
    generators_for,
    required_cutoff,
    squeeze,
    squeeze_me_closed,
    squeeze_me_oracle,
    squeezed_op,
    squeezed_state,
    transformed_generators,
    word_powers,
)
from jacobigroup.verify import ratio_w_values, transformed_vs_conjugation, unitarity_defect

B64 = sw_basis(64)


def test_params_validation():
    P = SqueezeParams(1 + 1j, 0.6)
    assert P.r == pytest.approx(1 / math.sqrt(1 - 0.36))
    with pytest.raises(DomainError):
        SqueezeParams(0, 1.0)


def test_trivial_unitaries():
    np.testing.assert_array_equal(displacement(0, B64).matrix, np.eye(65))
    np.testing.assert_array_equal(squeeze(0, B64).matrix, np.eye(65))
    al, w = 0.4 - 0.3j, 0.2 + 0.1j
    np.testing.assert_allclose(squeezed_op(SqueezeParams(al, 0), B64).matrix, displacement(al, B64).matrix)
    np.testing.assert_allclose(squeezed_op(SqueezeParams(0, w), B64).matrix, squeeze(w, B64).matrix)


def test_vacuum_elements():
    al = 1.1 + 0.5j
    D = displacement(al, B64)
    assert D.entry(0, 0) == pytest.approx(math.exp(-abs(al) ** 2 / 2))
    assert D.entry(1, 0) == pytest.approx(al * math.exp(-abs(al) ** 2 / 2))
    w = 0.5 - 0.2j
    assert squeeze(w, B64).entry(0, 0) == pytest.approx((1 - abs(w) ** 2) ** 0.25)


@pytest.mark.parametrize("alpha", [2.0, -2j, 1.2 + 1.5j, 0.3])
def test_displacement_unitary_and_vs_expm(alpha):
    D = displacement(alpha, B64)
    dev, n = unitarity_defect(D)
    assert n >= 16 and dev < 1e-8
    g = generators_for(B64)
    E = expm_dense(alpha * g.a_dag - np.conj(alpha) * g.a)
    blk = np.arange(n)
    assert max_abs(D.block(blk) - E.block(blk)) < 1e-9


@pytest.mark.parametrize("w", [0.6, -0.6j, 0.3 + 0.4j, 0.1])
def test_squeeze_unitary_and_inverse(w):
    S = squeeze(w, B64)
    dev, n = unitarity_defect(S)
    # |w| = 0.6 spreads phi_5 past N = 64 at the 1e-10 level; four columns remain
    assert n >= 4 and dev < 1e-9
    blk = leading_block(S, 1e-10)
    assert max_abs(S.dag.block(blk) - squeeze(-w, B64).block(blk)) < 1e-9


@pytest.mark.parametrize("k", [1.7, 3.0, 4.25])
def test_ds_squeeze_unitary(k):
    S = squeeze(0.2 + 0.25j, ds_basis(k, 20))
    dev, n = unitarity_defect(S)
    assert n >= 6 and dev < 1e-9


def test_unitarity_defect_refuses_empty_block():
    S = squeeze(0.5, ds_basis(3.0, 8))
    dev, n = unitarity_defect(S)
    assert n < 4 and dev == math.inf


@given(st.integers(0, 10**6))
@settings(max_examples=15)
def test_phi0_leakage_small(seed):
    rng = np.random.default_rng(seed)
    P = SqueezeParams(random_disk(rng, 2.0), random_disk(rng, 0.6))
    psi = squeezed_state(P, sw_basis(128), 0, leakage_budget=1e-10)
    assert psi.leakage < 1e-10


def test_leakage_budget_enforced():
    with pytest.raises(LeakageError) as info:
        squeezed_state(SqueezeParams(2.0, 0.6), sw_basis(16), 0, leakage_budget=1e-10)
    assert info.value.leakage > 1e-10


def exact_displacement_element(m, n, alpha):
    mpmath.mp.dps = 50
    al = mpmath.mpc(alpha)
    if m < n:
        return complex(mpmath.conj(exact_displacement_element(n, m, -alpha)))
    x = abs(al) ** 2
    val = mpmath.sqrt(mpmath.factorial(n) / mpmath.factorial(m)) * al ** (m - n) * mpmath.exp(-x / 2) * mpmath.laguerre(n, m - n, x)
    return complex(val)


@pytest.mark.parametrize("alpha", [2.0, 1.3 - 1.5j, 0.25j])
def test_displacement_high_columns_accurate(alpha):
    D = displacement(alpha, sw_basis(160)).matrix
    pairs = [(m, n) for m in range(0, 161, 23) for n in range(0, 161, 23)] + [(120, 118), (3, 140)]
    for m, n in pairs:
        assert abs(D[m, n] - exact_displacement_element(m, n, alpha)) < 1e-13


def test_displacement_equals_factored_product_on_low_columns():
    B = sw_basis(64)
    for al in (2.0, -1.1 + 0.8j):
        F = displacement_factored(al, B)
        blk = leading_block(F, 1e-12)
        assert len(blk) >= 20
        # the gap is the factored product's own round-off (~1e-11 by column 20 at |alpha| = 2)
        assert max_abs(displacement(al, B).block(blk) - F.block(blk)) < 1e-10


def test_displacement_ds_moves_oscillator_index_only():
    B = ds_basis(3.0, 6)
    al = 0.6 - 0.3j
    D = displacement(al, B)
    F = displacement_factored(al, B)
    assert max_abs(D.matrix - F.matrix) < 1e-13
    assert D.entry((1, 2), (0, 1)) == 0
    assert D.entry((2, 1), (0, 1)) == pytest.approx(exact_displacement_element(2, 0, al), abs=1e-14)


# -- closed forms ---------------------------------------------------------------------

def test_squeeze_me_closed_examples():
    k, w = 3.0, 0.35 - 0.1j
    h = (2 * k - 1) / 4
    x = abs(w) ** 2
    assert squeeze_me_closed(k, 0, 0, w) == pytest.approx((1 - x) ** h)
    assert squeeze_me_closed(k, 0, 2, w) == pytest.approx(math.sqrt(h * (2 * h + 1)) * w**2 * (1 - x) ** h)
    with pytest.raises(DomainError):
        squeeze_me_closed(k, 2, 1, w)


def test_squeeze_me_closed_w_independent_ratio():
    rep = squeeze_me_normalization(3.0, 1, 1, ratio_w_values())
    mean, spread = rep["stripped"]
    assert spread < 1e-9 and abs(mean - 1) < 1e-9
    # the unstripped ratio carries the oscillator-vacuum factor and is not constant
    assert rep["full"][1] > 1e-3
    w = 0.3
    ratio = squeeze_me_closed(3.0, 1, 1, w) / squeeze_me_oracle(3.0, 1, 1, w)
    assert ratio == pytest.approx((1 - w * w) ** -0.25, rel=1e-12)


def test_squeeze_oracle_cutoff_independent():
    w = 0.45 + 0.3j
    a = squeeze_me_oracle(2.5, 1, 3, w, D=3)
    b = squeeze_me_oracle(2.5, 1, 3, w, D=9)
    assert a == pytest.approx(b, rel=1e-13)


def test_displacement_me_examples():
    al = 0.8 - 0.6j
    assert displacement_me_closed(0, 0, al) == pytest.approx(math.exp(-abs(al) ** 2 / 2))
    assert displacement_me_closed(1, 0, al) == pytest.approx(al * math.exp(-abs(al) ** 2 / 2))


def test_displacement_me_vs_matrix(rng):
    worst = 0.0
    for _ in range(5):
        al = random_disk(rng, 2.0)
        D = displacement(al, B64).matrix
        for m in range(11):
            for n in range(11):
                worst = max(worst, abs(displacement_me_closed(m, n, al) - D[m, n]))
    assert worst < 1e-10


# -- transformed generators and the expectation engine ---------------------------------

def test_transformed_trivial():
    g = generators_for(sw_basis(10))
    hat = transformed_generators(SqueezeParams(0, 0), g)
    np.testing.assert_allclose(hat.get("a").matrix, g.a.matrix)
    np.testing.assert_allclose(hat.get("K0").matrix, g.K0.matrix)
    al = 0.5 + 0.25j
    hat = transformed_generators(SqueezeParams(al, 0), g)
    np.testing.assert_allclose(hat.get("a").matrix, g.a.matrix + al * np.eye(11))


def test_transformed_vs_conjugation(rng):
    g = generators_for(sw_basis(96))
    for _ in range(3):
        P = SqueezeParams(random_disk(rng, 1.5), random_disk(rng, 0.5))
        dev, n = transformed_vs_conjugation(P, g)
        assert n >= 8
        assert dev < 1e-8


def test_word_powers():
    assert word_powers((1, 0, 0, 0, 1)) == (1, 0, 0, 0, 1)
    assert word_powers([("a_dag", 2), ("a", 1)]) == (2, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        word_powers([("a", 1), ("a_dag", 1)])
    assert required_cutoff((1, 0, 1, 0, 1), 2, "sw") == 6


def test_expectation_examples():
    al, w = 0.7 - 0.2j, 0.4 + 0.3j
    P = SqueezeParams(al, w)
    assert expectation_poly((0,) * 5, P, 3) == pytest.approx(1.0)
    n_vac = expectation_poly((1, 0, 0, 0, 1), P, 0)
    assert n_vac == pytest.approx(P.r**2 * abs(w) ** 2 + abs(al) ** 2, rel=1e-13)
    k0 = expectation_poly((0, 0, 1, 0, 0), SqueezeParams(0, w), 0)
    assert k0 == pytest.approx(P.r**2 * (1 + abs(w) ** 2) / 4, rel=1e-13)


def test_expectation_cutoff_budget():
    with pytest.raises(CutoffBudgetError) as info:
        expectation_poly((2, 0, 0, 0, 2), SqueezeParams(0.1, 0.1), 3, sw_basis(5))
    assert info.value.required == 7


WORDS = [p for p in np.ndindex(*(3,) * 5) if sum(p) <= 2]


@given(st.integers(0, 10**6), st.sampled_from(WORDS), st.integers(0, 3))
@settings(max_examples=25)
def test_engine_matches_sandwich(seed, word, n):
    rng = np.random.default_rng(seed)
    P = SqueezeParams(random_disk(rng, 1.5), random_disk(rng, 0.5))
    B = sw_basis(96)
    exact = expectation_poly(word, P, n, B)
    sandwich, leak = expectation_sandwich(word, P, n, B)
    assert leak < 1e-10
    assert abs(exact - sandwich) <= 1e-8


def test_engine_matches_sandwich_ds():
    B = ds_basis(3.0, 20)
    P = SqueezeParams(0.3 + 0.2j, 0.25)
    for word in [(1, 0, 0, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 0, 0)]:
        exact = expectation_poly(word, P, (1, 0), B)
        sandwich, _ = expectation_sandwich(word, P, (1, 0), B)
        assert abs(exact - sandwich) < 1e-8
