"""Self-verification suites: each returns the largest deviation it observed.

Every suite compares two independent routes to the same quantity (closed form
vs truncated-matrix oracle, factored vs dense exponential, algebra relation vs
zero, ...). Deviations are absolute unless noted.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .ds import build_ds_generators, ds_casimir, intertwine_check_ds
from .group import check_structure_constants
from .observables import (
    covariance_closed,
    covariance_numeric,
    is_squeezed,
    mandel_q_closed,
    mandel_q_numeric,
    squeezing_disk,
)
from .operators import (
    commutator,
    ds_basis,
    expm_dense,
    identity,
    interior_indices,
    leading_block,
    max_abs,
    sw_basis,
)
from .squeezing import (
    SqueezeParams,
    displacement,
    displacement_factored,
    displacement_me_closed,
    squeeze_me_normalization,
    generators_for,
    squeeze,
    squeezed_op,
    transformed_generators,
)
from .sw import SWIndex, build_sw_generators, intertwine_check_sw

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all", "STANDARD_WEIGHTS"]

STANDARD_WEIGHTS = (1.7, 2.5, 3.0, 4.25)
UNITARY_LEAKAGE = 1e-10
CONJUGATION_LEAKAGE = 1e-12
MIN_BLOCK = 4  # fewer usable columns than this counts as a failed check, not a pass
DS_UNITARY_LEVEL = 20


@dataclass
class SuiteResult:
    name: str
    max_deviation: float
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def passed(self, tol: float) -> bool:
        return bool(self.max_deviation <= tol)


def _random_alpha(rng, amax):
    return amax * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())


DS_MAX_LEVEL = 32


def ds_level(cutoff: int) -> int:
    """DS level used by the suites for a given ``--cutoff`` (dense DS matrices grow like D^2)."""
    return max(3, min(cutoff, 12))


def casimir_level(cutoff: int) -> int:
    """Level for the Casimir checks: the cutoff itself, capped at ``DS_MAX_LEVEL``."""
    return max(3, min(cutoff, DS_MAX_LEVEL))


# -- algebra -----------------------------------------------------------------------

def suite_structure(cfg):
    rep = check_structure_constants()
    return rep["max_deviation"], {f"[{x},{y}]": d for (x, y), d in rep["pairs"].items()}


def su11_boson_deviations(g) -> dict:
    """Residuals of the boson / su(1,1) relations on grades ``<= max_grade - 2``."""
    idx = interior_indices(g.basis, 2)
    I = identity(g.basis)
    blk = lambda X: max_abs(X.block(idx))
    out = {
        "[a,a+]=I": blk(commutator(g.a, g.a_dag) - I),
        "[K0,K+]=K+": blk(commutator(g.K0, g.K_plus) - g.K_plus),
        "[K0,K-]=-K-": blk(commutator(g.K0, g.K_minus) + g.K_minus),
        "[K-,K+]=2K0": blk(commutator(g.K_minus, g.K_plus) - 2 * g.K0),
        "[a,K+]=a+": blk(commutator(g.a, g.K_plus) - g.a_dag),
        "[K-,a]=0": blk(commutator(g.K_minus, g.a)),
        "2[a,K0]=a": blk(2 * commutator(g.a, g.K0) - g.a),
        "K+=K-^dag": max_abs(g.K_plus.matrix - g.K_minus.matrix.conj().T),
    }
    for s, W in (("0", g.W0), ("+", g.W_plus), ("-", g.W_minus)):
        out[f"[a,W{s}]=0"] = blk(commutator(g.a, W))
    out["[W0,W+]=W+"] = blk(commutator(g.W0, g.W_plus) - g.W_plus)
    out["[W0,W-]=-W-"] = blk(commutator(g.W0, g.W_minus) + g.W_minus)
    out["[W-,W+]=2W0"] = blk(commutator(g.W_minus, g.W_plus) - 2 * g.W0)
    return out


def suite_boson(cfg):
    details = {}
    sw = su11_boson_deviations(build_sw_generators(cfg.cutoff, SWIndex(cfg.m)))
    details[f"sw N={cfg.cutoff}"] = max(sw.values())
    D = ds_level(cfg.cutoff)
    for k in sorted(set(STANDARD_WEIGHTS) | {cfg.k}):
        dev = su11_boson_deviations(build_ds_generators(k, D))
        details[f"ds k={k} D={D}"] = max(dev.values())
    return max(details.values()), details


def suite_casimir(cfg):
    D = casimir_level(cfg.cutoff) if cfg.suite == "casimir" else ds_level(cfg.cutoff)
    details = {}
    for k in sorted(set(STANDARD_WEIGHTS) | {cfg.k}):
        _, expected, dev = ds_casimir(k, D)
        details[f"k={k} D={D} expected={expected}"] = dev
    return max(details.values()), details


def suite_intertwine(cfg):
    N = min(cfg.cutoff, 24)
    details = {f"sw N={N}": intertwine_check_sw(N)["max"]}
    for k in sorted(set(STANDARD_WEIGHTS) | {cfg.k}):
        details[f"ds k={k} D=8"] = intertwine_check_ds(k, 8)["max"]
    return max(details.values()), details


# -- unitaries --------------------------------------------------------------------

def unitarity_defect(U, budget=UNITARY_LEAKAGE, min_block=MIN_BLOCK):
    """``max |U^dag U - I|`` and ``max |U U^dag - I|`` on the low-leakage leading block.

    The deviation is ``inf`` when fewer than ``min_block`` columns stay under budget.
    """
    blk = leading_block(U, budget)
    n = len(blk)
    if n < min_block:
        return math.inf, n
    left = (U.dag @ U).block(blk)
    right = (U @ U.dag).block(blk)
    return max(max_abs(left - np.eye(n)), max_abs(right - np.eye(n))), n


def suite_unitarity(cfg):
    rng = np.random.default_rng(cfg.seed)
    B = sw_basis(cfg.cutoff)
    g = generators_for(B)
    details = {}
    alphas = [2.0, 2j, -1.5 + 1.2j] + [_random_alpha(rng, 2.0) for _ in range(3)]
    ws = [0.6, -0.6j, 0.4 + 0.3j] + [_random_alpha(rng, 0.6) for _ in range(3)]
    for al in alphas:
        D = displacement(al, B)
        dev, n = unitarity_defect(D)
        E = expm_dense(al * g.a_dag - np.conj(al) * g.a)
        blk = np.arange(n)
        details[f"D({al:.3g}) block={n}"] = dev
        details[f"D({al:.3g}) vs expm"] = max_abs(D.block(blk) - E.block(blk))
        # the literal product is judged on its own block: its round-off shows up as leakage
        F = displacement_factored(al, B)
        fdev, fn = unitarity_defect(F)
        fblk = np.arange(fn)
        details[f"factored D({al:.3g}) block={fn}"] = fdev
        details[f"factored D({al:.3g}) vs expm"] = max_abs(F.block(fblk) - E.block(fblk))
    for w in ws:
        S = squeeze(w, B)
        dev, n = unitarity_defect(S)
        details[f"S({w:.3g}) block={n}"] = dev
        blk = leading_block(S, UNITARY_LEAKAGE)
        details[f"S({w:.3g})^dag=S(-w)"] = max_abs(S.dag.block(blk) - squeeze(-w, B).block(blk))
    # DS columns spread over two ladders, so the level is fixed and |w| kept at 0.4
    Bd = ds_basis(cfg.k, DS_UNITARY_LEVEL)
    for w in (0.4, -0.3j, 0.2 + 0.25j):
        dev, n = unitarity_defect(squeeze(w, Bd))
        details[f"ds S({w:.3g}) block={n}"] = dev
    return max(details.values()), details


# -- closed forms against oracles ------------------------------------------------------

def squeeze_me_spread(k, n, n_prime, ws):
    rep = squeeze_me_normalization(k, n, n_prime, ws)
    mean, spread = rep["stripped"]
    return spread, mean, rep["full"][1]


def ratio_w_values(count=20, wmax=0.8):
    return [wmax * (j + 1) / count * np.exp(0.9j * j) for j in range(count)]


def suite_closed_vs_oracle(cfg):
    rng = np.random.default_rng(cfg.seed)
    details = {}
    ws = ratio_w_values()
    spreads = []
    for k in (2.0, 3.0, 4.25):
        for n in range(7):
            for npr in range(n, 7):
                spread, mean, _ = squeeze_me_spread(k, n, npr, ws)
                spreads.append(max(spread, abs(mean - 1)))
    details["squeeze closed/oracle ratio spread (vacuum-stripped)"] = max(spreads)

    B = sw_basis(cfg.cutoff)
    lag = 0.0
    for _ in range(5):
        al = _random_alpha(rng, 2.0)
        # the literal factored product is round-off clean this far from the cutoff
        Dm = displacement_factored(al, B)
        for m in range(11):
            for n in range(11):
                lag = max(lag, abs(displacement_me_closed(m, n, al) - Dm.matrix[m, n]))
    details["laguerre vs factored D matrix"] = lag

    mq = 0.0
    for _ in range(20):
        al, w, n = _random_alpha(rng, 2.0), _random_alpha(rng, 0.6), int(rng.integers(0, 4))
        if n == 0 and abs(al) < 1e-6 and abs(w) < 1e-6:
            continue
        mq = max(mq, abs(mandel_q_closed(al, w, n) - mandel_q_numeric(al, w, n)))
    details["mandel closed vs engine"] = mq

    Bt = sw_basis(max(cfg.cutoff, 96))
    gt = generators_for(Bt)
    tg = 0.0
    for _ in range(3):
        P = SqueezeParams(_random_alpha(rng, 1.5), _random_alpha(rng, 0.5))
        tg = max(tg, transformed_vs_conjugation(P, gt)[0])
    details["transformed generators vs conjugation"] = tg
    return max(details.values()), details


def transformed_vs_conjugation(params, gens, budget=CONJUGATION_LEAKAGE, min_block=MIN_BLOCK):
    """Max deviation of the closed transformed generators from ``S(-w)D(-alpha) X D(alpha)S(w)``.

    ``inf`` when the usable leading block has fewer than ``min_block`` columns.
    """
    B = gens.basis
    T = squeezed_op(params, B)
    Tinv = squeeze(-params.w, B) @ displacement(-params.alpha, B)
    n = min(len(leading_block(T, budget)), len(leading_block(Tinv.dag, budget)))
    if n < min_block:
        return math.inf, n
    blk = np.arange(n)
    hat = transformed_generators(params, gens)
    dev = 0.0
    for X in ("a", "a_dag", "K0", "K_plus", "K_minus"):
        oracle = Tinv @ getattr(gens, X) @ T
        dev = max(dev, max_abs(oracle.block(blk) - hat.get(X).block(blk)))
    return dev, n


# -- observables --------------------------------------------------------------------

def suite_covariance(cfg):
    rng = np.random.default_rng(cfg.seed)
    idx = SWIndex(cfg.m)
    B = sw_basis(max(cfg.cutoff, 128))
    details = {}
    dev = 0.0
    for n in range(4):
        for _ in range(3):
            al, w = _random_alpha(rng, 2.0), _random_alpha(rng, 0.6)
            c = covariance_closed(n, w, idx.hbar)
            x = covariance_numeric(n, SqueezeParams(al, w), B, idx)
            dev = max(dev, abs(c.sigma_qq - x.sigma_qq), abs(c.sigma_pp - x.sigma_pp), abs(c.sigma_pq - x.sigma_pq))
    details["closed vs numeric"] = dev
    gap = 0.0
    for _ in range(10):
        gap = max(gap, abs(covariance_closed(0, _random_alpha(rng, 0.95), idx.hbar).schrodinger_gap))
    details["schrodinger equality n=0"] = gap
    return max(details.values()), details


def disk_disagreements(n, grid=32):
    """Count grid points where the predicate, the disk and ``sigma_qq < hbar/2`` disagree."""
    disk = squeezing_disk(n)
    hbar = SWIndex().hbar
    xs = np.linspace(-0.99, 0.99, grid)
    bad = 0
    for x in xs:
        for y in xs:
            w = complex(x, y)
            if abs(w) >= 1:
                continue
            s = is_squeezed(n, w)
            if s != (w in disk) or s != (covariance_closed(n, w, hbar).sigma_qq < hbar / 2):
                bad += 1
    return bad


def suite_disk(cfg):
    details = {f"n={n} disagreements": float(disk_disagreements(n)) for n in range(4)}
    return max(details.values()), details


SUITES = {
    "structure": suite_structure,
    "boson": suite_boson,
    "casimir": suite_casimir,
    "intertwine": suite_intertwine,
    "unitarity": suite_unitarity,
    "closed-vs-oracle": suite_closed_vs_oracle,
    "covariance": suite_covariance,
    "disk": suite_disk,
}


def run_suite(name, cfg) -> SuiteResult:
    t0 = time.perf_counter()
    dev, details = SUITES[name](cfg)
    return SuiteResult(name, float(dev), details, time.perf_counter() - t0)


def run_all(cfg):
    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    return [run_suite(name, cfg) for name in names]
