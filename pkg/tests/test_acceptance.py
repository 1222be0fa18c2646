"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py`` for the bare report.
"""

import math
import sys
import time

import numpy as np

from jacobigroup.cli import RunConfig
from jacobigroup.ds import build_ds_generators, ds_casimir, intertwine_check_ds
from jacobigroup.group import check_structure_constants
from jacobigroup.observables import (
    covariance_closed,
    covariance_numeric,
    mandel_q_closed,
    mandel_q_numeric,
    mandel_zero_radius,
)
from jacobigroup.operators import expm_dense, max_abs, sw_basis
from jacobigroup.squeezing import (
    SqueezeParams,
    displacement,
    displacement_factored,
    generators_for,
    squeeze,
    squeeze_me_normalization,
)
from jacobigroup.sw import SWIndex, build_sw_generators, f_poly, generating_residual, heat_pde_residual, intertwine_check_sw
from jacobigroup.verify import (
    STANDARD_WEIGHTS,
    disk_disagreements,
    ratio_w_values,
    run_all,
    su11_boson_deviations,
    transformed_vs_conjugation,
    unitarity_defect,
)

REPORT = []


def report(num, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {detail}"
    REPORT.append(line)
    print(line)
    return ok


def disk_samples(rmax, radial=4, angular=8):
    """Deterministic polar grid on |z| <= rmax, including the rim."""
    pts = [0j]
    for i in range(1, radial + 1):
        for j in range(angular):
            pts.append(rmax * i / radial * np.exp(2j * np.pi * (j + 0.5 * (i % 2)) / angular))
    return pts


def test_criterion_01_structure_constants():
    t0 = time.perf_counter()
    dev = check_structure_constants()["max_deviation"]
    dt = time.perf_counter() - t0
    ok = dev == 0 and dt < 1.0
    assert report(1, ok, f"15 brackets, max deviation {dev} (exact), {dt:.3f} s < 1 s")


def test_criterion_02_boson_relations():
    t0 = time.perf_counter()
    devs = {"sw N=32": max(su11_boson_deviations(build_sw_generators(32)).values())}
    for k in STANDARD_WEIGHTS:
        devs[f"ds k={k}"] = max(su11_boson_deviations(build_ds_generators(k, 10)).values())
    dt = time.perf_counter() - t0
    worst = max(devs.values())
    ok = worst <= 1e-12 and dt < 5.0
    assert report(2, ok, f"max interior deviation {worst:.2e} <= 1e-12 (SW N=32, DS D=10 x4 weights), {dt:.2f} s < 5 s")


def test_criterion_03_casimir():
    devs = {}
    for k in STANDARD_WEIGHTS:
        _, expected, dev = ds_casimir(k, 10)
        devs[k] = (expected, dev)
    worst = max(d for _, d in devs.values())
    exp25, dev25 = devs[2.5]
    ok = worst <= 1e-10 and exp25 == 0 and dev25 <= 1e-12
    assert report(3, ok, f"max deviation {worst:.2e} <= 1e-10; k=5/2 expected {exp25}, deviation {dev25:.2e} <= 1e-12")


def test_criterion_04_intertwining():
    sw = intertwine_check_sw(16)["max"]
    ds = max(intertwine_check_ds(k, 8)["max"] for k in STANDARD_WEIGHTS)
    ok = max(sw, ds) <= 1e-12
    assert report(4, ok, f"polynomial-model vs matrices: SW N=16 {sw:.2e}, DS D=8 {ds:.2e} <= 1e-12")


def test_criterion_05_generating_function_and_heat_pde():
    worst = 0.0
    for z in disk_samples(1.0):
        for al in disk_samples(1.0, 2, 6):
            for w in disk_samples(0.5, 2, 6):
                worst = max(worst, generating_residual(z, al, w, 40))
    nonzero = [n for n in range(21) if not heat_pde_residual(f_poly(n, exact=True)).is_zero()]
    ok = worst < 1e-10 and not nonzero
    assert report(5, ok, f"40-term residual {worst:.2e} < 1e-10; heat PDE exactly zero for n <= 20 (failures: {nonzero})")


def test_criterion_06_unitarity():
    B = sw_basis(64)
    g = generators_for(B)
    udev, edev, fdev, blocks, fblocks = 0.0, 0.0, 0.0, [], []
    for al in disk_samples(2.0, 2, 6)[1:]:
        E = expm_dense(al * g.a_dag - np.conj(al) * g.a)
        for U, dev_blocks in ((displacement(al, B), blocks), (displacement_factored(al, B), fblocks)):
            dev, n = unitarity_defect(U)
            blk = np.arange(n)
            gap = max_abs(U.block(blk) - E.block(blk))
            udev = max(udev, dev)
            if dev_blocks is blocks:
                edev = max(edev, gap)
            else:
                fdev = max(fdev, gap)
            dev_blocks.append(n)
    for w in disk_samples(0.6, 2, 6)[1:]:
        dev, n = unitarity_defect(squeeze(w, B))
        udev = max(udev, dev)
        blocks.append(n)
    ok = udev <= 1e-8 and edev <= 1e-9 and fdev <= 1e-9
    assert report(
        6,
        ok,
        f"U^dag U - I {udev:.2e} <= 1e-8 (blocks {min(blocks)}..{max(blocks)} columns); vs expm: factored product "
        f"{fdev:.2e} (blocks >= {min(fblocks)}), Laguerre-evaluated D {edev:.2e} <= 1e-9",
    )


def test_criterion_07_squeeze_element_constant():
    ws = ratio_w_values(20, 0.8)
    spread, const, full_spread = 0.0, [], 0.0
    for k in (2.0, 3.0, 4.25):
        for n in range(7):
            for npr in range(n, 7):
                rep = squeeze_me_normalization(k, n, npr, ws)
                mean, s = rep["stripped"]
                spread = max(spread, s)
                const.append(mean)
                full_spread = max(full_spread, rep["full"][1])
    cdev = max(abs(c - 1) for c in const)
    ok = spread < 1e-9
    assert report(
        7,
        ok,
        f"ratio spread {spread:.2e} < 1e-9 over 20 w; constant = 1 (max |c-1| {cdev:.1e}) once the oscillator "
        f"vacuum factor (1-|w|^2)^(1/4) is divided out (raw-element ratio spread {full_spread:.2f})",
    )


def test_criterion_08_transformed_generators():
    gens = generators_for(sw_basis(96))
    worst, blocks = 0.0, []
    for al in disk_samples(1.5, 2, 4):
        for w in disk_samples(0.5, 2, 4)[::3]:
            dev, n = transformed_vs_conjugation(SqueezeParams(al, w), gens)
            worst = max(worst, dev)
            blocks.append(n)
    ok = worst <= 1e-8
    assert report(8, ok, f"closed vs conjugation {worst:.2e} <= 1e-8 (N=96, blocks >= {min(blocks)} columns)")


def test_criterion_09_covariances():
    idx = SWIndex()
    B = sw_basis(128)
    cov = 0.0
    for n in range(4):
        for al in disk_samples(2.0, 1, 3):
            for w in disk_samples(0.6, 1, 4):
                c = covariance_closed(n, w, idx.hbar)
                x = covariance_numeric(n, SqueezeParams(al, w), B, idx)
                cov = max(cov, abs(c.sigma_qq - x.sigma_qq), abs(c.sigma_pp - x.sigma_pp), abs(c.sigma_pq - x.sigma_pq))
    gap = max(abs(covariance_closed(0, w, idx.hbar).schrodinger_gap) for w in disk_samples(0.95, 4, 8))
    bad = sum(disk_disagreements(n, 32) for n in range(4))
    ok = cov <= 1e-8 and gap <= 1e-12 and bad == 0
    assert report(9, ok, f"closed vs numeric {cov:.2e} <= 1e-8; Schrodinger gap n=0 {gap:.1e} <= 1e-12; disk disagreements {bad}")


def test_criterion_10_mandel():
    B = sw_basis(128)
    sweep = 0.0
    for n in range(4):
        for al in disk_samples(2.0, 2, 4):
            for w in disk_samples(0.6, 2, 4):
                if n == 0 and abs(al) == 0 and abs(w) == 0:
                    continue  # vacuum: Q undefined
                sweep = max(sweep, abs(mandel_q_closed(al, w, n) - mandel_q_numeric(al, w, n, B)))
    red = max(
        [abs(mandel_q_closed(al, 0, 0)) for al in disk_samples(2.0)[1:]]
        + [abs(mandel_q_closed(np.exp(1j * t) / math.sqrt(2), 0, n)) for n in range(4) for t in np.linspace(0, 6, 7)]
    )
    zero_ok, notes = True, []
    for n in range(4):
        rho = mandel_zero_radius(n)
        try:
            q0 = mandel_q_closed(0, rho, n)
            lo, hi = mandel_q_closed(0, 0.9 * rho, n), mandel_q_closed(0, min(1.1 * rho, 0.999), n)
            good = abs(q0) <= 1e-10 and lo * hi < 0
            notes.append(f"n={n} |w|={rho:.4f} Q={q0:.1e}")
        except ZeroDivisionError:
            good = False
            notes.append(f"n={n} |w|={rho:g} is the vacuum, Q undefined and Q(0,w,0)=(1+|w|^2)/(1-|w|^2)>=1 has no zero")
        zero_ok &= good
    ok = sweep <= 1e-6 and red <= 1e-10 and zero_ok
    assert report(
        10,
        ok,
        f"closed Q vs numeric {sweep:.2e} <= 1e-6; Q(alpha,0) zeros {red:.1e} <= 1e-10; zero radius: " + "; ".join(notes),
    )


def test_criterion_11_verify_all_runtime():
    t0 = time.perf_counter()
    results = run_all(RunConfig("verify"))
    dt = time.perf_counter() - t0
    failed = [r.name for r in results if not r.passed(1e-8)]
    ok = dt < 60 and not failed
    assert report(11, ok, f"verify --suite all finished in {dt:.1f} s < 60 s; failing suites: {failed or 'none'}")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    status = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            status = 1
    sys.exit(status)
