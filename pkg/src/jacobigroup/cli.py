"""Command-line front end.

Commands: verify, mandel-grid, squeeze-disk, matrix-element, covariance, casimir.
Exit codes: 0 success, 1 tolerance failure (verify), 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .ds import ds_casimir
from .errors import JacobiError
from .observables import (
    covariance_closed,
    is_squeezed,
    mandel_q_closed,
    mandel_q_numeric,
    mandel_zero_radius,
    squeezing_disk,
    u_plus_minus,
)
from .operators import ds_basis, sw_basis
from .squeezing import displacement, displacement_me_closed, squeeze, squeeze_me_closed
from .sw import DEFAULT_M, SWIndex
from .verify import SUITES, casimir_level, run_all

COMMANDS = ("verify", "mandel-grid", "squeeze-disk", "matrix-element", "covariance", "casimir")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    cutoff: int = 64
    tol: float = 1e-8
    k: float = 3.0
    m: float = DEFAULT_M
    n: int = 0
    n_prime: int = 0
    alpha: complex = 0j
    w: complex = 0j
    grid_r: int | None = None
    grid_theta: int | None = None
    w_max: float = 0.6
    fmt: str = "json"
    out: str | None = None
    suite: str = "all"
    seed: int = 0
    rep: str = "sw"
    op: str = "displacement"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.cutoff < 4:
            raise ConfigError("--cutoff must be >= 4")
        if not 0 < self.tol <= 1e-2:
            raise ConfigError("--tol must satisfy 0 < tol <= 1e-2")
        if not abs(self.w) < 1:
            raise ConfigError("|w| must be < 1")
        if self.m == 0:
            raise ConfigError("--m must be nonzero")
        if self.n < 0 or self.n_prime < 0:
            raise ConfigError("indices must be non-negative")
        if self.suite != "all" and self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("--format must be csv or json")
        for g in (self.grid_r, self.grid_theta):
            if g is not None and g < 1:
                raise ConfigError("grid counts must be positive")
        if not 0 < self.w_max < 1:
            raise ConfigError("--w-max must lie in (0, 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jacobigroup", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--cutoff", type=int, default=64)
    parser.add_argument("--tol", type=float, default=1e-8)
    parser.add_argument("--k", type=float, default=3.0)
    parser.add_argument("--m", type=float, default=DEFAULT_M)
    parser.add_argument("--n", type=int, default=0)
    parser.add_argument("--nprime", type=int, default=0)
    parser.add_argument("--alpha-re", type=float, default=0.0)
    parser.add_argument("--alpha-im", type=float, default=0.0)
    parser.add_argument("--w-re", type=float, default=0.0)
    parser.add_argument("--w-im", type=float, default=0.0)
    parser.add_argument("--grid-r", type=int, default=None, help="radial grid count (mandel-grid)")
    parser.add_argument("--grid-theta", type=int, default=None, help="angular grid count (mandel-grid)")
    parser.add_argument("--w-max", type=float, default=0.6, help="outer grid radius (mandel-grid)")
    parser.add_argument("--format", dest="fmt", choices=("csv", "json"), default="json")
    parser.add_argument("--out", default=None, metavar="PATH")
    parser.add_argument("--suite", default="all", help="verify suite: all, " + ", ".join(SUITES))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--rep", choices=("sw", "ds"), default="sw", help="matrix-element representation")
    parser.add_argument("--op", choices=("displacement", "squeeze"), default="displacement", help="matrix-element operator")
    return parser


def config_from_args(ns) -> RunConfig:
    return RunConfig(
        command=ns.command,
        cutoff=ns.cutoff,
        tol=ns.tol,
        k=ns.k,
        m=ns.m,
        n=ns.n,
        n_prime=ns.nprime,
        alpha=complex(ns.alpha_re, ns.alpha_im),
        w=complex(ns.w_re, ns.w_im),
        grid_r=ns.grid_r,
        grid_theta=ns.grid_theta,
        w_max=ns.w_max,
        fmt=ns.fmt,
        out=ns.out,
        suite=ns.suite,
        seed=ns.seed,
        rep=ns.rep,
        op=ns.op,
    )


# -- formatting ---------------------------------------------------------------------

def _num(x):
    if x is None:
        return None
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    return x if np.isfinite(x) else None  # JSON has no inf; a null deviation reads as "not measured"


def split_complex(key, z) -> dict:
    if z is None:
        return {f"{key}_re": None, f"{key}_im": None}
    z = complex(z)
    return {f"{key}_re": z.real, f"{key}_im": z.imag}


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def render(rows, fmt, json_payload=None) -> str:
    """Rows of flat dicts as CSV, or ``json_payload`` (default: the rows) as JSON."""
    if fmt == "json":
        payload = rows if json_payload is None else json_payload
        return json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    if rows:
        keys = list(rows[0])
        writer.writerow(keys)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in keys])
    return buf.getvalue()


# -- commands -------------------------------------------------------------------------

def cmd_verify(cfg):
    results = run_all(cfg)
    rows = [
        {
            "suite": r.name,
            "max_deviation": _num(r.max_deviation),
            "tol": cfg.tol,
            "passed": r.passed(cfg.tol),
            "seconds": round(r.seconds, 3),
        }
        for r in results
    ]
    ok = all(r["passed"] for r in rows)
    payload = {
        "passed": ok,
        "suites": [dict(row, details={k: _num(v) for k, v in r.details.items()}) for row, r in zip(rows, results)],
    }
    return render(rows, cfg.fmt, payload), 0 if ok else 1


def _grid_points(cfg):
    if cfg.grid_r is None and cfg.grid_theta is None:
        return [cfg.w]
    nr, nt = cfg.grid_r or 1, cfg.grid_theta or 1
    return [
        cfg.w_max * (i + 1) / nr * np.exp(2j * np.pi * j / nt)
        for i in range(nr)
        for j in range(nt)
    ]


def cmd_mandel_grid(cfg):
    try:
        zero = mandel_zero_radius(cfg.n)
    except JacobiError:
        zero = None
    rows = []
    for w in _grid_points(cfg):
        row = {**split_complex("w", w), **split_complex("alpha", cfg.alpha), "n": cfg.n}
        try:
            qc = mandel_q_closed(cfg.alpha, w, cfg.n)
            qn = mandel_q_numeric(cfg.alpha, w, cfg.n)
            row.update(Q_closed=qc, Q_numeric=qn, abs_diff=abs(qc - qn), reason=None)
        except ZeroDivisionError as exc:
            row.update(Q_closed=None, Q_numeric=None, abs_diff=None, reason=str(exc))
        row["zero_radius"] = zero
        rows.append(row)
    return render(rows, cfg.fmt), 0


def cmd_squeeze_disk(cfg):
    disk = squeezing_disk(cfg.n)
    n0 = cfg.n + 0.5
    # half-step angular offset keeps every sample away from the tangency point w = -1
    t = 2 * np.pi * (np.arange(64) + 0.5) / 64
    pts = disk.center + disk.radius * np.exp(1j * t)
    head = {"n": cfg.n, **split_complex("center", disk.center), "radius": disk.radius}
    boundary = [{**split_complex("w", w), "two_n0_u_plus": 2 * n0 * u_plus_minus(w)[0]} for w in pts]
    rows = [{**head, **b} for b in boundary]
    return render(rows, cfg.fmt, {**head, "boundary": boundary}), 0


def cmd_matrix_element(cfg):
    closed = None
    if cfg.rep == "sw":
        B = sw_basis(max(cfg.cutoff, cfg.n, cfg.n_prime))
        if cfg.op == "displacement":
            numeric = displacement(cfg.alpha, B).entry(cfg.n_prime, cfg.n)
            closed = displacement_me_closed(cfg.n_prime, cfg.n, cfg.alpha)
        else:
            numeric = squeeze(cfg.w, B).entry(cfg.n_prime, cfg.n)
    else:
        if cfg.k <= 0.5:
            raise ConfigError("k must exceed 1/2")
        B = ds_basis(cfg.k, max(cfg.n, cfg.n_prime, 2))
        if cfg.op == "squeeze":
            numeric = squeeze(cfg.w, B).entry((0, cfg.n_prime), (0, cfg.n))
            if cfg.n_prime >= cfg.n:
                closed = squeeze_me_closed(cfg.k, cfg.n, cfg.n_prime, cfg.w)
            else:
                closed = squeeze_me_closed(cfg.k, cfg.n_prime, cfg.n, -cfg.w).conjugate()
        else:
            B = ds_basis(cfg.k, max(cfg.cutoff // 2, cfg.n, cfg.n_prime))
            numeric = displacement(cfg.alpha, B).entry((cfg.n_prime, 0), (cfg.n, 0))
            closed = displacement_me_closed(cfg.n_prime, cfg.n, cfg.alpha)
    ratio = None if closed is None or numeric == 0 else closed / numeric
    rec = {
        **split_complex("closed", closed),
        **split_complex("numeric", numeric),
        **split_complex("ratio", ratio),
        "abs_diff": None if closed is None else abs(closed - numeric),
    }
    return render([rec], cfg.fmt, rec), 0


def cmd_covariance(cfg):
    hbar = SWIndex(cfg.m).hbar
    c = covariance_closed(cfg.n, cfg.w, hbar)
    rec = {
        "sigma_qq": c.sigma_qq,
        "sigma_pp": c.sigma_pp,
        "sigma_pq": c.sigma_pq,
        "hbar": hbar,
        "product_check": c.product_check,
        "squeezed": is_squeezed(cfg.n, cfg.w),
    }
    return render([rec], cfg.fmt, rec), 0


def cmd_casimir(cfg):
    if cfg.k <= 0.5:
        raise ConfigError("k must exceed 1/2")
    level = casimir_level(cfg.cutoff)
    _, expected, dev = ds_casimir(cfg.k, level)
    rec = {"k": cfg.k, "level": level, "expected": expected, "max_deviation": dev, "passed": dev <= cfg.tol}
    return render([rec], cfg.fmt, rec), 0 if dev <= cfg.tol else 1


HANDLERS = {
    "verify": cmd_verify,
    "mandel-grid": cmd_mandel_grid,
    "squeeze-disk": cmd_squeeze_disk,
    "matrix-element": cmd_matrix_element,
    "covariance": cmd_covariance,
    "casimir": cmd_casimir,
}


def run(cfg: RunConfig):
    """Execute a configuration; returns ``(text, exit_code)``."""
    return HANDLERS[cfg.command](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        text, code = run(cfg)
    except (ConfigError, JacobiError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
