"""Quadrature covariances of squeezed number states and the disk of squeezing."""
import numpy as np

from jacobigroup.observables import covariance_closed, covariance_numeric, is_squeezed, squeezing_disk
from jacobigroup.squeezing import SqueezeParams
from jacobigroup.sw import SWIndex

hbar = SWIndex().hbar

# %% closed forms vs the truncated-matrix computation
for n in range(4):
    w, alpha = 0.4 - 0.3j, 1.2 + 0.4j
    c = covariance_closed(n, w, hbar)
    x = covariance_numeric(n, SqueezeParams(alpha, w))
    print(f"n={n}: sigma_qq {c.sigma_qq:.10f} / {x.sigma_qq:.10f}, sigma_pq {c.sigma_pq:+.10f} / {x.sigma_pq:+.10f}")

# the uncertainty product is pinned at n0 hbar, whatever w is
for w in (0.0, 0.5, -0.8j, 0.3 + 0.6j):
    c = covariance_closed(2, w, hbar)
    print(f"w = {w}: sigma_qq sigma_pp - sigma_pq^2 - (n0 hbar)^2 = {c.product_check:.1e}")

# %% where is sigma_qq below the vacuum value hbar/2? an ascii map of the unit disk
for n in (0, 1):
    d = squeezing_disk(n)
    print(f"\nn = {n}: disk centre {d.center.real}, radius {d.radius}")
    for y in np.linspace(0.95, -0.95, 15):
        row = ""
        for x in np.linspace(-0.98, 0.98, 41):
            w = complex(x, y)
            row += " " if abs(w) >= 1 else ("#" if is_squeezed(n, w) else ".")
        print(row)
