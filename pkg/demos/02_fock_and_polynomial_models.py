"""Two realizations of the same representations: truncated matrices and
differential operators on polynomials."""
import math

import numpy as np

from jacobigroup.ds import build_ds_generators, ds_casimir, intertwine_check_ds, sigma_k_apply
from jacobigroup.operators import commutator, interior_indices
from jacobigroup.polynomials import BivarPoly
from jacobigroup.sw import build_sw_generators, f_poly, generating_residual, heat_pde_residual, intertwine_check_sw

# %% Schrodinger-Weil: a, a^dag and K = quadratic in them
g = build_sw_generators(12)
print("K0 diagonal:", np.diag(g.K0.matrix)[:6].real)
C = commutator(g.a, g.a_dag).matrix.real
print("[a, a^dag] diagonal:", np.diag(C))  # last entry is the truncation edge, -N

blk = interior_indices(g.basis, 2)
dev = np.abs(commutator(g.K_minus, g.K_plus).block(blk) - 2 * g.K0.block(blk)).max()
print("[K-, K+] = 2 K0 on grades <= N-2:", dev)

# %% the holomorphic model: f_n(alpha, w) are the Taylor coefficients of exp(alpha z + w z^2/2)
for n in range(4):
    print(f"f_{n} =", f_poly(n))
print("generating function residual, 40 terms:", generating_residual(0.9, 0.8 - 0.3j, 0.45j, 40))
print("every f_n solves the heat equation exactly (sympy, n <= 20):",
      all(heat_pde_residual(f_poly(n, exact=True)).is_zero() for n in range(21)))
print("polynomial operators vs Fock matrices, N = 16:", intertwine_check_sw(16)["max"])

# %% discrete series: two ladders, labels (n', n)
k = 3.0
gd = build_ds_generators(k, 4)
print("first DS labels:", gd.basis.labels[:8])
print("K- (0,1) -> (0,0):", gd.K_minus.entry((0, 0), (0, 1)), "= sqrt(k - 1/2) =", math.sqrt(k - 0.5))

one = BivarPoly.constant(1.0, ("z", "zeta"))
print("sigma_k(K+) 1 =", sigma_k_apply(k, "K_plus", one))
print("DS intertwining, D = 8:", intertwine_check_ds(k, 8)["max"])

for kk in (1.7, 2.5, 3.0, 4.25):
    _, expected, dev = ds_casimir(kk, 10)
    print(f"k = {kk}: Casimir {expected:+.6f}, interior deviation {dev:.1e}")
