"""Displacement and squeeze operators on a truncated Fock space: how exact are
they, and where does truncation bite."""
import numpy as np

from jacobigroup.operators import column_leakage, expm_dense, leading_block, sw_basis
from jacobigroup.squeezing import (
    SqueezeParams,
    displacement,
    displacement_factored,
    generators_for,
    squeeze,
    squeeze_me_closed,
    squeeze_me_oracle,
    squeezed_state,
)

B = sw_basis(64)
g = generators_for(B)

# %% D(alpha): truncation leaks high columns only
alpha = 2.0
D = displacement(alpha, B)
lk = column_leakage(D)
print("column leakage of D(2) at N = 64, every 8th column:", np.array2string(lk[::8], precision=1))
blk = leading_block(D, 1e-10)
print("columns within a 1e-10 budget:", len(blk))

E = expm_dense(alpha * g.a_dag - alpha * g.a)
print("D vs dense exponential on that block:", np.abs(D.block(blk) - E.block(blk)).max())

# %% the literal product exp(alpha a^dag) exp(-alpha a) loses digits in far columns
F = displacement_factored(alpha, sw_basis(160))
Dl = displacement(alpha, sw_basis(160))
gap = np.abs(F.matrix - Dl.matrix).max(axis=0)
for col in (10, 30, 50, 70):
    print(f"column {col}: factored product off by {gap[col]:.1e}")

# %% S(w): vacuum overlap (1 - |w|^2)^(1/4), and unitarity on the leading block
w = 0.5 - 0.2j
S = squeeze(w, B)
print("<0|S|0> =", S.entry(0, 0), " expected", (1 - abs(w) ** 2) ** 0.25)
sb = leading_block(S, 1e-10)
U = (S.dag @ S).block(sb)
print(f"S^dag S - I on {len(sb)} columns:", np.abs(U - np.eye(len(sb))).max())

# %% squeezed states and their leakage
for n in range(4):
    psi = squeezed_state(SqueezeParams(1.5 + 0.5j, 0.6), sw_basis(128), n)
    print(f"T(alpha, w) phi_{n}: leakage {psi.leakage:.1e}")

# %% discrete-series squeeze elements against the hypergeometric closed form
k = 3.0
for wv in (0.2, 0.5j, -0.7):
    closed = squeeze_me_closed(k, 1, 3, wv)
    raw = squeeze_me_oracle(k, 1, 3, wv)
    stripped = squeeze_me_oracle(k, 1, 3, wv, strip_vacuum=True)
    print(f"w = {wv}: closed/raw = {abs(closed / raw):.12f}, closed/stripped = {abs(closed / stripped):.12f}")
# the raw ratio drifts with |w| by (1 - |w|^2)^(-1/4); the closed form is the su(1,1) part alone
