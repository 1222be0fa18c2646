"""Photon statistics of squeezed number states through Mandel's Q."""
import numpy as np

from jacobigroup.errors import VacuumError
from jacobigroup.observables import mandel_q_closed, mandel_q_numeric, mandel_zero_radius

# %% coherent states are Poissonian, number states maximally sub-Poissonian
print("Q(alpha=1, w=0, n=0) =", mandel_q_numeric(1.0, 0, 0))
print("Q(alpha=0, w=0, n=2) =", mandel_q_numeric(0, 0, 2))

# closed form against the expectation engine
rng = np.random.default_rng(7)
worst = 0.0
for _ in range(50):
    al = 2 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    w = 0.6 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    n = int(rng.integers(0, 4))
    worst = max(worst, abs(mandel_q_closed(al, w, n) - mandel_q_numeric(al, w, n)))
print("closed vs engine over 50 random points:", worst)

# %% without displacement, squeezing turns number states from sub- to super-Poissonian
for n in range(4):
    rho = mandel_zero_radius(n)
    qs = []
    for r in (0.1, 0.3, 0.5, 0.7):
        try:
            qs.append(f"{mandel_q_closed(0, r, n):+.3f}")
        except VacuumError:
            qs.append("undef")
    print(f"n = {n}: Q(0, |w|) at 0.1/0.3/0.5/0.7 = {qs}, sign change at |w| = {rho:.4f}")

# for n = 0 the root sits at w = 0, which is the vacuum itself
try:
    mandel_q_closed(0, 0.0, 0)
except VacuumError as exc:
    print("n = 0 at the root:", exc)
print("squeezed vacuum Q(0, 0.5, 0) =", mandel_q_closed(0, 0.5, 0), "= (1+|w|^2)/(1-|w|^2)")
