"""The Jacobi algebra as 4x4 matrices, the group law and its action on C x H."""
import numpy as np

from jacobigroup.group import (
    GroupElement,
    PointCH,
    algebra_basis,
    check_structure_constants,
    compose,
    embed,
    jacobi_action,
)

# %% six integer matrices; every bracket is checked in integer arithmetic
B = algebra_basis()
for name, X in B.items():
    print(name, X.astype(int).tolist())
rep = check_structure_constants()
print("largest bracket deviation:", rep["max_deviation"])

# [P, Q] = 2R is the Heisenberg part, H, F, G span sl(2)
br = lambda x, y: B[x] @ B[y] - B[y] @ B[x]
print("[P,Q] == 2R:", np.array_equal(br("P", "Q"), 2 * B["R"]))
print("[H,F] == 2F:", np.array_equal(br("H", "F"), 2 * B["F"]))

# %% group elements ((lambda, mu, kappa), M) and the embedding
rng = np.random.default_rng(1)


def random_element():
    a, b, c = rng.uniform(-1.5, 1.5, 3)
    a = a if abs(a) > 0.2 else 0.7
    return GroupElement(*rng.uniform(-2, 2, 3), M=((a, b), (c, (1 + b * c) / a)))


g1, g2 = random_element(), random_element()
print("embedding is a homomorphism:", np.abs(embed(g1) @ embed(g2) - embed(compose(g1, g2))).max())

# %% the action (z, tau) -> (z_g, tau_g) with its automorphy factor
p = PointCH(0.3 - 0.2j, 0.1 + 0.9j)
k, m = 3, 0.25
q2, J2 = jacobi_action(g2, p, m, k)
q12, J1 = jacobi_action(g1, q2, m, k)
q, J = jacobi_action(compose(g1, g2), p, m, k)
print("point after g1(g2 p):", q12.z, q12.tau)
print("point after (g1 g2) p:", q.z, q.tau)
print("cocycle defect |J - J1 J2| / |J| =", abs(J - J1 * J2) / abs(J))

# half-integer weight: principal branch, so only |J| multiplies
_, J2h = jacobi_action(g2, p, m, 2.5)
_, J1h = jacobi_action(g1, q2, m, 2.5)
_, Jh = jacobi_action(compose(g1, g2), p, m, 2.5)
print("k = 5/2, |J| ratio:", abs(Jh) / (abs(J1h) * abs(J2h)), " phase ratio:", Jh / (J1h * J2h))
