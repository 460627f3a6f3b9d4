"""Gamma matrices computed from the Clifford module map, never hard-coded.

The module map phi sends each bitensor to an endomorphism of the 4-spinor
space; the images of the world basis are the gamma matrices and all the
standard relations follow from the construction.
"""

import numpy as np

from twospinors import ETA, anticommutator_defect, gamma, q_form, slash, world_basis

np.set_printoptions(precision=3, suppress=True)

for mu in range(4):
    print(f"gamma({mu}) =")
    print(gamma(mu))
    print()

print("Anticommutation table {gamma_mu, gamma_nu} = 2 eta_mu_nu Id:")
worst = 0.0
for mu in range(4):
    for nu in range(4):
        d = np.max(np.abs(gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu) - 2 * ETA[mu, nu] * np.eye(4)))
        worst = max(worst, d)
print("  max residual over all 16 pairs:", worst)

print("\nThe contraction with any 4-vector squares to the quadratic form:")
rng = np.random.default_rng(1)
p = rng.uniform(-5, 5, 4)
print("  p        =", p)
print("  Q(p)     =", q_form(p))
sq = slash(p) @ slash(p)
print("  slash(p)^2 - Q(p) Id, max entry:", np.max(np.abs(sq - q_form(p) * np.eye(4))))

print("\nThe anticommutation identity holds for arbitrary bitensors, not")
print("just Hermitian ones; a random pair of world vectors gives:")
u = world_basis()
print("  defect(u1, u2) max entry:", np.max(np.abs(anticommutator_defect(u[1], u[2]))))
