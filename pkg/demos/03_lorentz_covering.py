"""The two-to-one covering of the Lorentz group by unimodular 2x2 matrices.

Conjugation on bitensors restricts to the Hermitian subspace as a Lorentz
transformation; diagonal phases cover rotations, positive diagonal matrices
cover boosts, and a matrix and its negative cover the same transformation.
"""

import cmath
import math

import numpy as np

from twospinors import ETA, SL2Element, lorentz_of

np.set_printoptions(precision=6, suppress=True)

print("A diagonal phase pair covers a rotation by twice the phase angle:")
t = math.pi / 6
rot = lorentz_of(SL2Element([[cmath.exp(1j * t), 0], [0, cmath.exp(-1j * t)]]))
print(rot.mat)
print(f"  (rotation by {math.degrees(2 * t):.0f} degrees in the (x1, x2) plane)")

print("\nA positive diagonal matrix covers a boost along x3:")
boost = lorentz_of(SL2Element(np.diag([math.sqrt(2), 1 / math.sqrt(2)])))
print(boost.mat)
print("  time-time entry 1.25 = cosh(ln 2), mixing entry 0.75 = sinh(ln 2)")

print("\nThe covering is a homomorphism:")
A = SL2Element([[1, 0.5], [0, 1]])
B = SL2Element([[1, 0], [-0.3j, 1]])
d = np.max(np.abs(lorentz_of(A @ B).mat - lorentz_of(A).mat @ lorentz_of(B).mat))
print("  |Lambda(AB) - Lambda(A) Lambda(B)| max entry:", d)

print("\n...and exactly two-to-one:")
print("  Lambda(A) == Lambda(-A):", np.array_equal(lorentz_of(A).mat, lorentz_of(-A).mat))

print("\nEvery image preserves the metric:")
m = lorentz_of(A).mat
print("  |Lambda^T eta Lambda - eta| max entry:", np.max(np.abs(m.T @ ETA @ m - ETA)))
