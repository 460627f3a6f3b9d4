"""From a symplectic pair of complex dimensions to Minkowski space.

The only inputs are a 2-dimensional complex space with a symplectic form
normalized on a dyad, and its conjugate.  Hermitian coefficient matrices of
the tensor product form a real 4-dimensional space, and the form built from
the symplectic areas of the two slots turns out to have Lorentz signature.
"""

import numpy as np

from twospinors import (
    ETA,
    MinkowskiVec,
    Spinor2,
    conjugate,
    cyclic_defect,
    elementary,
    eps,
    from_minkowski,
    h_form,
    involution_J,
    q_form,
    reality_defect,
    to_minkowski,
    world_basis,
)

e1, e2 = Spinor2(1, 0), Spinor2(0, 1)

print("The dyad is symplectically normalized:")
print("  eps(e1, e2) =", eps(e1, e2))

print("\nAny three spinors are linearly dependent with symplectic weights;")
print("the cyclic residual of a random triple is zero to rounding:")
rng = np.random.default_rng(0)
a, b, c = (Spinor2(complex(*rng.normal(size=2)), complex(*rng.normal(size=2))) for _ in range(3))
print("  |cyclic(a, b, c)| =", cyclic_defect(a, b, c).norm())

print("\nA dyadic tensor of a spinor with a conjugate spinor is an outer")
print("product of coefficient tuples; the reality involution is the")
print("conjugate transpose, and its fixed points are Hermitian matrices:")
T = elementary(Spinor2(1, 2), conjugate(Spinor2(3, 4j)))
print("  coefficients of (1,2) (x) conj(3,4i):\n", T.t)
print("  reality defect:", reality_defect(T))
print("  reality defect of T + J(T):", reality_defect(T + involution_J(T)))

print("\nThe world basis diagonalizes the induced bilinear form with")
print("signature (+,-,-,-) -- the Lorentz quadratic form emerges:")
u = world_basis()
gram = np.array([[h_form(u[i], u[j]).real for j in range(4)] for i in range(4)])
print(np.round(gram, 14))
print("  max |gram - eta| =", np.max(np.abs(gram - ETA)))

print("\nCoordinates round-trip through the Hermitian matrix picture:")
x = MinkowskiVec(2.0, 0.3, -1.2, 0.5)
print("  x          =", x.coords)
print("  back       =", to_minkowski(from_minkowski(x)).coords)
print("  q_form(x)  =", q_form(x), " (= x0^2 - x1^2 - x2^2 - x3^2)")
print("  h(T, T)    =", h_form(from_minkowski(x), from_minkowski(x)).real)
