"""2-spinors, their conjugates, the symplectic form, and SL(2,C) actions.

Coefficients live in a fixed symplectic basis (dyad) {e1, e2}, normalized so
that eps(e1, e2) = 1.  A conjugate spinor stores the *conjugated* coefficient
tuple in the conjugate dyad {e1bar, e2bar}: conjugation is an actual data
transformation, and the conjugate symplectic form is then the same
determinant formula on the stored tuples.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Spinor2",
    "CoSpinor2",
    "SL2Element",
    "SL2_DET_TOL",
    "conjugate",
    "eps",
    "eps_bar",
    "cyclic_defect",
    "act",
    "act_bar",
]

# Determinant drift allowed at SL2Element construction.
SL2_DET_TOL = 1e-12


@dataclass(frozen=True)
class _CoeffPair:
    """A pair of complex coefficients with componentwise arithmetic."""

    c1: complex
    c2: complex

    def __post_init__(self):
        c1, c2 = complex(self.c1), complex(self.c2)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        if not all(map(math.isfinite, (c1.real, c1.imag, c2.real, c2.imag))):
            raise ValueError(f"{type(self).__name__} components must be finite")

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.c1, self.c2])

    @classmethod
    def from_vec(cls, v):
        v = np.asarray(v)
        return cls(complex(v[0]), complex(v[1]))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, scalar):
        return type(self)(self.c1 * scalar, self.c2 * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.c1, -self.c2)

    def norm(self) -> float:
        return math.hypot(abs(self.c1), abs(self.c2))


@dataclass(frozen=True)
class Spinor2(_CoeffPair):
    """Element of the 2-spinor space S, as coefficients of {e1, e2}."""


@dataclass(frozen=True)
class CoSpinor2(_CoeffPair):
    """Element of the conjugate space, as coefficients of {e1bar, e2bar}."""


def conjugate(s):
    """Conjugation map between the spinor space and its conjugate.

    The stored coefficients are complex-conjugated, so the map is an
    involution and is conjugate-linear: conjugate(a*s) == conj(a)*conjugate(s).
    """
    if isinstance(s, Spinor2):
        return CoSpinor2(s.c1.conjugate(), s.c2.conjugate())
    if isinstance(s, CoSpinor2):
        return Spinor2(s.c1.conjugate(), s.c2.conjugate())
    raise TypeError(f"cannot conjugate {type(s).__name__}")


def eps(x: Spinor2, y: Spinor2) -> complex:
    """Symplectic form on S: the determinant x1*y2 - x2*y1 of the pair."""
    return x.c1 * y.c2 - x.c2 * y.c1


def eps_bar(xbar: CoSpinor2, ybar: CoSpinor2) -> complex:
    """Symplectic form on the conjugate space, on the stored coefficients.

    Satisfies eps_bar(conjugate(x), conjugate(y)) == conj(eps(x, y)).
    """
    return xbar.c1 * ybar.c2 - xbar.c2 * ybar.c1


def cyclic_defect(a: Spinor2, b: Spinor2, c: Spinor2) -> Spinor2:
    """Residual eps(b,c)*a + eps(c,a)*b + eps(a,b)*c.

    Any three vectors of a 2-dimensional space are linearly dependent with
    these symplectic coefficients, so the result is zero up to rounding.
    """
    kbc, kca, kab = eps(b, c), eps(c, a), eps(a, b)
    return Spinor2(
        kbc * a.c1 + kca * b.c1 + kab * c.c1,
        kbc * a.c2 + kca * b.c2 + kab * c.c2,
    )


class SL2Element:
    """A 2x2 complex matrix of determinant 1 (checked at construction).

    The coefficient matrix is stored read-only; instances are immutable and
    safe to share across threads.
    """

    __slots__ = ("mat",)

    def __init__(self, mat):
        m = np.array(mat, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(d - 1.0) > SL2_DET_TOL:
            raise ValueError(
                f"determinant {d} differs from 1 by more than {SL2_DET_TOL}; "
                "renormalize first"
            )
        m.setflags(write=False)
        self.mat = m

    @property
    def det(self) -> complex:
        m = self.mat
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]

    @classmethod
    def identity(cls) -> "SL2Element":
        return cls(np.eye(2))

    @classmethod
    def renormalized(cls, mat) -> "SL2Element":
        """Divide by the principal square root of the determinant.

        Intended for long products whose determinant has drifted at the
        machine-epsilon scale.
        """
        m = np.array(mat, dtype=complex)
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if d == 0:
            raise ValueError("cannot renormalize a singular matrix")
        return cls(m / cmath.sqrt(d))

    def renormalize(self) -> "SL2Element":
        return SL2Element.renormalized(self.mat)

    def inverse(self) -> "SL2Element":
        # det == 1, so the inverse is the adjugate: exact entry swaps.
        m = self.mat
        return SL2Element([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])

    def conj(self) -> "SL2Element":
        """Entrywise conjugate; the matrix of the conjugate transformation."""
        return SL2Element(np.conj(self.mat))

    def __matmul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(self.mat @ other.mat)

    def __neg__(self) -> "SL2Element":
        return SL2Element(-self.mat)

    def __repr__(self) -> str:
        return f"SL2Element({self.mat.tolist()!r})"


def act(A: SL2Element, s: Spinor2) -> Spinor2:
    """Apply a unimodular transformation to a spinor."""
    v = A.mat @ s.vec
    return Spinor2(v[0], v[1])


def act_bar(A: SL2Element, sbar: CoSpinor2) -> CoSpinor2:
    """Apply the conjugate transformation to a conjugate spinor.

    Intertwines with conjugation: act_bar(A, conjugate(s)) == conjugate(act(A, s)).
    """
    v = np.conj(A.mat) @ sbar.vec
    return CoSpinor2(v[0], v[1])
