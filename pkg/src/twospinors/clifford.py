"""4-spinors and the Clifford module map into their endomorphisms.

A 4-spinor is a direct sum of a spinor and a conjugate spinor, flattened to
four complex coefficients in the basis order (e1, e2, e1bar, e2bar).  The
module map phi sends a bitensor to a 4x4 endomorphism; on Hermitian inputs
the images satisfy the anticommutation relation

    phi(X) phi(Y) + phi(Y) phi(X) = 2 h(X, Y) Id

with the factor-2 normalization fixed so that gamma(0)**2 == Id.  The gamma
matrices are the images of the world basis and are computed from the module
map, never hard-coded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bitensor import BiTensor, MinkowskiVec, from_minkowski, h_form, pi_act, world_basis
from .spinor import CoSpinor2, SL2Element, Spinor2, eps, eps_bar

__all__ = [
    "FourSpinor",
    "phi",
    "gamma",
    "slash",
    "tau",
    "anticommutator_defect",
    "equivariance_defect",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FourSpinor:
    """Direct sum of a spinor and a conjugate spinor (a Dirac 4-spinor)."""

    s: Spinor2
    sbar: CoSpinor2

    @property
    def vec(self) -> np.ndarray:
        """Coefficients flattened in the basis order (e1, e2, e1bar, e2bar)."""
        return np.array([self.s.c1, self.s.c2, self.sbar.c1, self.sbar.c2])

    @classmethod
    def from_vec(cls, v) -> "FourSpinor":
        v = np.asarray(v)
        return cls(
            Spinor2(complex(v[0]), complex(v[1])),
            CoSpinor2(complex(v[2]), complex(v[3])),
        )

    def __add__(self, other: "FourSpinor") -> "FourSpinor":
        return FourSpinor(self.s + other.s, self.sbar + other.sbar)

    def __sub__(self, other: "FourSpinor") -> "FourSpinor":
        return FourSpinor(self.s - other.s, self.sbar - other.sbar)

    def __mul__(self, scalar) -> "FourSpinor":
        return FourSpinor(self.s * scalar, self.sbar * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "FourSpinor":
        return FourSpinor(-self.s, -self.sbar)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vec))


@lru_cache(maxsize=1)
def _dyad_endomorphisms() -> np.ndarray:
    """Images of the four dyadic basis tensors under the module map.

    Each image is evaluated from the defining rule on a dyad (p, qbar)
    applied to a 4-spinor (a, bbar):

        sqrt(2) * [ eps_bar(bbar, qbar) * p  (+)  eps(p, a) * qbar ]

    and assembled column-by-column on the 4-spinor basis.  Shaped (2, 2, 4, 4).
    """
    e = (Spinor2(1, 0), Spinor2(0, 1))
    ebar = (CoSpinor2(1, 0), CoSpinor2(0, 1))
    zero_s, zero_co = Spinor2(0, 0), CoSpinor2(0, 0)
    four_basis = (
        FourSpinor(e[0], zero_co),
        FourSpinor(e[1], zero_co),
        FourSpinor(zero_s, ebar[0]),
        FourSpinor(zero_s, ebar[1]),
    )
    out = np.zeros((2, 2, 4, 4), dtype=complex)
    for i, p in enumerate(e):
        for j, qbar in enumerate(ebar):
            cols = []
            for w in four_basis:
                image = FourSpinor(
                    _SQRT2 * eps_bar(w.sbar, qbar) * p,
                    _SQRT2 * eps(p, w.s) * qbar,
                )
                cols.append(image.vec)
            out[i, j] = np.column_stack(cols)
    out.setflags(write=False)
    return out


def phi(T: BiTensor) -> np.ndarray:
    """Clifford module map: the 4x4 endomorphism acting by T.

    Linear extension of the dyadic rule over the coefficient matrix of T.
    """
    return np.einsum("ij,ijkl->kl", T.t, _dyad_endomorphisms())


@lru_cache(maxsize=1)
def _gamma_table() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    # Computed once from the module map; safe under concurrent first use
    # (worst case the table is built twice with identical contents).
    table = tuple(phi(u) for u in world_basis())
    for g in table:
        g.setflags(write=False)
    return table


def gamma(mu: int) -> np.ndarray:
    """Gamma matrix with index mu in 0..3: the module image of the world basis.

    Satisfies gamma(0)**2 = Id, gamma(j)**2 = -Id for j > 0, and pairwise
    anticommutation.
    """
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be 0..3, got {mu}")
    return _gamma_table()[mu]


def _coords4(p) -> np.ndarray:
    c = p.coords if hasattr(p, "coords") else np.asarray(p, dtype=float)
    if c.shape != (4,):
        raise ValueError(f"expected 4 coordinates, got shape {c.shape}")
    return c


def slash(p) -> np.ndarray:
    """Contraction of a 4-vector with the gamma matrices.

    Accepts a world vector, a momentum, or a plain length-4 sequence.
    Squares to q_form(p) times the identity.
    """
    c = _coords4(p)
    g = _gamma_table()
    return c[0] * g[0] + c[1] * g[1] + c[2] * g[2] + c[3] * g[3]


def tau(A: SL2Element) -> np.ndarray:
    """Block-diagonal action on 4-spinors: A on the spinor block, conj(A)
    on the conjugate block."""
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = A.mat
    out[2:, 2:] = np.conj(A.mat)
    return out


def anticommutator_defect(X: BiTensor, Y: BiTensor) -> np.ndarray:
    """phi(X) phi(Y) + phi(Y) phi(X) - 2 h(X, Y) Id; zero for all bitensors."""
    px, py = phi(X), phi(Y)
    return px @ py + py @ px - 2.0 * h_form(X, Y) * np.eye(4)


def equivariance_defect(A: SL2Element, X: BiTensor) -> np.ndarray:
    """phi(pi_act(A, X)) - tau(A) phi(X) tau(A)^-1; zero for all inputs.

    The inverse of tau(A) is taken as tau of the adjugate inverse, which is
    exact for determinant-1 matrices.  The defect magnitude scales like
    norm(A)**4 times machine epsilon.
    """
    t, t_inv = tau(A), tau(A.inverse())
    return phi(pi_act(A, X)) - t @ phi(X) @ t_inv


def _slash_minkowski(x: MinkowskiVec) -> np.ndarray:
    # Equivalent route through the module map; used by consistency tests.
    return phi(from_minkowski(x))
