"""Momentum space, the duality with world vectors, and the mass shell.

Momentum coordinates are stored in the dual basis, chosen so the duality
map is the identity on coordinate tuples; the type distinction keeps
position-like and momentum-like vectors separate.  The forward mass shell
for mass m is the orbit of (m, 0, 0, 0) under the unimodular action; every
shell point has a unique positive-definite Hermitian boost representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bitensor import from_minkowski, pi_act, q_form, to_minkowski, MinkowskiVec
from .errors import BadMass, Degenerate, NotOnShell
from .spinor import SL2Element

__all__ = [
    "Momentum",
    "MassShellPoint",
    "SHELL_TOL",
    "dualize",
    "undualize",
    "shell_point",
    "boost_rep",
    "act_momentum",
]

_SQRT2 = math.sqrt(2.0)

# Relative dispersion tolerance for membership of the mass shell.
SHELL_TOL = 1e-9


@dataclass(frozen=True)
class Momentum:
    """Real momentum coordinates in the dual basis (natural units)."""

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        for name in ("p0", "p1", "p2", "p3"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError("momentum coordinates must be finite")
            object.__setattr__(self, name, v)

    @property
    def coords(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3])

    @classmethod
    def from_coords(cls, c) -> "Momentum":
        c = np.asarray(c, dtype=float)
        return cls(c[0], c[1], c[2], c[3])


def _shell_defect(p: Momentum, m: float) -> float:
    return abs(q_form(p) - m * m)


@dataclass(frozen=True)
class MassShellPoint:
    """A momentum on the forward shell of mass m: q_form(p) = m^2, p0 > 0."""

    p: Momentum
    m: float

    def __post_init__(self):
        m = float(self.m)
        object.__setattr__(self, "m", m)
        if not (math.isfinite(m) and m > 0):
            raise BadMass(f"mass must be positive, got {m}")
        defect = _shell_defect(self.p, m)
        if defect > SHELL_TOL * max(1.0, m * m):
            raise NotOnShell(
                f"dispersion defect {defect:.3e} exceeds tolerance for m={m}"
            )
        if self.p.p0 <= 0:
            raise NotOnShell(f"p0 = {self.p.p0} is not on the forward shell")


def dualize(x: MinkowskiVec) -> Momentum:
    """World vector to momentum; the identity on coordinate tuples."""
    return Momentum(x.x0, x.x1, x.x2, x.x3)


def undualize(p: Momentum) -> MinkowskiVec:
    """Momentum to world vector; the identity on coordinate tuples."""
    return MinkowskiVec(p.p0, p.p1, p.p2, p.p3)


def shell_point(m: float, p1: float, p2: float, p3: float) -> MassShellPoint:
    """Forward-shell point with spatial momentum (p1, p2, p3) and mass m.

    The energy is fixed by the dispersion relation p0 = sqrt(m^2 + |p|^2).
    """
    m = float(m)
    if not (math.isfinite(m) and m > 0):
        raise BadMass(f"mass must be positive, got {m}")
    p0 = math.sqrt(m * m + p1 * p1 + p2 * p2 + p3 * p3)
    return MassShellPoint(Momentum(p0, p1, p2, p3), m)


def _require_on_shell(q: MassShellPoint) -> None:
    defect = _shell_defect(q.p, q.m)
    if defect > SHELL_TOL * max(1.0, q.m * q.m) or q.p.p0 <= 0:
        raise NotOnShell(f"point left the forward shell (defect {defect:.3e})")


def boost_rep(q: MassShellPoint) -> SL2Element:
    """Canonical boost: the unique positive Hermitian unimodular matrix
    carrying the rest momentum (m, 0, 0, 0) to q.p.

    With H the Hermitian world matrix of q.p divided by m (so det H = 1 and
    H is positive definite on the forward shell), the principal square root
    has the closed form (H + Id) / sqrt(tr H + 2); the result A satisfies
    A @ A = H exactly by the 2x2 Cayley-Hamilton identity.
    """
    _require_on_shell(q)
    H = _SQRT2 * from_minkowski(undualize(q.p)).t / q.m
    tr = (H[0, 0] + H[1, 1]).real
    if tr + 2.0 <= 1e-12:
        raise Degenerate(
            f"square-root denominator tr+2 = {tr + 2.0:.3e}; input is corrupted "
            "(cannot occur on the forward shell)"
        )
    return SL2Element((H + np.eye(2)) / math.sqrt(tr + 2.0))


def act_momentum(A: SL2Element, q: Momentum) -> Momentum:
    """Unimodular action on momenta, through the bitensor representation.

    Preserves the quadratic form, and preserves the forward cone p0 > 0.
    """
    return dualize(to_minkowski(pi_act(A, from_minkowski(undualize(q)))))
