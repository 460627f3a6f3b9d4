"""Seeded verification sweeps for every algebraic identity the kernel builds on.

Each check draws its own samples from a deterministic generator, records the
worst defect seen against a pinned tolerance, and the report passes only if
every check passes.  The conventions in force (basis order, metric, the
factor-2 anticommutation normalization, the plane-wave phase) are embedded
in the report so downstream artifacts are self-describing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bitensor import (
    ETA,
    MinkowskiVec,
    elementary,
    h_form,
    involution_J,
    lorentz_of,
    pi_act,
    q_form,
    world_basis,
)
from .bundle import (
    AssociatedClassRep,
    beta,
    beta_inv,
    fiber_projector,
    fiber_residual,
    rest_fiber_basis,
    spin_character,
    split_conjugate_pair,
)
from .clifford import FourSpinor, equivariance_defect, gamma, phi, slash, tau
from .momentum import MassShellPoint, Momentum, act_momentum, dualize, shell_point
from .spinor import SL2Element, Spinor2, act, conjugate, cyclic_defect, eps, eps_bar
from .sampling import (
    random_bitensor,
    random_fiber_element,
    random_sl2,
    random_spinor,
    random_su2,
)

__all__ = ["CheckResult", "VerifyReport", "CONVENTIONS", "run_verification"]

# Convention ledger embedded in reports and emitted artifacts.
CONVENTIONS = {
    "conventions_version": 1,
    "basis_order": "e1, e2, e1bar, e2bar",
    "epsilon_normalization": "eps(e1, e2) = 1",
    "metric_signature": "+---",
    "clifford_anticommutator": "phi(X) phi(Y) + phi(Y) phi(X) = 2 h(X, Y) Id",
    "planewave_phase": "psi(x) = exp(-i*(p0*x0 + p1*x1 + p2*x2 + p3*x3)) * psi_p",
}


@dataclass
class CheckResult:
    name: str
    samples: int
    max_defect: float
    tol: float
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    seed: int
    samples: int
    conventions: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _uniform_spinor(rng, bound: float) -> Spinor2:
    # Components uniform in [-bound, bound] with coefficient magnitude
    # capped at bound (rejection), matching the sweep's stated coefficient range.
    def coeff() -> complex:
        while True:
            re, im = rng.uniform(-bound, bound, 2)
            if re * re + im * im <= bound * bound:
                return complex(re, im)

    return Spinor2(coeff(), coeff())


def _check_cyclic(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        a, b, c = (_uniform_spinor(rng, 10.0) for _ in range(3))
        worst = max(worst, cyclic_defect(a, b, c).norm())
    return CheckResult("cyclic identity", n, worst, 1e-12, worst <= 1e-12)


def _check_symplectic(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        x, y, z = (random_spinor(rng) for _ in range(3))
        al, be = rng.normal(), rng.normal()
        worst = max(worst, abs(eps(x, y) + eps(y, x)))
        worst = max(
            worst,
            abs(eps(al * x + be * y, z) - al * eps(x, z) - be * eps(y, z)),
        )
        worst = max(
            worst,
            abs(eps_bar(conjugate(x), conjugate(y)) - eps(x, y).conjugate()),
        )
    return CheckResult("symplectic form identities", n, worst, 1e-12, worst <= 1e-12)


def _check_signature(rng, n: int) -> CheckResult:
    u = world_basis()
    gram = np.array([[h_form(u[i], u[j]) for j in range(4)] for i in range(4)])
    worst = float(np.max(np.abs(gram - ETA)))
    signs = np.sign(np.linalg.eigvalsh(gram.real))
    sign_ok = sorted(signs) == [-1.0, -1.0, -1.0, 1.0]
    ok = worst <= 1e-14 and sign_ok
    detail = "" if ok else "eigenvalue signs wrong" if not sign_ok else ""
    return CheckResult("world-basis signature", 1, worst, 1e-14, ok, detail)


def _check_h_polarization(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        a, c = random_spinor(rng), random_spinor(rng)
        b, d = random_spinor(rng), random_spinor(rng)
        bbar, dbar = conjugate(b), conjugate(d)
        lhs = h_form(elementary(a, bbar), elementary(c, dbar))
        rhs = eps(a, c) * eps_bar(bbar, dbar)
        worst = max(worst, abs(lhs - rhs))
    return CheckResult("polarized form vs dyadic definition", n, worst, 1e-12, worst <= 1e-12)


def _check_gamma_relations(gammas, n: int) -> CheckResult:
    worst, worst_pair = 0.0, (0, 0)
    eye = np.eye(4)
    for mu in range(4):
        for nu in range(4):
            defect = np.max(
                np.abs(gammas[mu] @ gammas[nu] + gammas[nu] @ gammas[mu] - 2.0 * ETA[mu, nu] * eye)
            )
            if defect > worst:
                worst, worst_pair = float(defect), (mu, nu)
    ok = worst <= 1e-13
    detail = "" if ok else f"worst relation: gamma({worst_pair[0]}), gamma({worst_pair[1]})"
    return CheckResult("gamma anticommutation table", 16, worst, 1e-13, ok, detail)


def _check_anticommutator(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        X = elementary(random_spinor(rng), conjugate(random_spinor(rng)))
        Y = elementary(random_spinor(rng), conjugate(random_spinor(rng)))
        px, py = phi(X), phi(Y)
        defect = px @ py + py @ px - 2.0 * h_form(X, Y) * np.eye(4)
        worst = max(worst, float(np.max(np.abs(defect))))
    return CheckResult("clifford anticommutation (dyadic sweep)", n, worst, 1e-11, worst <= 1e-11)


def _check_slash_square(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        p = Momentum.from_coords(rng.uniform(-10.0, 10.0, 4))
        defect = slash(p) @ slash(p) - q_form(p) * np.eye(4)
        worst = max(worst, float(np.max(np.abs(defect))))
    return CheckResult("slash square equals quadratic form", n, worst, 1e-11, worst <= 1e-11)


def _check_duality(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        x = MinkowskiVec.from_coords(rng.normal(0.0, 3.0, 4))
        worst = max(worst, abs(q_form(x) - q_form(dualize(x))))
        A = random_sl2(rng)
        p = dualize(x)
        moved = act_momentum(A, p)
        scale = max(1.0, float(np.sum(p.coords**2)), float(np.sum(moved.coords**2)))
        worst = max(worst, abs(q_form(moved) - q_form(p)) / scale)
    return CheckResult("momentum duality preserves the form", n, worst, 1e-10, worst <= 1e-10)


def _check_equivariance(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        A = random_sl2(rng, max_norm=10.0)
        X = random_bitensor(rng)
        worst = max(worst, float(np.max(np.abs(equivariance_defect(A, X)))))
    return CheckResult("clifford-map equivariance", n, worst, 1e-9, worst <= 1e-9)


def _check_pi_commutes_J(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        A = random_sl2(rng)
        T = random_bitensor(rng)
        defect = pi_act(A, involution_J(T)).t - involution_J(pi_act(A, T)).t
        worst = max(worst, float(np.max(np.abs(defect))))
    return CheckResult("bitensor action commutes with reality involution", n, worst, 1e-13, worst <= 1e-13)


def _check_covering_hom(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        A, B = random_sl2(rng), random_sl2(rng)
        lhs = lorentz_of(A @ B).mat
        rhs = lorentz_of(A).mat @ lorentz_of(B).mat
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return CheckResult("covering homomorphism", n, worst, 1e-10, worst <= 1e-10)


def _check_covering_two_to_one(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        A = random_sl2(rng)
        if not np.array_equal(lorentz_of(A).mat, lorentz_of(-A).mat):
            worst = max(
                worst,
                float(np.max(np.abs(lorentz_of(A).mat - lorentz_of(-A).mat))),
            )
    return CheckResult("covering is two-to-one (sign kernel)", n, worst, 0.0, worst <= 0.0)


def _check_eta_orthogonality(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        m = lorentz_of(random_sl2(rng)).mat
        worst = max(worst, float(np.max(np.abs(m.T @ ETA @ m - ETA))))
    return CheckResult("lorentz metric orthogonality", n, worst, 1e-10, worst <= 1e-10)


def _check_rest_fiber(rng, n: int) -> CheckResult:
    g0 = gamma(0)
    worst = 0.0
    # The four rest evaluations: +1 on the fiber basis, -1 on its complement.
    v_plus = [np.array([1, 0, 0, -1]), np.array([0, 1, 1, 0])]
    v_minus = [np.array([1, 0, 0, 1]), np.array([0, 1, -1, 0])]
    for v in v_plus:
        worst = max(worst, float(np.max(np.abs(g0 @ v - v))))
    for v in v_minus:
        worst = max(worst, float(np.max(np.abs(g0 @ v + v))))
    # Projector image equals the stated span (orthogonal projector form).
    p_plus = fiber_projector(shell_point(1.0, 0.0, 0.0, 0.0))
    span = sum(np.outer(v, v) / 2.0 for v in v_plus)
    worst = max(worst, float(np.max(np.abs(p_plus - span))))
    return CheckResult("rest fiber eigenspace", 1, worst, 1e-12, worst <= 1e-12)


def _check_beta_well_defined(rng, n: int) -> CheckResult:
    worst = 0.0
    v1, v2 = rest_fiber_basis()
    for _ in range(n):
        A = random_sl2(rng)
        psi = complex(rng.normal(), rng.normal()) * v1 + complex(rng.normal(), rng.normal()) * v2
        rep = AssociatedClassRep(A, psi, 1.0)
        T = random_su2(rng)
        moved = AssociatedClassRep(
            A @ T, FourSpinor.from_vec(tau(T.inverse()) @ psi.vec), 1.0
        )
        f1, f2 = beta(rep), beta(moved)
        scale = max(1.0, f1.psi.norm())
        worst = max(worst, float(np.max(np.abs(f1.q.p.coords - f2.q.p.coords))))
        worst = max(worst, float(np.linalg.norm(f1.psi.vec - f2.psi.vec)) / scale)
    return CheckResult("bundle map well-defined on classes", n, worst, 1e-10, worst <= 1e-10)


def _check_beta_round_trip(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        f = random_fiber_element(rng)
        g = beta(beta_inv(f))
        scale = max(1.0, f.psi.norm())
        worst = max(worst, float(np.max(np.abs(f.q.p.coords - g.q.p.coords))) / max(1.0, f.q.p.p0))
        worst = max(worst, float(np.linalg.norm(f.psi.vec - g.psi.vec)) / scale)
    return CheckResult("bundle map round trip", n, worst, 1e-9, worst <= 1e-9)


def _check_beta_fiber_membership(rng, n: int) -> CheckResult:
    worst = 0.0
    v1, v2 = rest_fiber_basis()
    for _ in range(n):
        A = random_sl2(rng)
        psi = complex(rng.normal(), rng.normal()) * v1 + complex(rng.normal(), rng.normal()) * v2
        m = float(rng.uniform(0.5, 2.0))
        f = beta(AssociatedClassRep(A, psi, m))
        scale = max(1.0, m) * max(1.0, f.psi.norm())
        worst = max(worst, fiber_residual(f.q, f.psi) / scale)
    return CheckResult("bundle map lands in the fiber", n, worst, 1e-9, worst <= 1e-9)


def _check_split_equivariance(rng, n: int) -> CheckResult:
    worst = 0.0
    v1, v2 = rest_fiber_basis()
    for _ in range(n):
        T = random_su2(rng)
        psi = complex(rng.normal(), rng.normal()) * v1 + complex(rng.normal(), rng.normal()) * v2
        pair = split_conjugate_pair(AssociatedClassRep(SL2Element.identity(), psi, 1.0))
        moved_psi = FourSpinor.from_vec(tau(T) @ psi.vec)
        moved_pair = split_conjugate_pair(AssociatedClassRep(SL2Element.identity(), moved_psi, 1.0))
        expected = act(T, pair.s)
        worst = max(worst, (moved_pair.s - expected).norm())
        # Conjugate partner is the exact coefficient conjugation.
        if moved_pair.sbar != conjugate(moved_pair.s):
            worst = max(worst, 1.0)
    return CheckResult("conjugate-pair split equivariance", n, worst, 1e-11, worst <= 1e-11)


def _check_spin_character(rng, n: int) -> CheckResult:
    ts = np.linspace(0.0, 2.0 * math.pi, 100)
    worst = max(abs(spin_character(t) - 2.0 * math.cos(t)) for t in ts)
    return CheckResult("spin-1/2 character", len(ts), worst, 1e-13, worst <= 1e-13)


def _check_bundle_equivariance(rng, n: int) -> CheckResult:
    worst = 0.0
    for _ in range(n):
        f = random_fiber_element(rng)
        A = random_sl2(rng)
        p_moved = act_momentum(A, f.q.p)
        psi_moved = FourSpinor.from_vec(tau(A) @ f.psi.vec)
        scale = max(1.0, f.q.m) * max(1.0, psi_moved.norm()) * max(1.0, p_moved.p0 / f.q.m)
        moved = MassShellPoint(p_moved, f.q.m)
        worst = max(worst, fiber_residual(moved, psi_moved) / scale)
    return CheckResult("group action preserves fibers", n, worst, 1e-9, worst <= 1e-9)


def run_verification(seed: int = 0, samples: int = 1000, corrupt_gamma=None) -> VerifyReport:
    """Run every sweep with a deterministic seed.

    corrupt_gamma, if given as (mu, i, j), perturbs one entry of the gamma
    table used by the relation check; this is a negative-control hook for
    exercising the failure path.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    gammas = [gamma(mu).copy() for mu in range(4)]
    if corrupt_gamma is not None:
        mu, i, j = corrupt_gamma
        gammas[mu][i, j] += 1e-3

    report = VerifyReport(seed=seed, samples=samples, conventions=dict(CONVENTIONS))
    n = samples
    report.checks.append(_check_cyclic(rng, n))
    report.checks.append(_check_symplectic(rng, n))
    report.checks.append(_check_signature(rng, n))
    report.checks.append(_check_h_polarization(rng, n))
    report.checks.append(_check_gamma_relations(gammas, n))
    report.checks.append(_check_anticommutator(rng, n))
    report.checks.append(_check_slash_square(rng, n))
    report.checks.append(_check_duality(rng, n))
    report.checks.append(_check_equivariance(rng, n))
    report.checks.append(_check_pi_commutes_J(rng, n))
    report.checks.append(_check_covering_hom(rng, n))
    report.checks.append(_check_covering_two_to_one(rng, n))
    report.checks.append(_check_eta_orthogonality(rng, n))
    report.checks.append(_check_rest_fiber(rng, n))
    report.checks.append(_check_beta_well_defined(rng, n))
    report.checks.append(_check_beta_round_trip(rng, n))
    report.checks.append(_check_beta_fiber_membership(rng, n))
    report.checks.append(_check_bundle_equivariance(rng, n))
    report.checks.append(_check_split_equivariance(rng, n))
    report.checks.append(_check_spin_character(rng, n))
    return report
