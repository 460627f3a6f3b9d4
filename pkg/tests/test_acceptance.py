"""Acceptance gate: every stated claim reproduced at its pinned tolerance.

One test per criterion; each prints a single pass/fail line (visible with
pytest -s or in captured output).  Samplers are deterministic and local to
this module so the expected values stay independent of library internals.
"""

import cmath
import math

import numpy as np

from twospinors import (
    ETA,
    AssociatedClassRep,
    FourSpinor,
    SL2Element,
    Spinor2,
    beta,
    beta_inv,
    conjugate,
    cyclic_defect,
    fiber_basis,
    fiber_projector,
    fiber_residual,
    gamma,
    h_form,
    lorentz_of,
    planewave_residual,
    q_form,
    rest_fiber_basis,
    shell_point,
    slash,
    spin_character,
    split_conjugate_pair,
    tau,
    world_basis,
)
from twospinors.cli import field_records
from twospinors.sampling import random_fiber_element, random_su2

SQRT2 = math.sqrt(2.0)


def _criterion(name, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def _bounded_spinor(rng, bound):
    # components uniform in [-bound, bound], coefficient magnitude <= bound
    def coeff():
        while True:
            re, im = rng.uniform(-bound, bound, 2)
            if re * re + im * im <= bound * bound:
                return complex(re, im)

    return Spinor2(coeff(), coeff())


def _random_sl2(rng, max_norm):
    while True:
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(d) < 0.25:
            continue
        m = m / cmath.sqrt(d)
        if np.linalg.norm(m) <= max_norm:
            return SL2Element(m)


def test_criterion_lorentz_signature():
    u = world_basis()
    gram = np.array([[h_form(u[i], u[j]) for j in range(4)] for i in range(4)])
    defect = float(np.max(np.abs(gram - ETA)))
    _criterion(
        "lorentz signature",
        defect <= 1e-14,
        f"gram defect {defect:.3e} <= 1e-14",
    )


def test_criterion_cyclic_identity():
    rng = np.random.default_rng(1001)
    worst = 0.0
    for _ in range(10000):
        a, b, c = (_bounded_spinor(rng, 10.0) for _ in range(3))
        worst = max(worst, cyclic_defect(a, b, c).norm())
    _criterion(
        "cyclic identity",
        worst <= 1e-12,
        f"max defect {worst:.3e} <= 1e-12 over 10000 triples",
    )


def test_criterion_clifford_relations():
    eye = np.eye(4)
    worst_rel = max(
        float(np.max(np.abs(gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu) - 2 * ETA[mu, nu] * eye)))
        for mu in range(4)
        for nu in range(4)
    )
    rng = np.random.default_rng(1002)
    worst_sq = 0.0
    for _ in range(1000):
        p = rng.uniform(-10, 10, 4)
        worst_sq = max(worst_sq, float(np.max(np.abs(slash(p) @ slash(p) - q_form(p) * eye))))
    _criterion(
        "clifford relations",
        worst_rel <= 1e-13 and worst_sq <= 1e-11,
        f"relation table {worst_rel:.3e} <= 1e-13, slash square {worst_sq:.3e} <= 1e-11",
    )


def test_criterion_equivariance_theorem():
    from twospinors import BiTensor, equivariance_defect

    rng = np.random.default_rng(1003)
    worst = 0.0
    for _ in range(1000):
        A = _random_sl2(rng, max_norm=10.0)
        X = BiTensor(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        worst = max(worst, float(np.max(np.abs(equivariance_defect(A, X)))))
    _criterion(
        "equivariance theorem",
        worst <= 1e-9,
        f"max defect {worst:.3e} <= 1e-9 over 1000 pairs",
    )


def test_criterion_covering_map():
    rng = np.random.default_rng(1004)
    worst_hom, worst_eta = 0.0, 0.0
    two_to_one = True
    for _ in range(1000):
        A, B = _random_sl2(rng, 4.0), _random_sl2(rng, 4.0)
        la, lb = lorentz_of(A).mat, lorentz_of(B).mat
        worst_hom = max(worst_hom, float(np.max(np.abs(lorentz_of(A @ B).mat - la @ lb))))
        worst_eta = max(worst_eta, float(np.max(np.abs(la.T @ ETA @ la - ETA))))
        two_to_one = two_to_one and np.array_equal(la, lorentz_of(-A).mat)
    lam = lorentz_of(SL2Element(np.diag([SQRT2, 1 / SQRT2]))).mat
    boost_ok = abs(lam[0, 0] - 1.25) <= 1e-12 and abs(lam[0, 3] - 0.75) <= 1e-12
    _criterion(
        "covering map",
        worst_hom <= 1e-10 and worst_eta <= 1e-10 and two_to_one and boost_ok,
        f"homomorphism {worst_hom:.3e} <= 1e-10, eta {worst_eta:.3e} <= 1e-10, "
        f"sign kernel exact: {two_to_one}, boost entries (1.25, 0.75): {boost_ok}",
    )


def test_criterion_rest_fiber():
    v_plus = [np.array([1, 0, 0, -1]), np.array([0, 1, 1, 0])]
    v_minus = [np.array([1, 0, 0, 1]), np.array([0, 1, -1, 0])]
    g0 = gamma(0)
    worst = 0.0
    for v in v_plus:
        worst = max(worst, float(np.max(np.abs(g0 @ v - v))))
    for v in v_minus:
        worst = max(worst, float(np.max(np.abs(g0 @ v + v))))
    p_plus = fiber_projector(shell_point(1.0, 0, 0, 0))
    span = sum(np.outer(v, v) / 2.0 for v in v_plus)
    worst = max(worst, float(np.max(np.abs(p_plus - span))))
    _criterion(
        "rest fiber",
        worst <= 1e-12,
        f"eigenspace and projector defect {worst:.3e} <= 1e-12",
    )


def test_criterion_beta_isomorphism():
    rng = np.random.default_rng(1005)
    v1, v2 = rest_fiber_basis()

    worst_wd = 0.0
    for _ in range(500):
        A = _random_sl2(rng, 4.0)
        psi = complex(*rng.normal(size=2)) * v1 + complex(*rng.normal(size=2)) * v2
        T = random_su2(rng)
        f1 = beta(AssociatedClassRep(A, psi, 1.0))
        f2 = beta(AssociatedClassRep(A @ T, FourSpinor.from_vec(tau(T.inverse()) @ psi.vec), 1.0))
        worst_wd = max(worst_wd, float(np.max(np.abs(f1.q.p.coords - f2.q.p.coords))))
        worst_wd = max(
            worst_wd, float(np.linalg.norm(f1.psi.vec - f2.psi.vec)) / max(1.0, f1.psi.norm())
        )

    worst_rt = 0.0
    for _ in range(1000):
        f = random_fiber_element(rng)
        g = beta(beta_inv(f))
        worst_rt = max(
            worst_rt, float(np.max(np.abs(f.q.p.coords - g.q.p.coords))) / max(1.0, f.q.p.p0)
        )
        worst_rt = max(
            worst_rt, float(np.linalg.norm(f.psi.vec - g.psi.vec)) / max(1.0, f.psi.norm())
        )

    worst_fiber = 0.0
    for _ in range(500):
        A = _random_sl2(rng, 4.0)
        psi = complex(*rng.normal(size=2)) * v1 + complex(*rng.normal(size=2)) * v2
        m = float(rng.uniform(0.5, 2.0))
        f = beta(AssociatedClassRep(A, psi, m))
        worst_fiber = max(
            worst_fiber,
            fiber_residual(f.q, f.psi) / (max(1.0, m) * max(1.0, f.psi.norm())),
        )

    _criterion(
        "beta isomorphism",
        worst_wd <= 1e-10 and worst_rt <= 1e-9 and worst_fiber <= 1e-9,
        f"well-definedness {worst_wd:.3e} <= 1e-10, round trip {worst_rt:.3e} <= 1e-9, "
        f"fiber membership {worst_fiber:.3e} <= 1e-9",
    )


def test_criterion_spin_half_character():
    worst = max(
        abs(spin_character(t) - 2 * math.cos(t)) for t in np.linspace(0, 2 * math.pi, 100)
    )
    _criterion(
        "spin-1/2 character",
        worst <= 1e-13,
        f"max defect {worst:.3e} <= 1e-13 on a 100-point grid",
    )


def test_criterion_conjugate_pair_section():
    header, records = field_records(1.0, (11, -2.0, 2.0), seed=0, tol=1e-9)
    count = 0
    worst = 0.0
    conj_exact = True
    for rec in records:
        count += 1
        worst = max(worst, rec["residual"])
        s = [complex(re, im) for re, im in rec["s"]]
        sbar = [complex(re, im) for re, im in rec["sbar"]]
        conj_exact = conj_exact and sbar == [z.conjugate() for z in s]
    _criterion(
        "conjugate-pair section",
        count == 2 * 11**3 and worst <= 1e-9 and conj_exact,
        f"{count} records, max residual {worst:.3e} <= 1e-9, exact conjugates: {conj_exact}",
    )


def test_criterion_position_space_check():
    q = shell_point(1.0, 0.5, 0.3, 0.4)
    psi = fiber_basis(q)[0]
    x = (0.2, -0.1, 0.4, 0.7)
    residuals = [planewave_residual(q, psi, x, h=h) for h in (1e-2, 5e-3, 2.5e-3)]
    r1 = residuals[0] / residuals[1]
    r2 = residuals[1] / residuals[2]
    ok = 3.6 <= r1 <= 4.4 and 3.6 <= r2 <= 4.4
    _criterion(
        "position-space check",
        ok,
        f"halving ratios {r1:.3f}, {r2:.3f} within 4 +/- 10%",
    )


def test_criterion_split_basis_images():
    # cross-check record s-fields at the origin node against the declared
    # isomorphism images
    header, records = field_records(1.0, (1, 0.0, 0.0), seed=0, tol=1e-9)
    recs = list(records)
    assert [r["s"] for r in recs] == [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
    pair = split_conjugate_pair(
        AssociatedClassRep(SL2Element.identity(), rest_fiber_basis()[0], 1.0)
    )
    _criterion(
        "conjugate-pair split examples",
        pair.s == Spinor2(1, 0) and pair.sbar == conjugate(pair.s),
        "origin records and basis split match the declared isomorphism",
    )
