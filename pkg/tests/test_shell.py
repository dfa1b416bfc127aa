import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import gaussian_matrices, matrices, rel_err
from shellrange.algebra import L_pm, L_t, MobiusMap, invariants, mobius_apply, scaling_factor
from shellrange.models import Model, convert, distance
from shellrange.oracle import sample_shell, sample_unit_vectors
from shellrange.quadric import form
from shellrange.shell import (
    Q0_CKBP, G0_CKBP, ShellKind, base_G, base_Q, brute_force_S, core_matrices,
    mobius_projective_rep, pencil_G, pencil_Q, shell_G, shell_G_split, shell_Q,
    shell_Q_split, shell_axis_distance, shell_center, shell_distances,
    shell_eigen_ratios, shell_geometry, shell_pencil_members, shell_radius,
    shell_signed_distance, vertical_diameter,
)

ZERO = np.zeros((2, 2))
S0 = np.array([[0, 1], [0, 0]])


# quadric fixtures

@pytest.mark.parametrize("t", [0, 1, 2])
def test_Q_of_L_t(t):
    want_p = np.zeros((4, 4))
    want_p[0, 0], want_p[1, 1] = 4 * t * t, 4 + 4 * t * t
    want_p[2:, 2:] = [[1, -1 - 2 * t * t], [-1 - 2 * t * t, 1]]
    want_b = np.diag([4 * t * t, 4 + 4 * t * t, 4 + 4 * t * t, -4 * t * t])
    assert np.abs(shell_Q(L_t(t)) - want_p).max() <= 1e-12
    assert np.abs(shell_Q(L_t(t), "ckb") - want_b).max() <= 1e-12


def test_Q_of_S0_and_zero():
    want_p = np.diag([1.0, 1, 1, 0])
    want_p[2, 3] = want_p[3, 2] = -0.5
    want_b = np.diag([1.0, 1, 2, 0])
    want_b[2, 3] = want_b[3, 2] = 1
    assert np.abs(shell_Q(S0) - want_p).max() <= 1e-12
    assert np.abs(shell_Q(S0, "ckb") - want_b).max() <= 1e-12
    assert np.array_equal(shell_Q(ZERO), np.diag([0.0, 0, 1, 0]))
    assert np.array_equal(shell_Q(ZERO, "ckb"), [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]])


def test_G_fixtures():
    # five data of L1 = (0, 0, -1, 0, 6) substituted by hand
    want = np.zeros((4, 4))
    want[:2, :2] = np.diag([-2, -1])
    want[2:, 2:] = [[1, 3], [3, 1]]
    assert np.abs(shell_G(L_t(1)) - want).max() <= 1e-12
    assert np.array_equal(shell_G(ZERO), np.diag([0.0, 0, 0, 1]))


@given(matrices())
def test_normalisations(A):
    assert shell_Q(A)[2, 2] == 1
    assert shell_G(A)[3, 3] == 1
    assert np.array_equal(shell_Q(A), shell_Q(A).T)


@given(matrices())
def test_Q_G_duality(A):
    inv = invariants(A)
    gap = inv.U ** 2 - inv.absD ** 2
    Q, G = shell_Q(A), shell_G(A)
    assert rel_err(Q @ G, -gap * np.eye(4)) < 1e-9 * max(1, inv.U ** 2)
    assert rel_err(np.linalg.det(G), -gap ** 2 / 4) < 1e-8 * max(1, inv.U ** 4)


def test_det_Q():
    for A in gaussian_matrices(50, 3):
        inv = invariants(A)
        assert np.linalg.det(shell_Q(A)) == pytest.approx(-4 * (inv.U ** 2 - inv.absD ** 2) ** 2, rel=1e-9)


def test_ckb_transport_agrees_on_points(rng):
    A = gaussian_matrices(1, 5)[0]
    p = rng.uniform(-0.5, 0.5, (20, 3))
    pb = convert(p, Model.CKB, Model.CKBP)
    # CKBP homogeneous coordinates are (1 - z) times the affine ones
    scale = (1 - p[:, 2]) ** 2
    assert np.allclose(form(shell_Q(A, "ckb"), p), scale * form(shell_Q(A), pb))


# pencil

def test_split_and_pencil(rng):
    for A in gaussian_matrices(20, 8):
        base, spec = shell_Q_split(A)
        assert rel_err(base + spec, shell_Q(A)) < 1e-12
        gb, gs = shell_G_split(A)
        assert rel_err(gb + gs, shell_G(A)) < 1e-12
        absD = invariants(A).absD
        for lam in rng.normal(size=3):
            P = pencil_Q(A, lam) @ pencil_G(A, lam)
            assert rel_err(P, -(lam * lam - absD * absD) * np.eye(4)) < 1e-9


@pytest.mark.parametrize("t", [0.5, 1, 2])
def test_axis_member_of_L_t(t):
    axis, _ = shell_pencil_members(L_t(t))
    # U := |D| = 1 in the L_t fixture: 4t^2 -> 0 and 4 + 4t^2 -> 4
    assert axis[0, 0] == pytest.approx(0, abs=1e-12)
    assert axis[1, 1] == pytest.approx(4)
    assert np.allclose(axis[2:, 2:], [[1, -1], [-1, 1]])
    # the axis (x, 0, 0) in CKB is the zero set
    x = np.linspace(-0.9, 0.9, 7)
    pts = np.stack([x, 0 * x, 0 * x], axis=-1)
    assert np.abs(form(shell_pencil_members(L_t(t), "ckb")[0], pts)).max() < 1e-12


def test_normal_axis_member_is_the_shell():
    A = np.diag([1 + 2j, -0.5j])
    assert rel_err(shell_pencil_members(A)[0], shell_Q(A)) < 1e-12


def test_biplanar_member_is_tangent_plane_product():
    l1, l2 = 1 + 2j, -0.5 + 0.25j
    _, bi = shell_pencil_members(np.diag([l1, l2]))

    def plane(l):
        return np.array([-2 * l.real, -2 * l.imag, 1, abs(l) ** 2])

    a, b = plane(l1), plane(l2)
    prod = (np.outer(a, b) + np.outer(b, a)) / 2
    assert rel_err(bi / bi[2, 2], prod / prod[2, 2]) < 1e-12


def test_pencil_members_nonnegative_on_model(rng):
    A = gaussian_matrices(1, 11)[0]
    v = rng.standard_normal((2000, 3))
    p = v / np.linalg.norm(v, axis=1, keepdims=True) * rng.uniform(0, 1, (2000, 1))
    for M in shell_pencil_members(A, "ckb"):
        assert form(M, p).min() >= -1e-12 * np.abs(M).max()


# eigenvalue closed forms

def test_eigen_ratio_fixtures():
    a, b = shell_eigen_ratios(L_t(1))
    assert np.allclose(a, [4, 4, 8, 8])
    assert np.allclose(b, [-2, -2, -1, -1])
    assert np.allclose(shell_eigen_ratios(S0)[0], [1, 1, 1, 1])
    assert np.allclose(shell_eigen_ratios(ZERO)[0], 0)


def test_U_is_trace_over_8():
    for A in gaussian_matrices(50, 2):
        tr = np.trace(np.linalg.inv(Q0_CKBP) @ shell_Q(A))
        assert tr / 8 == pytest.approx(invariants(A).U, rel=1e-12)


@given(matrices())
def test_similarity_with_dual(A):
    # Q0^-1 Q and -4 G Q0 have the same spectrum
    inv = invariants(A)
    a, b = shell_eigen_ratios(A)
    assert np.allclose(np.sort(-4 * b), a, atol=1e-7 * max(1, inv.U))


@pytest.mark.parametrize("model", ["ckbp", "ckb"])
def test_eigen_ratios_in_both_models(model):
    for A in gaussian_matrices(20, 4):
        inv = invariants(A)
        a, _ = shell_eigen_ratios(A, model)
        want = sorted([2 * (inv.U - inv.absD)] * 2 + [2 * (inv.U + inv.absD)] * 2)
        assert rel_err(a, want) < 1e-9


def test_core_block_decomposition():
    for A in gaussian_matrices(20, 6):
        inv = invariants(A)
        QC, GC, B = core_matrices(A)
        mid = np.zeros((4, 4))
        mid[:2, :2] = QC
        mid[2, 2] = 1
        mid[3, 3] = -(inv.U ** 2 - inv.absD ** 2)
        Binv = np.linalg.inv(B)
        assert rel_err(Binv.T @ mid @ Binv, shell_Q(A)) < 1e-9
        assert np.allclose(np.linalg.eigvalsh(QC), [2 * (inv.U - inv.absD), 2 * (inv.U + inv.absD)])
        assert rel_err(GC, -0.25 * np.array([[QC[1, 1], -QC[0, 1]], [-QC[0, 1], QC[0, 0]]])) == 0


# brute force parametrisation

def test_brute_force_S(rng):
    for A in gaussian_matrices(10, 9):
        S = brute_force_S(A)
        x = sample_unit_vectors(50, 3)
        z1, z2 = x[:, 0], x[:, 1]
        sph = np.stack([2 * (z1 * z2.conj()).real, 2 * (z1 * z2.conj()).imag,
                        np.abs(z1) ** 2 - np.abs(z2) ** 2, np.ones(50)], axis=-1)
        y = x @ A.T
        direct = np.stack([np.sum(y * x.conj(), 1).real, np.sum(y * x.conj(), 1).imag,
                           np.sum(np.abs(y) ** 2, 1), np.ones(50)], axis=-1)
        assert rel_err(sph @ S.T, direct) < 1e-12
        inv = invariants(A)
        assert np.linalg.det(S) == pytest.approx((inv.U ** 2 - inv.absD ** 2) / 2, rel=1e-9, abs=1e-12)
        # S diag(1,1,1,-1) S^T is minus the dual quadric
        assert rel_err(S @ np.diag([1, 1, 1, -1]) @ S.T, -shell_G(A)) < 1e-12


# center, radius, geometry

@pytest.mark.parametrize("t", [0, 1, 2])
def test_center_of_L_t(t):
    assert np.allclose(shell_center(L_t(t)), [0, 0, 1 + 2 * t * t])


def test_center_of_zero_and_shift():
    assert np.array_equal(shell_center(ZERO), [0, 0, 0])
    A = gaussian_matrices(1, 12)[0]
    mu = 0.3 - 0.7j
    d = shell_center(A + mu * np.eye(2)) - shell_center(A)
    assert np.allclose(d[:2], [mu.real, mu.imag])


@given(matrices())
def test_center_from_dual_last_column(A):
    G = shell_G(A)
    assert np.allclose(shell_center(A), G[:3, 3], atol=1e-12)


def test_geometry_fixtures():
    g = shell_geometry(L_t(1))
    assert g.kind is ShellKind.TUBE and g.radius == pytest.approx(0.5 * math.acosh(3))
    assert shell_radius(L_t(2)) == pytest.approx(0.5 * math.acosh(9))
    g = shell_geometry(S0)
    assert g.kind is ShellKind.HOROSPHERE and g.radius == math.inf
    g = shell_geometry(np.diag([1, -1]))
    assert g.kind is ShellKind.LINE and g.radius == 0
    g = shell_geometry(ZERO)
    assert g.kind is ShellKind.POINT and g.asymptotic_points == [0]


def test_vertical_diameter_against_samples():
    A = gaussian_matrices(1, 13)[0]
    lo, hi = vertical_diameter(A)
    c = shell_center(A)
    pts = sample_shell(A, 10_000, 4).points
    near = pts[np.hypot(pts[:, 0] - c[0], pts[:, 1] - c[1]) < 0.02]
    assert len(near) > 0
    # every sample near the vertical through the center sits at one of its ends
    gap = np.minimum(np.abs(near[:, 2] - lo), np.abs(near[:, 2] - hi))
    assert gap.max() < 0.05 * (hi - lo)
    Q = shell_Q(A)
    for z in (lo, hi):
        assert abs(form(Q, [c[0], c[1], z])) < 1e-9 * np.abs(Q).max()


# distances

def test_axis_distance():
    x = np.linspace(-0.8, 0.8, 5)
    for xi in x:
        assert shell_axis_distance(L_t(1), [xi, 0, 0], "ckb") == pytest.approx(0, abs=1e-7)
    assert shell_axis_distance(S0, [0, 0, 1]) == math.inf
    assert shell_axis_distance(np.diag([1, -1]), [0, 0, 1]) == 0


def test_axis_distance_against_model_distance():
    # for L_t the axis is the CKB x-axis, so the foot of (x, y, z) is known
    p = np.array([0.2, 0.3, -0.1])
    r2 = 1 - p[0] ** 2
    foot = [p[0], 0, 0]
    want = math.acosh(math.sqrt(r2) / math.sqrt(1 - p @ p))
    assert shell_axis_distance(L_t(1), p, "ckb") == pytest.approx(want, rel=1e-10)
    assert distance(p, foot, "ckb") == pytest.approx(want, rel=1e-10)


def test_signed_distance():
    for t in (0.5, 1, 2):
        A = L_t(t)
        r = shell_radius(A)
        assert shell_signed_distance(A, [0, 0, 0], "ckb") == pytest.approx(-r, rel=1e-12)
    A = gaussian_matrices(1, 14)[0]
    far = convert([0.0, 0.0, 0.999999], "ckb", "ckbp")
    assert shell_signed_distance(A, far) > 0


def test_signed_distance_zero_on_boundary():
    # for a 2x2 matrix every sampled point lies on the shell surface
    A = gaussian_matrices(1, 15)[0]
    pts = sample_shell(A, 2000, 1).points
    d = np.array([shell_signed_distance(A, p) for p in pts])
    assert np.abs(d).max() <= 1e-7


@pytest.mark.parametrize("t", [0, 1, 2])
def test_norm_distance_of_L_pm(t):
    for alpha in (0, math.pi / 3, math.pi / 2):
        for sign in (1, -1):
            assert shell_distances(L_pm(alpha, t, sign))[2] == pytest.approx(-math.log(t + math.sqrt(1 + t * t)))


def test_distance_fixtures():
    assert shell_distances(ZERO)[2] == math.inf
    assert shell_distances(L_t(1))[2] == pytest.approx(-math.log(1 + math.sqrt(2)))
    assert shell_distances(np.array([[0, 1], [1, 0]]))[2] == pytest.approx(0, abs=1e-15)


def test_horo_distance_is_norm_of_traceless_part():
    for A in gaussian_matrices(30, 16):
        B = A - np.trace(A) / 2 * np.eye(2)
        assert shell_distances(A)[1] == pytest.approx(-math.log(np.linalg.norm(B, 2)), rel=1e-9, abs=1e-12)


def test_origin_distance_matches_signed_distance():
    for A in gaussian_matrices(30, 17):
        assert shell_distances(A)[0] == pytest.approx(shell_signed_distance(A, [0, 0, 1]), rel=1e-9, abs=1e-12)


def test_norm_distance_is_top_of_shell():
    A = L_t(1)
    top = sample_shell(A, 20_000, 2).points[:, 2].max()
    assert -0.5 * math.log(top) == pytest.approx(shell_distances(A)[2], rel=1e-3)


# Moebius covariance

def test_projective_rep_fixtures():
    assert np.allclose(mobius_projective_rep(MobiusMap(1, 0, 0, 1)), np.eye(4))
    T = 0.5 - 1.5j
    R = mobius_projective_rep(MobiusMap(1, T, 0, 1))
    lam = 0.3 + 0.2j
    v = np.array([lam.real, lam.imag, abs(lam) ** 2, 1])
    mu = lam + T
    assert np.allclose(R @ v, [mu.real, mu.imag, abs(mu) ** 2, 1])


@given(st.tuples(*[st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)] * 4))
def test_projective_rep_acts_on_boundary(coef):
    a, b, c, d = coef
    if abs(a * d - b * c) < 1e-3:
        return
    f = MobiusMap(a, b, c, d)
    R = mobius_projective_rep(f)
    assert np.linalg.det(R) == pytest.approx(1, rel=1e-8)
    lam = 0.4 - 0.9j
    den = f.c * lam + f.d
    if abs(den) < 1e-3:
        return
    mu = (f.a * lam + f.b) / den
    w = R @ np.array([lam.real, lam.imag, abs(lam) ** 2, 1])
    assert np.allclose(w / w[3], [mu.real, mu.imag, abs(mu) ** 2, 1], rtol=1e-7, atol=1e-7)


@pytest.mark.parametrize("model", ["ckbp", "ckb"])
def test_covariance(rng, model):
    n = 0
    while n < 40:
        a, b, c, d = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        f = MobiusMap(a, b, c, d)
        A = gaussian_matrices(1, int(rng.integers(1 << 30)))[0]
        try:
            B = mobius_apply(f, A)
        except ArithmeticError:
            continue
        n += 1
        R = mobius_projective_rep(f, model)
        C = scaling_factor(f, A)
        Ri = np.linalg.inv(R)
        assert rel_err(shell_Q(B, model) * C, Ri.T @ shell_Q(A, model) @ Ri) < 1e-8 * max(1, C)
        assert rel_err(shell_G(B, model) * C, R @ shell_G(A, model) @ R.T) < 1e-8 * max(1, C)


def test_base_quadrics():
    assert np.allclose(base_Q() @ base_G(), np.eye(4))
    assert np.allclose(base_Q("ckb"), np.diag([1, 1, 1, -1]))
    assert np.allclose(G0_CKBP @ Q0_CKBP, np.eye(4))
