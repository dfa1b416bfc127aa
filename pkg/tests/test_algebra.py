import math

import numpy as np
import pytest
from hypothesis import given

from conftest import gaussian_matrices, matrices, random_unitary, rel_err
from shellrange.algebra import (
    MobiusMap, SpectralClass, L_pm, L_t, S_beta, canonical_triangular, class_scale,
    commutator_norm2, eigenvalues, five_data, format_complex, format_matrix, invariants,
    is_normal, matrix_from_five_data, mobius_apply, norm_conorm, parse_complex,
    parse_matrix, principal_sqrt, reduced_five_data, scaling_factor,
)
from shellrange.errors import DegenerateMobius, ParseError, SingularResolvent
from shellrange.shell import shell_G

ZERO = np.zeros((2, 2))
S0 = np.array([[0, 1], [0, 0]])


# five data

def test_five_data_fixtures():
    assert five_data(ZERO) == (0, 0, 0, 0, 0)
    # hand-computed: tr L1 = 0, det L1 = -1, tr L1*L1 = 1 + 4 + 1
    assert five_data(L_t(1)) == (0, 0, -1, 0, 6)
    assert five_data(S0) == (0, 0, 0, 0, 1)


def test_reduced_five_data_fixtures():
    assert reduced_five_data(ZERO) == (0, 0, 0, 0, 0)
    assert reduced_five_data(L_t(1)) == (0, -2, 0, 1, 6)
    # tr = i sqrt3/2, det = 0: W = 3/4, Z = 1/4 + 3/4
    got = reduced_five_data(S_beta(math.pi / 3))
    assert np.allclose(got, (0, 0.75, 0, 0, 1), atol=1e-15)


@given(matrices())
def test_five_data_unitary_invariant(A):
    rng = np.random.Generator(np.random.Philox(abs(hash(A.tobytes())) % 2**32))
    Q = random_unitary(rng)
    assert rel_err(five_data(Q.conj().T @ A @ Q), five_data(A)) < 1e-12 * max(1, np.abs(A).max() ** 2)


@given(matrices())
def test_five_data_round_trip(A):
    B = matrix_from_five_data(five_data(A))
    assert rel_err(five_data(B), five_data(A)) < 1e-9


# invariants

@pytest.mark.parametrize("t", [0, 0.5, 1, 2])
def test_invariants_L_t(t):
    inv = invariants(L_t(t))
    assert inv.U == pytest.approx(1 + 2 * t * t)
    assert inv.absD == pytest.approx(1)


def test_invariants_S0():
    inv = invariants(S0)
    assert inv.U == 0.5 and inv.absD == 0


@pytest.mark.parametrize("alpha", [0, 0.4, math.pi / 3, math.pi / 2])
@pytest.mark.parametrize("t", [0, 1])
def test_invariants_L_pm(alpha, t):
    c2 = math.cos(alpha) ** 2
    p, m = invariants(L_pm(alpha, t, 1)), invariants(L_pm(alpha, t, -1))
    assert p.E == pytest.approx(1) and p.absD == pytest.approx(c2, abs=1e-15)
    assert m.E == pytest.approx(c2, abs=1e-15) and m.absD == pytest.approx(1)


@pytest.mark.parametrize("beta", [0, 0.3, math.pi / 3, math.pi / 2])
def test_invariants_S_beta(beta):
    inv = invariants(S_beta(beta))
    c2 = math.cos(beta) ** 2
    assert inv.U == pytest.approx((1 + c2) / 4)
    assert inv.absD == pytest.approx((1 - c2) / 4)
    assert inv.E == pytest.approx((1 - c2) / 4)


def test_class_of_conjugate_pair():
    inv = invariants(np.diag([1j, -1j]))
    assert inv.cls is SpectralClass.REAL_ELLIPTIC
    assert (inv.absD, inv.E, inv.H) == (1, 0, -1)


@pytest.mark.parametrize("lam, cls", [
    ((1j, -1j), SpectralClass.REAL_ELLIPTIC),
    ((2, 2), SpectralClass.REAL_PARABOLIC),
    ((1, -3), SpectralClass.REAL_HYPERBOLIC),
    ((1 + 1j, 1 + 1j), SpectralClass.NON_REAL_PARABOLIC),
    ((1, 2j), SpectralClass.SEMI_REAL),
    ((1j, -2j), SpectralClass.QUASI_ELLIPTIC),
    ((1j, 1 + 2j), SpectralClass.QUASI_HYPERBOLIC),
])
@pytest.mark.parametrize("t", [0, 1.5])
def test_seven_classes(lam, cls, t):
    A = np.array([[lam[0], t], [0, lam[1]]])
    assert invariants(A).cls is cls


def _class_from_eigenvalues(l1, l2, eps):
    # the seven classes read off directly from the eigenvalues
    r1, r2 = abs(l1.imag) <= eps, abs(l2.imag) <= eps
    if r1 and r2:
        return SpectralClass.REAL_PARABOLIC if abs(l1 - l2) <= eps else SpectralClass.REAL_HYPERBOLIC
    if r1 or r2:
        return SpectralClass.SEMI_REAL
    if abs(l1 - l2.conjugate()) <= eps:
        return SpectralClass.REAL_ELLIPTIC
    if abs(l1 - l2) <= eps:
        return SpectralClass.NON_REAL_PARABOLIC
    return SpectralClass.QUASI_ELLIPTIC if l1.imag * l2.imag < 0 else SpectralClass.QUASI_HYPERBOLIC


def test_classification_matches_eigenvalues_on_fuzz():
    mats = list(gaussian_matrices(900, 11))
    rng = np.random.Generator(np.random.Philox(12))
    # add structured cases so that every class is hit
    for _ in range(100):
        x, y = rng.standard_normal(2)
        c = complex(*rng.standard_normal(2))
        k = rng.integers(5)
        lam = [(x, y), (x, x), (c, c.conjugate()), (c, c), (x, c)][k]
        mats.append(np.array([[lam[0], rng.standard_normal()], [0, lam[1]]], dtype=complex))
    seen = set()
    for A in mats:
        inv = invariants(A)
        l1, l2 = np.linalg.eigvals(A)
        want = _class_from_eigenvalues(complex(l1), complex(l2), 1e-6)
        assert inv.cls is want
        seen.add(inv.cls)
    assert {SpectralClass.SEMI_REAL, SpectralClass.REAL_ELLIPTIC,
            SpectralClass.QUASI_ELLIPTIC, SpectralClass.QUASI_HYPERBOLIC} <= seen


@given(matrices())
def test_invariant_relations(A):
    inv = invariants(A)
    s = class_scale(A)
    assert inv.U >= inv.absD - 1e-12 * s
    assert inv.H == pytest.approx(inv.E - inv.absD, abs=1e-12 * s)
    assert inv.K + inv.H == pytest.approx(five_data(A).im_tr ** 2 / 2, abs=1e-12 * s)
    assert abs(inv.B) ** 2 == pytest.approx(inv.E, abs=1e-10 * s)


@given(matrices())
def test_commutator_identity(A):
    inv = invariants(A)
    scale = max(1.0, inv.U) ** 2
    assert commutator_norm2(A) == pytest.approx(8 * (inv.U ** 2 - inv.absD ** 2), abs=1e-10 * scale)


def test_normal_iff_U_equals_absD():
    assert is_normal(np.diag([1, 1j]))
    assert is_normal(np.array([[1, 2], [2, -1]]))
    assert not is_normal(S0)


# square root and eigenvalues

def test_principal_sqrt():
    assert principal_sqrt(1) == 1
    assert principal_sqrt(-1) == 1j
    eps = 1e-6
    # (|z| - Re z)/2 ~ 1, sign of Im z negative
    z = principal_sqrt(complex(-1, -eps))
    assert z.imag == pytest.approx(-1, abs=1e-6)
    assert z.real == pytest.approx(eps / 2, rel=1e-6)


@given(matrices())
def test_principal_sqrt_squares_back(A):
    z = complex(A[0, 0])
    r = principal_sqrt(z)
    assert abs(r * r - z) <= 1e-12 * max(1.0, abs(z))
    assert r.real >= 0


def test_eigenvalue_ordering():
    assert eigenvalues(np.diag([3, 5])) == (5, 3)
    assert eigenvalues(L_t(2)) == (1, -1)
    l = eigenvalues(S_beta(0.7))
    assert {complex(round(z.real, 14), round(z.imag, 14)) for z in l} == {0, 1j * round(math.sin(0.7), 14)}


# canonical triangular form

@pytest.mark.parametrize("A, t", [(np.diag([1, 1j]), 0), (S0, 1), (L_t(1), 2)])
def test_canonical_triangular_fixtures(A, t):
    T, _ = canonical_triangular(A)
    assert T.t == pytest.approx(t, abs=1e-12)


@given(matrices())
def test_canonical_triangular_is_unitary_reduction(A):
    T, Q = canonical_triangular(A)
    s = max(1.0, np.abs(A).max())
    assert np.allclose(Q.conj().T @ Q, np.eye(2), atol=1e-12)
    R = Q.conj().T @ A @ Q
    assert abs(R[1, 0]) <= 1e-8 * s
    assert abs(R[0, 1] - T.t) <= 1e-8 * s
    inv = invariants(A)
    assert T.t == pytest.approx(math.sqrt(max(2 * (inv.U - inv.absD), 0)), abs=1e-6 * s)
    assert rel_err(five_data(T.matrix()), five_data(A)) < 1e-9 * s ** 2


# norms

@pytest.mark.parametrize("alpha", [0, 1.0, math.pi / 2])
@pytest.mark.parametrize("t", [0, 0.5, 2])
def test_norm_of_L_pm(alpha, t):
    for sign in (1, -1):
        assert norm_conorm(L_pm(alpha, t, sign))[0] == pytest.approx(t + math.sqrt(1 + t * t))


@pytest.mark.parametrize("beta", [0, 0.6, 1.2])
def test_norm_of_cayley_transform(beta):
    S = S_beta(beta)
    C = (np.eye(2) - S) @ np.linalg.inv(np.eye(2) + S)
    c = math.cos(beta)
    want = math.sqrt((math.sqrt(2) + c) / (math.sqrt(2) - c))
    assert norm_conorm(C)[0] == pytest.approx(want, rel=1e-12)


def test_norm_of_identity():
    assert norm_conorm(np.eye(2)) == pytest.approx((1, 1))


@given(matrices())
def test_norm_conorm_against_svd(A):
    s = np.linalg.svd(A, compute_uv=False)
    n, c = norm_conorm(A)
    assert n == pytest.approx(s[0], rel=1e-9, abs=1e-12)
    assert n * c == pytest.approx(abs(np.linalg.det(A)), rel=1e-12, abs=1e-12 * max(1, s[0]) ** 2)


# Moebius maps

def test_mobius_rejects_degenerate():
    with pytest.raises(DegenerateMobius):
        MobiusMap(1, 2, 2, 4)
    with pytest.raises(ValueError):
        MobiusMap(1j, 0, 0, 1, kind="real")


def test_mobius_identity_and_shift():
    A = L_t(1)
    assert np.allclose(mobius_apply(MobiusMap(1, 0, 0, 1), A), A)
    B = mobius_apply(MobiusMap(1, 2 - 1j, 0, 1), A)
    a, b = invariants(A), invariants(B)
    assert (b.U, b.absD) == pytest.approx((a.U, a.absD))


def test_mobius_inversion_keeps_ratio():
    B = mobius_apply(MobiusMap(0, 1, 1, 0), L_t(1))
    inv = invariants(B)
    assert inv.U / inv.absD == pytest.approx(3)


def test_mobius_pole_at_eigenvalue():
    f = MobiusMap(1, 0, 1, -1)  # pole at 1, an eigenvalue of L1
    with pytest.raises(SingularResolvent):
        mobius_apply(f, L_t(1))
    assert scaling_factor(f, L_t(1)) == 0


def _scaling_from_G(f, A):
    # the defining contraction of the dual shell quadric
    c, d = f.c, f.d
    cd = c.conjugate() * d
    v = np.array([2 * cd.real, 2 * cd.imag, abs(c) ** 2, abs(d) ** 2])
    return v @ shell_G(A) @ v / abs(f.det) ** 2


def test_scaling_factor_fixtures():
    A = np.array([[1 + 1j, 2], [0.5, -1]])
    assert scaling_factor(MobiusMap(1, 0, 0, 1), A) == 1
    _, det = np.trace(A), np.linalg.det(A)
    assert scaling_factor(MobiusMap(0, 1, 1, 0), A) == pytest.approx(abs(det) ** 2)
    Ai = np.linalg.inv(A)
    assert invariants(Ai).U * abs(det) ** 2 == pytest.approx(invariants(A).U)


@given(matrices(), matrices())
def test_scaling_factor_matches_dual_contraction(A, F):
    a, b, c, d = F.ravel()
    if abs(a * d - b * c) < 1e-3:
        return
    f = MobiusMap(a, b, c, d)
    want = _scaling_from_G(f, A)
    assert scaling_factor(f, A) == pytest.approx(want, rel=1e-8, abs=1e-8 * max(1, np.abs(A).max()) ** 4 * max(1, np.abs(F).max()) ** 4 / abs(f.det) ** 2)


# literals

@pytest.mark.parametrize("text, z", [
    ("1.5+2i", 1.5 + 2j), ("-3i", -3j), ("2", 2), ("i", 1j), ("-i", -1j), ("1e-3-2.5j", 1e-3 - 2.5j),
])
def test_parse_complex(text, z):
    assert parse_complex(text) == z


@pytest.mark.parametrize("text", ["", "abc", "1+", "(1+2j)", "inf", "nan", "1+2k"])
def test_parse_complex_rejects(text):
    with pytest.raises(ParseError):
        parse_complex(text)


def test_parse_matrix_and_format_round_trip():
    A = parse_matrix("[1,2;0,-1]")
    assert np.array_equal(A, L_t(1))
    B = np.array([[0.1 + 1e-17j, -2.5j], [1 / 3, -0.0]])
    assert np.array_equal(parse_matrix(format_matrix(B)), B)
    assert format_complex(1 - 2j) == "1.0-2.0i"
    with pytest.raises(ParseError):
        parse_matrix("[1,2;3]")
