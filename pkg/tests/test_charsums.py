"""Jacobi sums, binomial coefficients and the closed-form sum tables."""

import itertools

import numpy as np
import pytest

from peisert import (
    DirichletCharacter,
    DomainError,
    GaussianInt,
    build_unit_group,
    chi4,
    dual_group,
    jacobi_exact,
    jacobi_general,
    quadratic,
    trivial,
)
from peisert import charsums as cs


def test_jacobi_exact_oracles(G17, c17):
    eps = trivial(G17)
    assert jacobi_exact(c17, c17) == GaussianInt(-1, 4)
    assert jacobi_exact(eps, eps) == 15
    assert jacobi_exact(c17, eps) == -1


def test_jacobi_general_matches_exact(G17, c17):
    assert jacobi_general(c17, c17) == pytest.approx(-1 + 4j, abs=1e-9)
    assert jacobi_general(trivial(G17), trivial(G17)) == pytest.approx(15, abs=1e-9)
    for a, b in itertools.product(range(4), repeat=2):
        A, B = c17**a, c17**b
        assert jacobi_general(A, B) == pytest.approx(complex(jacobi_exact(A, B)), abs=1e-9)


@pytest.mark.parametrize("p, alpha", [(17, 1), (41, 1), (17, 2)])
def test_jacobi_family_matches_direct_sums(p, alpha):
    G = build_unit_group(p, alpha)
    U, V = DirichletCharacter(G, 3), DirichletCharacter(G, 5)
    fam = cs.jacobi_family(U, V, 1, -1)
    for c in (0, 1, 7, G.phi // 2, G.phi - 1):
        chi = DirichletCharacter(G, c)
        assert fam[c] == pytest.approx(jacobi_general(U * chi, V / chi), abs=1e-8)


def test_abs_jacobi_squared_is_p():
    """|J(chi4, chi4)|^2 = p for prime moduli."""
    for p in (17, 41, 73, 89, 97, 113):
        assert cs.rho_xi(chi4(build_unit_group(p)))[0].norm() == p


def test_rho_scales_with_prime_power(c17, c289):
    assert cs.rho_xi(c289)[0] == 17 * cs.rho_xi(c17)[0]
    assert cs.rho_xi(c289)[1] == 17 * cs.rho_xi(c17)[1]


def test_qbinom_oracles(G17, c17):
    eps = trivial(G17)
    assert cs.qbinom(eps, eps) == 15
    assert cs.qbinom(c17, c17) == jacobi_exact(c17, c17.conj())
    assert cs.qbinom_general(c17, c17) == pytest.approx(complex(cs.qbinom(c17, c17)), abs=1e-9)


@pytest.mark.parametrize("fixture", ["c17", "c289"])
def test_binomial_identities(fixture, request):
    chi = request.getfixturevalue(fixture)
    for a, b in itertools.product(range(4), repeat=2):
        for name, (lhs, rhs) in cs.binomial_identities(chi**a, chi**b).items():
            assert lhs == rhs, (name, a, b)


def test_point_expansion_examples(G17, G289, c17, c289):
    assert cs.point_expansion_residual(c17, 5) < 1e-6
    assert cs.point_expansion_residual(trivial(G17), 0) < 1e-6
    assert cs.point_expansion_residual(c289, 17) < 1e-6


def test_point_expansion_everywhere_for_every_character(G17):
    for A in dual_group(G17):
        assert cs.point_expansion_residuals(A).max() < 1e-6


def test_point_expansion_rejects_doubled():
    G = build_unit_group(17, doubled=True)
    with pytest.raises(DomainError):
        cs.point_expansion_residuals(trivial(G))


def test_lemsec1_examples(c17):
    pairs = {t: cs.lemsec1_eval(c17, 2, t) for t in cs.LEMSEC1_TRIPLES}
    assert pairs[(0, 0, 0)] == (14, 14)
    c2 = GaussianInt.unit(c17.group.log(2))  # chi4(2) = i^dlog(2)
    assert pairs[(0, 0, 1)] == (-(1 + c2), -(1 + c2))
    for brute, closed in pairs.values():
        assert brute == closed


@pytest.mark.parametrize("fixture", ["c17", "c289"])
def test_lemsec1_all_rows(fixture, request):
    chi = request.getfixturevalue(fixture)
    G = chi.group
    xs = [x for x in range(G.n) if G.is_unit(x) and G.is_unit(1 - x)]
    if G.n > 100:
        xs = xs[::7]
    for x in xs:
        for t in cs.LEMSEC1_TRIPLES:
            brute, closed = cs.lemsec1_eval(chi, x, t)
            assert brute == closed, (x, t)


def test_lemsec1_domain(c17):
    with pytest.raises(DomainError):
        cs.lemsec1_eval(c17, 1, (0, 0, 0))
    with pytest.raises(DomainError):
        cs.lemsec1_eval(c17, 2, (1, 1, 1))


def test_lema1_examples(c17, c289):
    assert cs.lema1_eval(c17, (1, 1, 1)) == (GaussianInt(2, -8), GaussianInt(2, -8))
    assert cs.lema1_eval(c17, (1, 1, -1)) == (2, 2)
    assert cs.lema1_eval(c289, (1, 1, -1)) == (578, 578)
    for chi in (c17, c289):
        for t in cs.LEMA1_TRIPLES:
            brute, closed = cs.lema1_eval(chi, t)
            assert brute == closed


def test_corr_table_examples(c17):
    rho, xi = cs.rho_xi(c17)
    assert cs.corr_eval(c17, 3, 3) == (rho * rho - xi.conjugate(),) * 2
    assert cs.corr_eval(c17, 1, 1) == (-(rho + xi),) * 2
    assert cs.corr_eval(c17, 8, 4)[0] == (-(rho + xi)).conjugate()
    assert cs.corr_table(c17).label(3, 3) == "S5"


@pytest.mark.parametrize("p", [17, 41])
def test_corr_table_all_cells(p):
    chi = chi4(build_unit_group(p))
    for w in range(1, 9):
        for z in range(1, 5):
            brute, closed = cs.corr_eval(chi, w, z)
            assert brute == closed, (w, z)


def test_corr_table_bounds(c17):
    with pytest.raises(IndexError):
        cs.corr_table(c17).entry(9, 1)


def test_lemmas_need_order_four(G17):
    with pytest.raises(DomainError):
        cs.lema1_eval(quadratic(G17), (1, 1, 1))


def test_minus_one_signs(G17):
    signs = cs.minus_one_signs(G17)
    assert np.allclose(signs, [chi(-1) for chi in dual_group(G17)])
