"""G*(n): construction, censuses, closed forms and export."""

from fractions import Fraction

import numpy as np
import pytest

from peisert import DomainError, ValidationError, build_unit_group
from peisert import graph as gr

PRIMES = [(17, 1), (41, 1), (73, 1), (89, 1), (97, 1), (17, 2)]
K4 = {17: 17, 41: 1025, 73: 14235, 89: 32307, 97: 44426, 289: 1419857}


@pytest.fixture(scope="module")
def g17():
    return gr.build_graph(17)


def test_connection_set(g17):
    assert sorted(g17.connection) == [1, 3, 4, 5, 12, 13, 14, 16]
    assert g17.adjacent(0, 1) and not g17.adjacent(0, 2)


def test_doubled_connection_set():
    g = gr.build_graph(17, doubled=True)
    assert g.n == 34 and len(g.connection) == 8
    assert all(h % 2 for h in g.connection)


def test_connection_set_is_symmetric():
    for p, a in PRIMES:
        g = gr.build_graph(p, a)
        assert {(-h) % g.n for h in g.connection} == set(g.connection)


@pytest.mark.parametrize("p, alpha, doubled", [(p, a, d) for p, a in PRIMES for d in (False, True)])
def test_degree_and_edges(p, alpha, doubled):
    g = gr.build_graph(p, alpha, doubled)
    degs = {gr.degree(g, v) for v in range(g.n)}
    assert degs == {gr.degree_formula(p, alpha)}
    assert gr.edge_count(g) == gr.edge_count_formula(g.n, g.group.phi)
    assert sum(gr.degree(g, v) for v in range(g.n)) == 2 * gr.edge_count(g)


def test_edge_count_examples():
    assert gr.edge_count(gr.build_graph(17)) == 68
    assert gr.edge_count(gr.build_graph(17, doubled=True)) == 136
    assert {gr.degree(gr.build_graph(17, 2), v) for v in range(289)} == {136}


def test_adjacency_matrix_consistent(g17):
    A = g17.adjacency_matrix()
    assert np.array_equal(A, A.T) and not A.diagonal().any()
    assert [(u, v) for u, v in zip(*np.nonzero(np.triu(A)))] == list(g17.edges())


def test_rejects_bad_primes():
    for p in (15, 13, 41 * 2):
        with pytest.raises(ValidationError, match="1 \\(mod 8\\)"):
            gr.build_graph(p)


def test_k3_formula_examples():
    assert gr.k3_formula(17) == 68
    assert gr.k3_formula(41) == 1230
    assert gr.k3_formula(17, 2) == 334084


@pytest.mark.parametrize("p, alpha", PRIMES)
def test_k3_brute_matches_formula(p, alpha):
    assert gr.k3_brute(gr.build_graph(p, alpha)) == gr.k3_formula(p, alpha)


@pytest.mark.parametrize("p, alpha", PRIMES)
def test_k4_brute_matches_formula(p, alpha):
    q = p**alpha
    assert gr.k4_formula(p, alpha) == K4[q]
    assert gr.k4_brute(gr.build_graph(p, alpha)) == K4[q]


@pytest.mark.parametrize("p", [17, 41])
def test_doubled_has_no_triangles(p):
    g = gr.build_graph(p, doubled=True)
    assert gr.k3_brute(g) == 0
    assert gr.k4_brute(g) == 0


def test_k4_closed_form_arithmetic():
    from peisert import GaussianInt
    rho = GaussianInt(-1, 4)
    assert gr.k4_closed_form(17, 1, rho, rho, GaussianInt(-6, -24), GaussianInt(10)) == 17


def test_k4_conjugate_invariance():
    for p, a in PRIMES:
        assert gr.k4_formula(p, a, conjugate=True) == gr.k4_formula(p, a)
        v, w = gr.k4_inputs(p, a), gr.k4_inputs(p, a, conjugate=True)
        assert w["rho"] == v["rho"].conjugate() and w["m5"] == v["m5"]


def test_k4_workers_agree():
    g = gr.build_graph(73)
    assert gr.k4_brute(g, workers=3) == gr.k4_brute(g) == 14235


@pytest.mark.parametrize("p", [17, 41, 73])
def test_local_chain(p):
    g = gr.build_graph(p)
    k4 = gr.k4_from_local(g)
    assert k4 == Fraction(K4[p])
    assert gr.k3_induced(g) * g.n == 4 * K4[p]


def test_local_counts_constant_on_cosets(g17):
    """Local counts agree across each coset of <g^4> in H."""
    G = g17.group
    g4 = pow(G.g, 4, 17)
    quarter = [pow(g4, k, 17) for k in range(G.phi // 4)]
    assert len({gr.k3_local(g17, v) for v in quarter}) == 1
    assert len({gr.k3_local(g17, v * G.g % 17) for v in quarter}) == 1
    assert (gr.k3_local(g17, 1), gr.k3_local(g17, G.g)) == (2, 1)


@pytest.mark.parametrize("p, alpha", [(17, 1), (41, 1), (97, 1), (17, 2)])
def test_local_formula(p, alpha):
    g = gr.build_graph(p, alpha)
    assert gr.k3_local_formula(p, alpha) == gr.k3_local(g, 1)
    assert gr.k3_local_formula(p, alpha, at_generator=True) == gr.k3_local(g, g.group.g)


def test_local_requires_connection_vertex(g17):
    with pytest.raises(DomainError):
        gr.k3_local(g17, 2)


def test_formulas_reject_bad_input():
    with pytest.raises(ValidationError):
        gr.k3_formula(13)
    with pytest.raises(ValidationError):
        gr.k4_formula(15)


def test_translations(g17):
    assert all(gr.translation_is_automorphism(g17, a) for a in range(17))
    assert gr.random_translation_check(gr.build_graph(17, 2), seed=3)


@pytest.mark.parametrize("p, alpha, doubled", [(17, 1, False), (41, 1, False), (17, 2, False), (17, 1, True)])
def test_generator_invariance(p, alpha, doubled):
    assert gr.generator_invariance_check(p, alpha, doubled)


def test_export_edgelist(g17):
    lines = gr.export_edgelist(g17).decode().splitlines()
    assert lines[0] == "0 1"
    assert len(lines) == 68


def test_export_dimacs(g17):
    lines = gr.export_edgelist(g17, "dimacs").decode().splitlines()
    assert lines[0] == "p edge 17 68"
    assert lines[1] == "e 1 2"
    assert len(lines) == 69


def test_export_unknown_format(g17):
    with pytest.raises(ValueError):
        gr.export_edgelist(g17, "graphml")


def test_unit_group_shared():
    g = gr.build_graph(17)
    assert g.group.g == build_unit_group(17).g
