import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matchings
from shortchords.matchings import MatchingError, double_factorial, parse_matching, short_set
from shortchords.schreier import (
    apply_transposition,
    asc_des_loop,
    base_matching,
    build_graph,
    check_conjecture,
    involution_ascents,
    stat_masks,
    to_dot,
)
from shortchords.symfunc import SchurExpansion


def involutive_length(m):
    """(inversions + exceedances) / 2 for the fixed-point-free involution w."""
    w = m.partner
    n = m.n
    inv = sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if w[i] > w[j])
    exc = sum(1 for i in range(1, n + 1) if w[i] > i)
    return (inv + exc) // 2 - n // 2


def test_action_examples():
    m0 = parse_matching("{(1,2),(3,4)}")
    assert apply_transposition(m0, 2) == parse_matching("{(1,3),(2,4)}")
    assert apply_transposition(m0, 1) == m0
    with pytest.raises(MatchingError):
        apply_transposition(parse_matching("{(1,2),(3)}"), 1)
    with pytest.raises(MatchingError):
        apply_transposition(m0, 4)


@given(matchings(12, min_n=2, perfect=True), st.data())
def test_action_is_an_involution(m, data):
    i = data.draw(st.integers(1, m.n - 1))
    assert apply_transposition(apply_transposition(m, i), i) == m


def test_graph_examples():
    g = build_graph(4)
    assert g.size == 3 and g.layer_sizes() == [1, 1, 1]
    g2 = build_graph(2)
    assert g2.size == 1 and g2.edges.tolist() == [[0]]
    g8 = build_graph(8)
    assert g8.size == 105 == sum(g8.layer_sizes())
    with pytest.raises(ValueError):
        build_graph(5)
    with pytest.raises(ValueError):
        build_graph(16)


def test_stat_examples():
    g = build_graph(4)
    m0 = base_matching(4)
    assert asc_des_loop(m0, g) == ({2}, set(), {1, 3})
    asc, des, loop = asc_des_loop(parse_matching("{(1,4),(2,3)}"), g)
    assert loop == {2} and des >= {1, 3}


@pytest.mark.parametrize("n2", range(0, 13, 2))
def test_graph_structure(n2):
    g = build_graph(n2)
    assert g.size == double_factorial(n2 - 1)
    assert g.is_bipartite_ignoring_loops()
    assert g.is_graded()
    gens = np.arange(g.edges.shape[1])
    for v in range(g.size):
        assert np.all(g.edges[g.edges[v], gens] == v)


@pytest.mark.parametrize("n2", range(0, 11, 2))
def test_layers_are_involutive_length(n2):
    g = build_graph(n2)
    for v, m in enumerate(g.vertices):
        assert g.layer[v] == involutive_length(m)


@pytest.mark.parametrize("n2", range(2, 13, 2))
def test_loop_equals_short(n2):
    g = build_graph(n2)
    asc, des, loop = stat_masks(g)
    assert np.all((asc & des) == 0) and np.all((asc & loop) == 0) and np.all((des & loop) == 0)
    assert np.all((asc | des | loop) == (1 << (n2 - 1)) - 1)
    for v, m in enumerate(g.vertices):
        assert {i for i in range(1, n2) if loop[v] >> (i - 1) & 1} == short_set(m)


@pytest.mark.parametrize("n2", range(2, 11, 2))
def test_asc_is_involution_ascents(n2):
    g = build_graph(n2)
    for m in g.vertices:
        assert asc_des_loop(m, g)[0] == involution_ascents(m)


def test_conjecture_examples():
    assert check_conjecture(4).equidistributed
    r = check_conjecture(2)
    assert r.equidistributed and r.asc_vector.items() == [(0, 1)]
    r = check_conjecture(10)
    assert r.equidistributed and r.des_schur_positive


@pytest.mark.parametrize("n2", range(0, 13, 2))
def test_conjecture_small(n2):
    r = check_conjecture(n2)
    assert r.equidistributed
    assert r.asc_schur_positive and r.des_schur_positive
    assert isinstance(r.des_expansion, SchurExpansion)


def test_dot_export():
    text = to_dot(build_graph(4))
    assert 'label="12|34"' in text and 'label="14|23"' in text
    assert text.count("--") == 3
    looped = to_dot(build_graph(4), loops=True)
    assert looped.count("--") == 3 + 3
