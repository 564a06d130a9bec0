from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import matchings
from shortchords.knuth import is_closed
from shortchords.matchings import Matching, enumerate_all, enumerate_matchings, parse_matching, short_mask
from shortchords.patterns import (
    REFINEMENT_KEYS,
    avoidance_counterexample,
    avoiders,
    avoiders_expansion,
    canonical_label,
    cell_sizes,
    contains_pattern,
    crossing_number,
    intersect_counts,
    intersection_graph,
    refine_by,
    singleton_pattern_schur_positive,
)
from shortchords.symfunc import NotSymmetric, SchurExpansion

M2 = parse_matching("{(1,7),(2,10),(3,6),(4,5),(8,9)}")


def contains_by_subsets(big, small):
    """Try every increasing index map and compare blocks."""
    blocks = {frozenset(c) for c in small.chords} | {frozenset([s]) for s in small.singletons}
    big_blocks = {frozenset(c) for c in big.chords} | {frozenset([s]) for s in big.singletons}
    for idx in combinations(range(1, big.n + 1), small.n):
        image = {frozenset(idx[v - 1] for v in b) for b in blocks}
        if image <= big_blocks:
            return True
    return False


def test_containment_examples():
    assert contains_pattern(M2, parse_matching("{(1,3),(2,4)}"))
    assert contains_pattern(M2, Matching(0))
    assert not contains_pattern(Matching(4, (), (1, 2, 3, 4)), parse_matching("{(1,2)}"))
    assert not contains_pattern(parse_matching("{(1,2)}"), parse_matching("{(1,2),(3)}"))


@pytest.mark.parametrize("ambient", range(8))
def test_containment_matches_subset_search(ambient):
    pats = [p for k in range(5) for p in enumerate_all(k)]
    for m in enumerate_all(ambient):
        for p in pats:
            assert contains_pattern(m, p) == contains_by_subsets(m, p)


@given(matchings(10), matchings(4))
def test_containment_random(big, small):
    assert contains_pattern(big, small) == contains_by_subsets(big, small)


def test_avoider_examples():
    assert avoiders(5, 5, [parse_matching("{(1,2)}")]) == [Matching(5, (), (1, 2, 3, 4, 5))]
    assert avoiders(4, 3, [parse_matching("{(1,2)}")]) == []
    assert avoiders(4, 0, [parse_matching("{(1,3),(2,4)}")]) == [
        parse_matching("{(1,2),(3,4)}"), parse_matching("{(1,4),(2,3)}")]
    assert avoiders(5, 1, []) == list(enumerate_matchings(5, 1))


def test_singleton_predicate_examples():
    assert singleton_pattern_schur_positive(parse_matching("{(1,3),(2,4)}"))
    assert singleton_pattern_schur_positive(parse_matching("{(1,2)}"))
    bad = parse_matching("{(1,2),(3)}")
    assert not singleton_pattern_schur_positive(bad)
    n, f, result = avoidance_counterexample(bad)
    assert (n, f) == (3, 1)
    assert isinstance(result, NotSymmetric)


def test_positive_pattern_has_no_counterexample():
    assert avoidance_counterexample(parse_matching("{(1,3),(2)}"), max_n=7) is None


@pytest.mark.parametrize("k", range(6))
def test_short_free_pattern_avoiders_are_closed(k):
    for pat in enumerate_all(k):
        if short_mask(pat):
            continue
        for n in range(10):
            for f in range(n % 2, n + 1, 2):
                assert is_closed(avoiders(n, f, [pat]))


def test_intersection_examples():
    m = parse_matching("{(1,3),(2,6),(4,5)}")
    g = intersection_graph(m)
    assert g.edges == ((0, 1),)
    assert crossing_number(m) == 2
    assert intersect_counts(m) == (1, 1, 1, 0, 0, 1)
    assert sorted(intersect_counts(m)) == [0, 0, 1, 1, 1, 1]
    nc = parse_matching("{(1,6),(2,3),(4,5)}")
    assert intersection_graph(nc).edges == () and crossing_number(nc) <= 1
    assert crossing_number(M2) == 2
    assert crossing_number(Matching(3, (), (1, 2, 3))) == 0


def test_canonical_label_distinguishes():
    path = canonical_label(4, [(0, 1), (1, 2), (2, 3)])
    star = canonical_label(4, [(0, 1), (0, 2), (0, 3)])
    assert path != star
    assert path == canonical_label(4, [(3, 1), (1, 0), (0, 2)])


@st.composite
def graphs(draw):
    k = draw(st.integers(0, 6))
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(k)))
    return k, edges, perm


@given(graphs())
def test_canonical_label_is_relabel_invariant(g):
    k, edges, perm = g
    assert canonical_label(k, edges) == canonical_label(k, [(perm[a], perm[b]) for a, b in edges])


@given(matchings(12))
def test_crossing_number_by_subsets(m):
    g = intersection_graph(m)
    adj = set(g.edges)
    best = 0
    for r in range(1, len(g.vertices) + 1):
        if any(all((a, b) in adj for a, b in combinations(c, 2)) for c in combinations(range(len(g.vertices)), r)):
            best = r
    assert crossing_number(m) == best


def test_refine_example():
    cells = refine_by(4, 0, "crossing")
    assert cells == {1: SchurExpansion(4, {(2, 2): 1}), 2: SchurExpansion(4, {(4,): 1})}
    assert cell_sizes(4, 0, "crossing") == {1: 2, 2: 1}
    with pytest.raises(ValueError):
        refine_by(4, 0, "nope")


def test_pair_count_zero_is_noncrossing():
    for n in range(1, 9):
        for f in range(n % 2, n + 1, 2):
            expected = [m for m in enumerate_matchings(n, f) if not intersection_graph(m).edges]
            cell = refine_by(n, f, "pair-count")[0]
            assert cell == avoiders_expansion(n, f, [parse_matching("{(1,3),(2,4)}")])
            assert cell.to_vector().total == len(expected)


@pytest.mark.parametrize("key", sorted(REFINEMENT_KEYS))
def test_refinement_cells_are_schur_positive(key):
    for n in range(8):
        for f in range(n % 2, n + 1, 2):
            cells = refine_by(n, f, key)
            assert sum(cell_sizes(n, f, key).values()) == sum(1 for _ in enumerate_matchings(n, f))
            for e in cells.values():
                assert isinstance(e, SchurExpansion) and e.is_schur_positive
