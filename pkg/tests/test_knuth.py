import pytest
from hypothesis import given

from conftest import matchings
from shortchords.bijection import reduce
from shortchords.knuth import (
    class_generating_function,
    elementary_moves,
    equivalence_class,
    insert_short_chord,
    insertion_witness,
    is_closed,
    knuth_classes,
)
from shortchords.matchings import Matching, MatchingError, enumerate_all, enumerate_matchings, parse_matching
from shortchords.patterns import intersection_graph
from shortchords.symfunc import SchurExpansion
from shortchords.tableaux import hook_length_count


def moves_by_definition(m):
    """Block-level rewriting straight from the move rules."""
    blocks = {frozenset(c) for c in m.chords} | {frozenset([s]) for s in m.singletons}
    block_of = {v: b for b in blocks for v in b}
    out = set()
    for i, j in m.chords:
        if j != i + 1:
            continue
        short = frozenset((i, j))
        for c, near, far in ((j + 1, j, i), (i - 1, i, j)):
            if not 1 <= c <= m.n:
                continue
            other = block_of[c]
            rest = blocks - {short, other}
            new = {frozenset((c, near))}
            new.add(frozenset([far]) if len(other) == 1 else frozenset([far, *(other - {c})]))
            bs = rest | new
            out.add(Matching(m.n, tuple(tuple(sorted(b)) for b in bs if len(b) == 2),
                             tuple(min(b) for b in bs if len(b) == 1)))
    return out


def test_move_examples():
    assert elementary_moves(parse_matching("{(1,2),(3)}")) == [parse_matching("{(1),(2,3)}")]
    assert parse_matching("{(1,4),(2,3)}") in elementary_moves(parse_matching("{(1,2),(3,4)}"))
    assert elementary_moves(parse_matching("{(1,3),(2,4)}")) == []


@pytest.mark.parametrize("n", range(9))
def test_moves_match_definition(n):
    for m in enumerate_all(n):
        got = elementary_moves(m)
        assert len(got) == len(set(got))
        assert set(got) == moves_by_definition(m)


@pytest.mark.parametrize("n", range(9))
def test_moves_are_symmetric_and_preserve_invariants(n):
    for m in enumerate_all(n):
        core = reduce(m).core
        label = intersection_graph(m).canonical_label
        for x in elementary_moves(m):
            assert m in elementary_moves(x)
            assert (x.n, x.f) == (m.n, m.f)
            assert reduce(x).core == core
            assert intersection_graph(x).canonical_label == label


def test_class_examples():
    cls = equivalence_class(parse_matching("{(1,2),(3,5),(4)}"))
    assert len(cls) == 4 == hook_length_count((4, 1))
    free = parse_matching("{(1,3),(2,4)}")
    assert equivalence_class(free) == {free}
    classes = {frozenset(c.members) for c in knuth_classes(4, 0)}
    assert classes == {frozenset({free}),
                       frozenset({parse_matching("{(1,2),(3,4)}"), parse_matching("{(1,4),(2,3)}")})}


@pytest.mark.parametrize("n", range(10))
def test_classes_are_core_fibres(n):
    for f in range(n % 2, n + 1, 2):
        fibres = {}
        for m in enumerate_matchings(n, f):
            fibres.setdefault(reduce(m).core, set()).add(m)
        infos = knuth_classes(n, f)
        assert {c.core: set(c.members) for c in infos} == fibres
        for c in infos:
            assert c.size == hook_length_count(c.shape)


def test_generating_function_examples():
    pair = {parse_matching("{(1,2),(3,4)}"), parse_matching("{(1,4),(2,3)}")}
    assert class_generating_function(pair) == SchurExpansion(4, {(2, 2): 1})
    assert class_generating_function({parse_matching("{(1,3),(2,4)}")}) == SchurExpansion(4, {(4,): 1})
    assert class_generating_function(enumerate_matchings(4, 0)) == SchurExpansion(4, {(4,): 1, (2, 2): 1})
    with pytest.raises(ValueError):
        class_generating_function({parse_matching("{(1,2),(3,4)}")})


@pytest.mark.parametrize("n", range(10))
def test_each_class_is_one_schur_function(n):
    for f in range(n % 2, n + 1, 2):
        for c in knuth_classes(n, f):
            assert class_generating_function(c.members) == SchurExpansion(n, {c.shape: 1})


def test_insert_examples():
    m = parse_matching("{(1,3),(2,6),(4,5)}")
    assert insert_short_chord(m, 3) == parse_matching("{(1,5),(2,8),(3,4),(6,7)}")
    assert insert_short_chord(Matching(0), 1) == parse_matching("{(1,2)}")
    with pytest.raises(MatchingError):
        insert_short_chord(m, 8)
    with pytest.raises(MatchingError):
        insert_short_chord(m, 0)


@pytest.mark.parametrize("n", range(7))
def test_insertions_share_core_and_class(n):
    for m in enumerate_all(n):
        core = reduce(m).core
        inserted = [insert_short_chord(m, i) for i in range(1, n + 2)]
        assert all(reduce(x).core == core for x in inserted)
        cls = equivalence_class(inserted[0])
        assert all(x in cls for x in inserted)


@pytest.mark.parametrize("n", range(11))
def test_insertion_witness_rebuilds(n):
    for m in enumerate_all(n):
        cur = reduce(m).core
        for i in reversed(insertion_witness(m)):
            cur = insert_short_chord(cur, i)
        assert cur == m


@given(matchings(12))
def test_class_is_closed(m):
    if m.n <= 10:
        assert is_closed(equivalence_class(m))


def test_is_closed_detects_open_sets():
    assert not is_closed({parse_matching("{(1,2),(3)}")})
    assert is_closed(enumerate_matchings(5, 1))
