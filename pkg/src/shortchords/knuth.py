"""Knuth-like moves on matchings, their equivalence classes, and short-chord insertion."""
from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

from .bijection import reduce
from .matchings import Matching, MatchingError, enumerate_matchings, short_mask
from .symfunc import SchurExpansion, descent_vector, schur_expand

__all__ = [
    "ClassInfo",
    "class_generating_function",
    "elementary_moves",
    "equivalence_class",
    "insert_short_chord",
    "insertion_witness",
    "is_closed",
    "knuth_classes",
]


def _swap(partner: list[int], a: int, b: int, c: int) -> tuple[int, ...]:
    # (a,b) is short with b = a+1; c is adjacent to the pair.  Move the short
    # chord across c: c's block shifts to the far side.
    out = list(partner)
    other = partner[c]
    if c == a - 1:
        # (c), (a,a+1) -> (c,c+1), (a+1)  or  (c,x), (a,a+1) -> (c,c+1), (a+1,x)
        far = b
        out[c], out[a] = a, c
        if other == c:
            out[far] = far
        else:
            out[far], out[other] = other, far
    else:
        # (a,a+1), (c) -> (a), (a+1,c)  or  (a,a+1), (c,x) -> (a,x), (a+1,c)
        far = a
        out[b], out[c] = c, b
        if other == c:
            out[far] = far
        else:
            out[far], out[other] = other, far
    return tuple(out)


def elementary_moves(m: Matching) -> list[Matching]:
    """Every matching one elementary Knuth-like move away from ``m``."""
    partner = list(m.partner)
    out: dict[tuple[int, ...], None] = {}
    for i, j in m.chords:
        if j != i + 1:
            continue
        if j + 1 <= m.n:
            out[_swap(partner, i, j, j + 1)] = None
        if i - 1 >= 1:
            out[_swap(partner, i, j, i - 1)] = None
    return [Matching.from_partner(p) for p in out]


def equivalence_class(m: Matching) -> set[Matching]:
    """Breadth-first closure of ``m`` under elementary moves."""
    seen = {m}
    queue = deque([m])
    while queue:
        cur = queue.popleft()
        for nxt in elementary_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def insert_short_chord(m: Matching, i: int) -> Matching:
    """Insert the chord (i, i+1), shifting every vertex >= i up by two."""
    if not 1 <= i <= m.n + 1:
        raise MatchingError(f"insertion position {i} outside [1,{m.n + 1}]")

    def shift(v: int) -> int:
        return v if v < i else v + 2

    chords = tuple((shift(a), shift(b)) for a, b in m.chords) + ((i, i + 1),)
    return Matching(m.n + 2, chords, tuple(shift(v) for v in m.singletons))


def insertion_witness(m: Matching) -> list[int]:
    """Positions i_1, ..., i_k with m = insrt_{i_1}(... insrt_{i_k}(core(m)) ...)."""
    positions = []
    cur = m
    while True:
        sm = short_mask(cur)
        if not sm:
            break
        i = (sm & -sm).bit_length()
        positions.append(i)
        keep = [v for v in range(1, cur.n + 1) if v not in (i, i + 1)]
        rank = {v: r for r, v in enumerate(keep, 1)}
        cur = Matching(cur.n - 2,
                       tuple((rank[a], rank[b]) for a, b in cur.chords if a != i),
                       tuple(rank[v] for v in cur.singletons))
    return positions


def is_closed(matchings: Iterable[Matching]) -> bool:
    pool = set(matchings)
    return all(nxt in pool for m in pool for nxt in elementary_moves(m))


def class_generating_function(cls: Iterable[Matching]) -> SchurExpansion:
    """Schur expansion of a move-closed set under the short-chord statistic."""
    pool = set(cls)
    if not pool:
        return SchurExpansion(0)
    n = next(iter(pool)).n
    if not is_closed(pool):
        raise ValueError("set is not closed under Knuth-like moves")
    result = schur_expand(descent_vector(pool, short_mask, n))
    if not isinstance(result, SchurExpansion):
        raise RuntimeError("move-closed set produced a non-symmetric generating function")
    return result


class ClassInfo(NamedTuple):
    core: Matching
    size: int
    shape: tuple[int, ...]
    members: frozenset[Matching]


def knuth_classes(n: int, f: int) -> list[ClassInfo]:
    """Partition M_{n,f} into equivalence classes by breadth-first search."""
    unseen = set(enumerate_matchings(n, f))
    out = []
    for m in enumerate_matchings(n, f):
        if m not in unseen:
            continue
        cls = equivalence_class(m)
        unseen -= cls
        red = reduce(m)
        shape = (n - red.k, red.k) if red.k else (n,)
        out.append(ClassInfo(red.core, len(cls), shape if n else (), frozenset(cls)))
    return out
