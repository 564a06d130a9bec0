"""Pattern containment in matchings, intersection graphs, and refinements of M_{N,f}."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Hashable, Iterable

from .matchings import Chord, Matching, chords_intersect, enumerate_matchings, short_mask
from .symfunc import NotSymmetric, SchurExpansion, descent_vector, schur_expand

__all__ = [
    "IntersectionGraph",
    "REFINEMENT_KEYS",
    "avoidance_counterexample",
    "avoiders",
    "avoiders_expansion",
    "canonical_label",
    "contains_pattern",
    "crossing_number",
    "intersect_counts",
    "intersection_graph",
    "refine_by",
    "singleton_pattern_schur_positive",
]


def contains_pattern(m2: Matching, m1: Matching) -> bool:
    """True iff some increasing index map embeds m1's blocks in m2 exactly."""
    if m1.n > m2.n:
        return False
    if len(m1.chords) > len(m2.chords) or len(m1.singletons) > len(m2.singletons):
        return False
    p1, p2 = m1.partner, m2.partner
    n1, n2 = m1.n, m2.n
    image = [0] * (n1 + 1)

    def rec(j: int, lo: int) -> bool:
        if j > n1:
            return True
        q = p1[j]
        if q < j:
            v = p2[image[q]]
            if v < lo:
                return False
            image[j] = v
            return rec(j + 1, v + 1)
        for v in range(lo, n2 - (n1 - j) + 1):
            w = p2[v]
            if (q == j) != (w == v) or (q > j and w < v):
                continue
            image[j] = v
            if rec(j + 1, v + 1):
                return True
        return False

    return rec(1, 1)


def avoiders(n: int, f: int, patterns: Iterable[Matching]) -> list[Matching]:
    pats = list(patterns)
    return [m for m in enumerate_matchings(n, f) if not any(contains_pattern(m, p) for p in pats)]


def avoiders_expansion(n: int, f: int, patterns: Iterable[Matching]) -> SchurExpansion | NotSymmetric:
    return schur_expand(descent_vector(avoiders(n, f, patterns), short_mask, n))


def singleton_pattern_schur_positive(m: Matching) -> bool:
    """Whether avoiding ``m`` alone keeps every M_{N',f'} Schur-positive.

    That happens exactly when m has no short chord or m is {(1,2)}.
    """
    return not short_mask(m) or (m.n == 2 and m.chords == ((1, 2),))


def avoidance_counterexample(m: Matching, max_n: int = 9) -> tuple[int, int, SchurExpansion | NotSymmetric] | None:
    """Smallest (N', f') up to ``max_n`` whose avoiders of m are not Schur-positive."""
    for n in range(max_n + 1):
        for f in range(n % 2, n + 1, 2):
            result = avoiders_expansion(n, f, [m])
            if isinstance(result, NotSymmetric) or not result.is_schur_positive:
                return n, f, result
    return None


def canonical_label(k: int, edges: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """(vertex count, least upper-triangle adjacency code over all relabelings)."""
    adj = [[False] * k for _ in range(k)]
    for a, b in edges:
        adj[a][b] = adj[b][a] = True
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    best = None
    for perm in permutations(range(k)):
        code = 0
        for a, b in pairs:
            code = (code << 1) | adj[perm[a]][perm[b]]
        if best is None or code < best:
            best = code
    return k, best or 0


@dataclass(frozen=True)
class IntersectionGraph:
    vertices: tuple[Chord, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def canonical_label(self) -> tuple[int, int]:
        return canonical_label(len(self.vertices), self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


def intersection_graph(m: Matching) -> IntersectionGraph:
    cs = m.chords
    edges = tuple((a, b) for a in range(len(cs)) for b in range(a + 1, len(cs))
                  if chords_intersect(cs[a], cs[b]))
    return IntersectionGraph(cs, edges)


def _max_clique(k: int, edges: Iterable[tuple[int, int]]) -> int:
    nbrs = [set() for _ in range(k)]
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    best = 0

    def grow(size: int, candidates: set[int]):
        nonlocal best
        best = max(best, size)
        for v in sorted(candidates):
            if size + len(candidates) <= best:
                return
            candidates = candidates - {v}
            grow(size + 1, candidates & nbrs[v])

    grow(0, set(range(k)))
    return best


def crossing_number(m: Matching) -> int:
    """Largest number of pairwise intersecting chords (0 with no chords)."""
    g = intersection_graph(m)
    return _max_clique(len(g.vertices), g.edges)


def intersect_counts(m: Matching) -> tuple[int, ...]:
    """I_i for i = 1..N: chords crossing the chord through i, 0 for singletons."""
    g = intersection_graph(m)
    deg = [0] * len(g.vertices)
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    out = [0] * (m.n + 1)
    for idx, (i, j) in enumerate(g.vertices):
        out[i] = out[j] = deg[idx]
    return tuple(out[1:])


def _pair_count(m: Matching) -> int:
    return sum(intersect_counts(m)) // 2


def _intersecting_chords(m: Matching) -> int:
    return sum(1 for x in intersect_counts(m) if x) // 2


def _max_i(m: Matching) -> int:
    return max(intersect_counts(m), default=0)


REFINEMENT_KEYS: dict[str, Callable[[Matching], Hashable]] = {
    "iso-class": lambda m: intersection_graph(m).canonical_label,
    "crossing": crossing_number,
    "pair-count": _pair_count,
    "intersecting-chords": _intersecting_chords,
    "max-I": _max_i,
}


def refine_by(n: int, f: int, key: str) -> dict[Hashable, SchurExpansion | NotSymmetric]:
    """Split M_{n,f} by an intersection invariant and expand each cell."""
    try:
        fn = REFINEMENT_KEYS[key]
    except KeyError:
        raise ValueError(f"unknown refinement key {key!r}; choose from {sorted(REFINEMENT_KEYS)}") from None
    cells: dict[Hashable, list[Matching]] = defaultdict(list)
    for m in enumerate_matchings(n, f):
        cells[fn(m)].append(m)
    return {k: schur_expand(descent_vector(v, short_mask, n)) for k, v in sorted(cells.items())}


def cell_sizes(n: int, f: int, key: str) -> Counter:
    fn = REFINEMENT_KEYS[key]
    return Counter(fn(m) for m in enumerate_matchings(n, f))
