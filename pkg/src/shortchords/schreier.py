"""Schreier graph of S_2n acting on perfect matchings by the simple transpositions.

Vertices are the perfect matchings on [2n], indexed by their rank in
:func:`~shortchords.matchings.enumerate_matchings` order.  ``edges[v, i-1]`` is
the image of vertex v under s_i (v itself for a loop), and ``layer`` is the
breadth-first distance from m0 = {(1,2),(3,4),...}, i.e. the involutive length.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .descents import DescentVector
from .matchings import Matching, MatchingError, enumerate_matchings
from .symfunc import NotSymmetric, SchurExpansion, schur_expand

DEFAULT_MAX_2N = 14

__all__ = [
    "ConjectureResult",
    "SchreierGraph",
    "apply_transposition",
    "asc_des_loop",
    "build_graph",
    "check_conjecture",
    "involution_ascents",
    "stat_masks",
    "to_dot",
]


def _act(partner: tuple[int, ...], i: int) -> tuple[int, ...]:
    def sigma(v: int) -> int:
        return i + 1 if v == i else i if v == i + 1 else v

    out = list(partner)
    for v in range(1, len(partner)):
        out[sigma(v)] = sigma(partner[v])
    return tuple(out)


def apply_transposition(m: Matching, i: int) -> Matching:
    """s_i . m: swap the labels i and i+1 in every chord."""
    if not m.is_perfect:
        raise MatchingError("the action is defined on perfect matchings")
    if not 1 <= i <= m.n - 1:
        raise MatchingError(f"generator index {i} outside [1,{m.n - 1}]")
    return Matching.from_partner(_act(m.partner, i))


def base_matching(n2: int) -> Matching:
    return Matching(n2, tuple((i, i + 1) for i in range(1, n2, 2)))


@dataclass(frozen=True, eq=False)
class SchreierGraph:
    n2: int
    vertices: tuple[Matching, ...]
    index: dict[Matching, int]
    edges: np.ndarray
    layer: np.ndarray

    @property
    def size(self) -> int:
        return len(self.vertices)

    def layer_sizes(self) -> list[int]:
        return np.bincount(self.layer).tolist() if self.size else []

    def is_bipartite_ignoring_loops(self) -> bool:
        """Two-colour check done independently of the BFS layers."""
        colour = np.full(self.size, -1, dtype=np.int64)
        for start in range(self.size):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.edges[v]:
                    if w == v:
                        continue
                    if colour[w] < 0:
                        colour[w] = 1 - colour[v]
                        stack.append(int(w))
                    elif colour[w] == colour[v]:
                        return False
        return True

    def is_graded(self) -> bool:
        """Every non-loop edge joins adjacent layers."""
        src = np.arange(self.size)[:, None]
        diff = self.layer[self.edges] - self.layer[src]
        loop = self.edges == src
        return bool(np.all(loop | (np.abs(diff) == 1)))


def build_graph(n2: int, max_2n: int = DEFAULT_MAX_2N) -> SchreierGraph:
    if n2 < 0 or n2 % 2:
        raise ValueError(f"vertex count must be even and nonnegative, got {n2}")
    if n2 > max_2n:
        raise ValueError(f"2n = {n2} exceeds the bound {max_2n}")
    verts = tuple(enumerate_matchings(n2, 0))
    index = {m: r for r, m in enumerate(verts)}
    by_partner = {m.partner: r for r, m in enumerate(verts)}
    gens = max(n2 - 1, 0)
    edges = np.empty((len(verts), gens), dtype=np.int64)
    for r, m in enumerate(verts):
        p = m.partner
        for i in range(1, gens + 1):
            edges[r, i - 1] = r if p[i] == i + 1 else by_partner[_act(p, i)]
    layer = np.full(len(verts), -1, dtype=np.int64)
    root = index[base_matching(n2)]
    layer[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in edges[v]:
            if layer[w] < 0:
                layer[w] = layer[v] + 1
                queue.append(int(w))
    return SchreierGraph(n2, verts, index, edges, layer)


def stat_masks(g: SchreierGraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Asc, Des and Loop bitmasks for every vertex, in vertex order."""
    src = np.arange(g.size)[:, None]
    diff = g.layer[g.edges] - g.layer[src]
    weights = np.left_shift(np.int64(1), np.arange(g.edges.shape[1], dtype=np.int64))
    loop = g.edges == src
    asc = ((diff > 0) * weights).sum(axis=1)
    des = ((diff < 0) * weights).sum(axis=1)
    loops = (loop * weights).sum(axis=1)
    return asc, des, loops


def asc_des_loop(m: Matching, g: SchreierGraph) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split [2n-1] by whether s_i raises, lowers or fixes the layer of m."""
    v = g.index[m]
    asc, des, loop = [], [], []
    for i in range(1, g.n2):
        w = g.edges[v, i - 1]
        d = g.layer[w] - g.layer[v]
        if w == v:
            loop.append(i)
        elif d == 1:
            asc.append(i)
        elif d == -1:
            des.append(i)
        else:
            raise RuntimeError(f"edge {i} at {m} changes the layer by {d}")
    return frozenset(asc), frozenset(des), frozenset(loop)


def involution_ascents(m: Matching) -> frozenset[int]:
    """Ascents of m read as a fixed-point-free involution w: w(i) < w(i+1)."""
    w = m.partner
    return frozenset(i for i in range(1, m.n) if w[i] < w[i + 1])


def _vector(n2: int, masks: np.ndarray) -> DescentVector:
    values, counts = np.unique(masks, return_counts=True)
    return DescentVector(n2, {int(v): int(c) for v, c in zip(values, counts)})


@dataclass(frozen=True)
class ConjectureResult:
    n2: int
    equidistributed: bool
    asc_vector: DescentVector
    des_vector: DescentVector
    asc_expansion: SchurExpansion | NotSymmetric
    des_expansion: SchurExpansion | NotSymmetric

    @property
    def des_schur_positive(self) -> bool:
        return isinstance(self.des_expansion, SchurExpansion) and self.des_expansion.is_schur_positive

    @property
    def asc_schur_positive(self) -> bool:
        return isinstance(self.asc_expansion, SchurExpansion) and self.asc_expansion.is_schur_positive


def check_conjecture(n2: int, g: SchreierGraph | None = None, max_2n: int = DEFAULT_MAX_2N) -> ConjectureResult:
    """Compare the Asc and Des multisets over PM_2n exactly, and expand both."""
    g = g if g is not None else build_graph(n2, max_2n)
    asc, des, _ = stat_masks(g)
    va, vd = _vector(n2, asc), _vector(n2, des)
    return ConjectureResult(n2, va == vd, va, vd, schur_expand(va), schur_expand(vd))


def _label(m: Matching) -> str:
    sep = "," if m.n >= 10 else ""
    return "|".join(f"{i}{sep}{j}" for i, j in m.chords)


def to_dot(g: SchreierGraph, loops: bool = False) -> str:
    """Graphviz text; one edge per generator, loops only on request."""
    lines = [f"graph schreier_{g.n2} {{"]
    for v, m in enumerate(g.vertices):
        lines.append(f'  v{v} [label="{_label(m)}", layer={int(g.layer[v])}];')
    for v in range(g.size):
        for i in range(1, g.n2):
            w = int(g.edges[v, i - 1])
            if w == v and loops:
                lines.append(f'  v{v} -- v{v} [label="{i}"];')
            elif v < w:
                lines.append(f'  v{v} -- v{w} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
