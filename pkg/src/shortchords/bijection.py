"""Core reduction and the bijection between matchings and (core, two-row SYT) pairs.

``forward`` sends a matching to its core together with the two-row tableau
whose second row holds the closers of unstable chords.  ``inverse`` rebuilds a
matching from a short-chord-free core and a two-row tableau by way of the
tableau's ballot path.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .matchings import Chord, Matching, MatchingError, combine, restrict, short_mask
from .tableaux import SYT, two_row_tableau

__all__ = [
    "BallotPath",
    "ReductionResult",
    "forward",
    "inverse",
    "path_of_tableau",
    "reduce",
    "tableau_of",
    "unstable_matching_of_path",
]


@dataclass(frozen=True)
class ReductionResult:
    core: Matching
    stable: tuple[int, ...]
    unstable_chords: tuple[Chord, ...]

    @property
    def k(self) -> int:
        return len(self.unstable_chords)


def reduce(m: Matching, rng: random.Random | None = None) -> ReductionResult:
    """Delete chords whose endpoints are adjacent among the remaining vertices until none are.

    With ``rng`` unset the leftmost such chord goes first; otherwise a random
    one does.  The outcome does not depend on the choice.
    """
    partner = m.partner
    alive = list(range(1, m.n + 1))
    removed: list[Chord] = []
    while True:
        spots = [t for t in range(len(alive) - 1) if partner[alive[t]] == alive[t + 1]]
        if not spots:
            break
        t = spots[0] if rng is None else rng.choice(spots)
        removed.append((alive[t], alive[t + 1]))
        del alive[t:t + 2]
    return ReductionResult(restrict(m, alive), tuple(alive), tuple(sorted(removed)))


def tableau_of(m: Matching) -> SYT:
    """Two-row SYT whose second row is the set of closers of unstable chords."""
    red = reduce(m)
    return two_row_tableau(m.n, (j for _, j in red.unstable_chords))


def forward(m: Matching) -> tuple[Matching, SYT]:
    red = reduce(m)
    return red.core, two_row_tableau(m.n, (j for _, j in red.unstable_chords))


@dataclass(frozen=True)
class BallotPath:
    steps: tuple[int, ...]

    def __post_init__(self):
        h = 0
        for s in self.steps:
            if s not in (1, -1):
                raise ValueError(f"steps must be +1 or -1, got {s}")
            h += s
            if h < 0:
                raise ValueError("path dips below the axis")

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        """Prefix heights p_0 = 0, p_1, ..., p_N."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)

    @property
    def end(self) -> int:
        return sum(self.steps)

    @property
    def up(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.steps, 1) if s > 0)

    @property
    def down(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.steps, 1) if s < 0)

    def step_height(self, i: int) -> int:
        p = self.heights
        return max(p[i - 1], p[i])


def path_of_tableau(t: SYT) -> BallotPath:
    """Up steps at first-row entries, down steps at second-row entries."""
    if len(t.rows) > 2:
        raise ValueError(f"shape {t.shape} has more than two rows")
    second = t.row(2)
    steps = tuple(-1 if v in second else 1 for v in range(1, t.n + 1))
    # a valid SYT never dips below the axis; BallotPath re-checks it
    return BallotPath(steps)


def unstable_matching_of_path(p: BallotPath) -> tuple[tuple[Chord, ...], tuple[int, ...]]:
    """Pair every down step with the latest earlier step of the same step-height.

    Returns the (non-crossing) chords in the path's own labels, and the up
    steps left unpaired, which are exactly those lower than every later step.
    """
    heights = p.heights
    last_seen: dict[int, int] = {}
    chords: list[Chord] = []
    paired: set[int] = set()
    for j, s in enumerate(p.steps, 1):
        h = max(heights[j - 1], heights[j])
        if s < 0:
            i = last_seen[h]
            chords.append((i, j))
            paired.add(i)
        last_seen[h] = j
    stable = tuple(i for i in p.up if i not in paired)
    return tuple(sorted(chords)), stable


def inverse(core: Matching, t: SYT) -> Matching:
    """Rebuild the matching with the given short-chord-free core and tableau."""
    if short_mask(core):
        raise MatchingError(f"core {core} has a short chord")
    if len(t.rows) > 2:
        raise ValueError(f"shape {t.shape} has more than two rows")
    k = len(t.row(2))
    if t.n != core.n + 2 * k:
        raise ValueError(f"tableau of size {t.n} and shape {t.shape} does not fit a core on {core.n} vertices")
    chords, stable = unstable_matching_of_path(path_of_tableau(t))
    rest = [v for v in range(1, t.n + 1) if v not in set(stable)]
    rank = {v: r for r, v in enumerate(rest, 1)}
    unstable = Matching(len(rest), tuple((rank[i], rank[j]) for i, j in chords))
    return combine(stable, core, unstable)


def is_noncrossing(chords: Iterable[Chord]) -> bool:
    cs = sorted(chords)
    for a in range(len(cs)):
        for b in range(a + 1, len(cs)):
            (i1, j1), (i2, j2) = cs[a], cs[b]
            if i1 < i2 < j1 < j2:
                return False
    return True
