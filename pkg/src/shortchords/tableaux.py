"""Partitions, compositions, standard Young tableaux and their descent sets.

Subsets of [N-1] are carried as bitmasks (bit i-1 for element i).  Partitions
are plain weakly decreasing tuples of positive ints.
"""
from __future__ import annotations

import os
import tempfile
from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .descents import DescentVector
from .matchings import mask_of, members

Partition = tuple[int, ...]
Composition = tuple[int, ...]

MAX_N = 64
CACHE_ENV = "SHORTCHORDS_CACHE_DIR"

__all__ = [
    "SYT",
    "Partition",
    "Composition",
    "cache_dir",
    "composition_of_set",
    "conjugate",
    "conjugate_cmp",
    "descent_mask",
    "descent_set",
    "descent_vector_of_shape",
    "enumerate_syt",
    "hook_length_count",
    "is_partition",
    "is_sparse",
    "odds",
    "partitions_of",
    "set_cache_dir",
    "set_of_composition",
    "superstandard",
    "two_row_tableau",
]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p >= i) for i in range(1, shape[0] + 1))


def conjugate_cmp(lam: Partition, mu: Partition) -> int:
    """Compare column-length sequences lexicographically: -1, 0 or 1."""
    if sum(lam) != sum(mu):
        raise ValueError(f"weights differ: {lam} has {sum(lam)}, {mu} has {sum(mu)}")
    a, b = conjugate(lam), conjugate(mu)
    return (a > b) - (a < b)


def _partitions_desc(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest first in the conjugate order (so ``(1,)*n`` leads)."""
    if n < 0:
        return ()
    parts = list(_partitions_desc(n, n))
    parts.sort(key=cmp_to_key(conjugate_cmp), reverse=True)
    return tuple(parts)


def hook_length_count(shape: Partition) -> int:
    """Number of SYT of the given shape, by the hook-length formula."""
    n = sum(shape)
    cols = conjugate(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // prod


def composition_of_set(subset: Iterable[int], n: int) -> Composition:
    """{i1 < ... < il} in [n-1]  ->  (i1, i2-i1, ..., n-il)."""
    s = sorted(subset)
    if s and (s[0] < 1 or s[-1] > n - 1):
        raise ValueError(f"{s} is not a subset of [1,{n - 1}]")
    cuts = [0] + s + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def set_of_composition(alpha: Sequence[int]) -> frozenset[int]:
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {tuple(alpha)}")
    out, acc = [], 0
    for a in alpha[:-1]:
        acc += a
        out.append(acc)
    return frozenset(out)


def odds(k: int) -> frozenset[int]:
    return frozenset(range(1, 2 * k, 2))


def is_sparse(mask: int) -> bool:
    """No two consecutive elements."""
    return not (mask & (mask >> 1))


@dataclass(frozen=True)
class SYT:
    """Standard Young tableau, stored row by row (English notation)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if not is_partition([len(r) for r in rows]):
            raise ValueError(f"row lengths {[len(r) for r in rows]} are not a partition")
        n = sum(len(r) for r in rows)
        if sorted(v for r in rows for v in r) != list(range(1, n + 1)):
            raise ValueError(f"entries are not exactly 1..{n}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns are not increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def row(self, i: int) -> frozenset[int]:
        """Entries of row i (1-based); empty past the last row."""
        return frozenset(self.rows[i - 1]) if i <= len(self.rows) else frozenset()

    def row_of(self) -> dict[int, int]:
        return {v: i for i, r in enumerate(self.rows, 1) for v in r}

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


def parse_tableau(text: str) -> SYT:
    """Read rows separated by '/' with comma-separated entries, e.g. "1,3,4,5/2"."""
    rows = []
    for chunk in text.strip().split("/"):
        try:
            rows.append(tuple(int(x) for x in chunk.split(",") if x.strip()))
        except ValueError:
            raise ValueError(f"cannot read tableau row {chunk!r}") from None
    return SYT(tuple(r for r in rows if r))


def two_row_tableau(n: int, second_row: Iterable[int]) -> SYT:
    second = tuple(sorted(second_row))
    top = tuple(v for v in range(1, n + 1) if v not in set(second))
    return SYT((top, second))


def descent_mask(t: SYT) -> int:
    row = t.row_of()
    return mask_of(i for i in range(1, t.n) if row[i + 1] > row[i])


def descent_set(t: SYT) -> frozenset[int]:
    """{i : i+1 sits in a strictly lower row than i}."""
    return members(descent_mask(t))


def enumerate_syt(shape: Partition) -> Iterator[SYT]:
    """All SYT of ``shape``: place 1..N one at a time, trying rows top to bottom."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v: int):
        if v > n:
            yield SYT(tuple(tuple(r) for r in rows))
            return
        for i, cap in enumerate(shape):
            if len(rows[i]) < cap and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                yield from rec(v + 1)
                rows[i].pop()

    yield from rec(1)


def superstandard(shape: Partition) -> SYT:
    """Column superstandard tableau: columns are filled one after another, top to bottom."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    cols = conjugate(shape)
    rows = [[] for _ in shape]
    v = 0
    for height in cols:
        for i in range(height):
            v += 1
            rows[i].append(v)
    return SYT(tuple(tuple(r) for r in rows))


# -- descent vectors of shapes, memoised and optionally cached on disk --

_cache_dir: Path | None = None
_cache_dir_set = False


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Route the on-disk shape cache to ``path`` (``None`` disables it)."""
    global _cache_dir, _cache_dir_set
    _cache_dir = Path(path) if path is not None else None
    _cache_dir_set = True


def cache_dir() -> Path | None:
    if _cache_dir_set:
        return _cache_dir
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _cache_file(root: Path, shape: Partition) -> Path:
    name = "_".join(map(str, shape)) or "empty"
    return root / f"N{sum(shape)}" / f"shape_{name}.txt"


def _read_cache(path: Path, shape: Partition) -> dict[int, int] | None:
    try:
        lines = path.read_text().splitlines()
    except OSError:
        return None
    if not lines or lines[0].split()[2:] != [str(p) for p in shape]:
        return None
    out = {}
    try:
        for line in lines[1:]:
            mask, count = line.split()
            out[int(mask)] = int(count)
    except ValueError:
        return None
    return out


def _write_cache(path: Path, shape: Partition, counts: dict[int, int]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    body = [f"# shape {' '.join(map(str, shape))}"]
    body += [f"{mask} {counts[mask]}" for mask in sorted(counts)]
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    with os.fdopen(fd, "w") as fh:
        fh.write("\n".join(body) + "\n")
    os.replace(tmp, path)


@lru_cache(maxsize=None)
def _shape_counts(shape: Partition) -> tuple[tuple[int, int], ...]:
    root = cache_dir()
    if root is not None:
        cached = _read_cache(_cache_file(root, shape), shape)
        if cached is not None:
            return tuple(sorted(cached.items()))
    counts = _descent_counts_dp(shape)
    if root is not None:
        _write_cache(_cache_file(root, shape), shape, counts)
    return tuple(sorted(counts.items()))


def _descent_counts_dp(shape: Partition) -> dict[int, int]:
    # Grow the tableau one entry at a time; a state is (row lengths, row of the
    # last entry) and carries a Counter of descent masks seen so far.
    n = sum(shape)
    if n == 0:
        return {0: 1}
    start = tuple(1 if i == 0 else 0 for i in range(len(shape)))
    layer = {(start, 0): Counter({0: 1})}
    for v in range(1, n):
        bit = 1 << (v - 1)
        nxt: dict[tuple, Counter] = {}
        for (lengths, last), masks in layer.items():
            for i, cap in enumerate(shape):
                if lengths[i] < cap and (i == 0 or lengths[i - 1] > lengths[i]):
                    grown = lengths[:i] + (lengths[i] + 1,) + lengths[i + 1:]
                    key = (grown, i)
                    acc = nxt.setdefault(key, Counter())
                    if i > last:
                        for mask, c in masks.items():
                            acc[mask | bit] += c
                    else:
                        acc.update(masks)
        layer = nxt
    total: Counter = Counter()
    for masks in layer.values():
        total.update(masks)
    return dict(total)


def descent_vector_of_shape(shape: Partition) -> DescentVector:
    """Multiset of descent sets over Syt(shape).

    Computed by a merged-state dynamic program rather than listing tableaux;
    the two agree (see tests).  Results are memoised, and written to the cache
    directory when one is configured.
    """
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    if sum(shape) > MAX_N:
        raise ValueError(f"N = {sum(shape)} exceeds the bitmask limit {MAX_N}")
    return DescentVector(sum(shape), dict(_shape_counts(shape)))
