"""Descent multisets: the finite stand-in for a quasisymmetric generating function.

A :class:`DescentVector` on ``n`` records, for each subset J of [n-1]
(as a bitmask), how many objects have statistic exactly J.  The sum
``sum_J counts[J] * F_J`` is the generating function it represents.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .matchings import mask_of, members

MAX_VECTOR_N = 20


def as_mask(value) -> int:
    """Accept either a bitmask or an iterable of 1-based elements."""
    if isinstance(value, int):
        return value
    return mask_of(value)


@dataclass(frozen=True, eq=False)
class DescentVector:
    n: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative size {self.n}")
        limit = 1 << max(self.n - 1, 0)
        clean = {}
        for mask, c in self.counts.items():
            if not 0 <= mask < limit:
                raise ValueError(f"subset {sorted(members(mask))} is not inside [1,{self.n - 1}]")
            if c:
                clean[mask] = c
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_sets(cls, n: int, counts: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]]) -> "DescentVector":
        pairs = counts.items() if isinstance(counts, Mapping) else counts
        acc: dict[int, int] = {}
        for subset, c in pairs:
            m = as_mask(subset)
            acc[m] = acc.get(m, 0) + c
        return cls(n, acc)

    def __getitem__(self, subset) -> int:
        return self.counts.get(as_mask(subset), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DescentVector):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __bool__(self) -> bool:
        return bool(self.counts)

    def _check(self, other: "DescentVector") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "DescentVector") -> "DescentVector":
        self._check(other)
        acc = dict(self.counts)
        for m, c in other.counts.items():
            acc[m] = acc.get(m, 0) + c
        return DescentVector(self.n, acc)

    def __sub__(self, other: "DescentVector") -> "DescentVector":
        return self + other * -1

    def __mul__(self, k: int) -> "DescentVector":
        return DescentVector(self.n, {m: c * k for m, c in self.counts.items()})

    __rmul__ = __mul__

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.counts.values())

    def items(self):
        return sorted(self.counts.items())

    def as_sets(self) -> dict[frozenset[int], int]:
        return {members(m): c for m, c in self.items()}

    def to_dict(self) -> dict:
        return {"N": self.n, "counts": [{"set": sorted(members(m)), "c": c} for m, c in self.items()]}

    def __repr__(self) -> str:
        body = ", ".join(f"{set(sorted(members(m))) or '{}'}: {c}" for m, c in self.items())
        return f"DescentVector(n={self.n}, {{{body}}})"
