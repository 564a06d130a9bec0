"""Generating functions of set-valued statistics, symmetry tests and Schur expansions.

Everything works on :class:`~shortchords.descents.DescentVector` values with
exact integer arithmetic.  The Schur expansion is extracted by triangular
elimination against column superstandard tableaux, so no linear solver is
involved.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, TypeVar

import numpy as np

from .descents import MAX_VECTOR_N, DescentVector, as_mask
from .matchings import members
from .tableaux import (
    Partition,
    composition_of_set,
    descent_mask,
    descent_vector_of_shape,
    is_sparse,
    odds,
    partitions_of,
    superstandard,
)

T = TypeVar("T")

__all__ = [
    "CriterionResult",
    "DescentVector",
    "NotSymmetric",
    "SchurExpansion",
    "complement_vector",
    "descent_vector",
    "hook_criterion",
    "hook_criterion_vector",
    "hook_shape",
    "is_symmetric_by_compositions",
    "schur_expand",
    "sparse_criterion",
    "sparse_criterion_vector",
    "subset_sums",
    "superset_sums",
]


@dataclass(frozen=True, eq=False)
class SchurExpansion:
    n: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {tuple(k): v for k, v in self.coeffs.items() if v})

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __getitem__(self, shape: Partition) -> int:
        return self.coeffs.get(tuple(shape), 0)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return SchurExpansion(self.n, acc)

    @property
    def is_schur_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    @property
    def shapes(self) -> list[Partition]:
        return sorted(self.coeffs, reverse=True)

    def is_two_row(self) -> bool:
        return all(len(s) <= 2 for s in self.coeffs)

    def to_vector(self) -> DescentVector:
        """The descent multiset this expansion stands for."""
        out = DescentVector(self.n)
        for shape, c in self.coeffs.items():
            out = out + descent_vector_of_shape(shape) * c
        return out

    def to_dict(self) -> dict:
        return {"N": self.n, "coeffs": [{"shape": list(s), "c": self.coeffs[s]} for s in self.shapes]}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for s in self.shapes:
            c = self.coeffs[s]
            name = "s[" + ",".join(map(str, s)) + "]"
            terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms).replace("+ -", "- ")

    __repr__ = __str__


@dataclass(frozen=True)
class NotSymmetric:
    """Outcome of :func:`schur_expand` for a non-symmetric generating function.

    ``residual`` is what remains after eliminating every shape; it is nonzero.
    """

    residual: DescentVector

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    coefficients: tuple[int, ...]
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def descent_vector(items: Iterable[T], stat: Callable[[T], object], n: int) -> DescentVector:
    """Aggregate ``stat`` over ``items``; ``stat`` returns a bitmask or a set of ints."""
    if n > MAX_VECTOR_N:
        raise ValueError(f"N = {n} exceeds the descent-vector limit {MAX_VECTOR_N}")
    limit = 1 << max(n - 1, 0)
    acc: dict[int, int] = defaultdict(int)
    for a in items:
        mask = as_mask(stat(a))
        if not 0 <= mask < limit:
            raise ValueError(f"statistic {sorted(members(mask))} of {a!r} is not inside [1,{n - 1}]")
        acc[mask] += 1
    return DescentVector(n, acc)


def complement_vector(v: DescentVector) -> DescentVector:
    full = (1 << max(v.n - 1, 0)) - 1
    return DescentVector(v.n, {full ^ m: c for m, c in v.counts.items()})


def _dense(v: DescentVector) -> np.ndarray:
    size = 1 << max(v.n - 1, 0)
    big = max((abs(c) for c in v.counts.values()), default=0) * size >= 2**62
    arr = np.zeros(size, dtype=object if big else np.int64)
    for m, c in v.counts.items():
        arr[m] = c
    return arr


def subset_sums(v: DescentVector) -> np.ndarray:
    """out[S] = sum of counts[J] over J subset of S (zeta transform)."""
    arr = _dense(v)
    bits = max(v.n - 1, 0)
    for b in range(bits):
        view = arr.reshape(-1, 2, 1 << b)
        view[:, 1, :] += view[:, 0, :]
    return arr


def superset_sums(v: DescentVector) -> np.ndarray:
    """out[S] = sum of counts[J] over J superset of S."""
    arr = _dense(v)
    bits = max(v.n - 1, 0)
    for b in range(bits):
        view = arr.reshape(-1, 2, 1 << b)
        view[:, 0, :] += view[:, 1, :]
    return arr


def is_symmetric_by_compositions(v: DescentVector) -> bool:
    """Compare, across rearrangements of each composition, how many objects respect it.

    An object respects a composition when its statistic is contained in the
    composition's set of partial sums.
    """
    respected = subset_sums(v)
    seen: dict[tuple[int, ...], int] = {}
    bits = max(v.n - 1, 0)
    for s in range(1 << bits):
        key = tuple(sorted(composition_of_set(members(s), v.n))) if v.n else ()
        value = respected[s]
        if seen.setdefault(key, value) != value:
            return False
    return True


def schur_expand(v: DescentVector) -> SchurExpansion | NotSymmetric:
    """Exact Schur coefficients of the generating function of ``v``.

    Shapes are visited from largest to smallest in the conjugate order.  Only
    shapes at least as large as lambda have a tableau whose descent set equals
    that of the superstandard tableau of lambda, and lambda has exactly one,
    so the residual count there is the coefficient of lambda.
    """
    residual = dict(v.counts)
    coeffs: dict[Partition, int] = {}
    for shape in partitions_of(v.n):
        c = residual.get(descent_mask(superstandard(shape)), 0)
        if not c:
            continue
        coeffs[shape] = c
        for m, k in descent_vector_of_shape(shape).counts.items():
            left = residual.get(m, 0) - c * k
            if left:
                residual[m] = left
            else:
                residual.pop(m, None)
    if residual:
        return NotSymmetric(DescentVector(v.n, residual))
    return SchurExpansion(v.n, coeffs)


def hook_shape(n: int, k: int) -> Partition:
    return (n - k,) + (1,) * k


def sparse_criterion_vector(v: DescentVector) -> CriterionResult:
    """Two-row test on a descent multiset.

    Holds iff every statistic value is sparse and the number of objects whose
    statistic contains J depends only on |J| for sparse J.  The coefficient of
    s_(N-k,k) is then the count at {1,3,...,2k-1}.
    """
    n = v.n
    coefficients = tuple(v[odds(k)] for k in range(n // 2 + 1))
    bad = [m for m, c in v.counts.items() if c and not is_sparse(m)]
    if bad:
        return CriterionResult(False, coefficients, f"statistic {sorted(members(bad[0]))} is not sparse")
    above = superset_sums(v)
    by_size: dict[int, int] = {}
    for s in range(1 << max(n - 1, 0)):
        if not is_sparse(s):
            continue
        k = bin(s).count("1")
        if by_size.setdefault(k, above[s]) != above[s]:
            return CriterionResult(
                False, coefficients,
                f"superset counts differ among sparse sets of size {k} (at {sorted(members(s))})")
    return CriterionResult(True, coefficients)


def sparse_criterion(items: Iterable[T], stat: Callable[[T], object], n: int) -> CriterionResult:
    return sparse_criterion_vector(descent_vector(items, stat, n))


def hook_criterion_vector(v: DescentVector) -> CriterionResult:
    """Hook test: the count at J depends only on |J|; coefficient k is the count at [k]."""
    n = v.n
    coefficients = tuple(v[range(1, k + 1)] for k in range(max(n, 1)))
    for s in range(1 << max(n - 1, 0)):
        k = bin(s).count("1")
        if v.counts.get(s, 0) != coefficients[k]:
            return CriterionResult(False, coefficients,
                                   f"count at {sorted(members(s))} differs from count at [{k}]")
    return CriterionResult(True, coefficients)


def hook_criterion(items: Iterable[T], stat: Callable[[T], object], n: int) -> CriterionResult:
    return hook_criterion_vector(descent_vector(items, stat, n))
