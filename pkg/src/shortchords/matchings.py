"""Matchings on [n]: the canonical value type, enumeration, and chord primitives.

Vertices are 1-based throughout.  A :class:`Matching` keeps its chords sorted
by opener and its singletons ascending, so equality and hashing depend only on
the underlying partition of ``[n]``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

Chord = tuple[int, int]

__all__ = [
    "Chord",
    "Matching",
    "MatchingError",
    "ParseError",
    "chords_intersect",
    "combine",
    "count_matchings",
    "double_factorial",
    "enumerate_matchings",
    "enumerate_all",
    "mask_of",
    "order_key",
    "members",
    "parse_matching",
    "restrict",
    "short_mask",
    "short_set",
]


class MatchingError(ValueError):
    """Raised when blocks do not form a matching, or an operation's precondition fails."""


class ParseError(MatchingError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class Matching:
    n: int
    chords: tuple[Chord, ...] = ()
    singletons: tuple[int, ...] = ()
    _partner: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise MatchingError(f"negative vertex count {self.n}")
        chords = tuple(sorted((min(c), max(c)) for c in self.chords))
        singles = tuple(sorted(self.singletons))
        partner = [0] * (self.n + 1)
        for i, j in chords:
            if i == j:
                raise MatchingError(f"chord ({i},{j}) is a loop")
            for v in (i, j):
                if not 1 <= v <= self.n:
                    raise MatchingError(f"vertex {v} outside [1,{self.n}]")
                if partner[v]:
                    raise MatchingError(f"vertex {v} occurs in two blocks")
            partner[i], partner[j] = j, i
        for v in singles:
            if not 1 <= v <= self.n:
                raise MatchingError(f"vertex {v} outside [1,{self.n}]")
            if partner[v]:
                raise MatchingError(f"vertex {v} occurs in two blocks")
            partner[v] = v
        missing = [v for v in range(1, self.n + 1) if not partner[v]]
        if missing:
            raise MatchingError(f"vertices {missing} are not covered by any block")
        object.__setattr__(self, "chords", chords)
        object.__setattr__(self, "singletons", singles)
        object.__setattr__(self, "_partner", tuple(partner))

    @classmethod
    def from_partner(cls, partner: Iterable[int]) -> "Matching":
        """Build from a 1-based partner table (index 0 ignored); ``partner[v] == v`` marks a singleton."""
        partner = tuple(partner)
        n = len(partner) - 1
        chords = tuple((v, partner[v]) for v in range(1, n + 1) if partner[v] > v)
        singles = tuple(v for v in range(1, n + 1) if partner[v] == v)
        return cls(n, chords, singles)

    @classmethod
    def perfect(cls, *chords: Chord) -> "Matching":
        n = 2 * len(chords)
        return cls(n, chords)

    @property
    def partner(self) -> tuple[int, ...]:
        """Partner table: ``partner[v]`` is the other endpoint of v's chord, or v itself."""
        return self._partner

    @property
    def f(self) -> int:
        return len(self.singletons)

    @property
    def is_perfect(self) -> bool:
        return not self.singletons

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        blocks = [(c[0], c) for c in self.chords] + [(v, (v,)) for v in self.singletons]
        blocks.sort()
        return "{" + ",".join("(" + ",".join(map(str, b)) + ")" for _, b in blocks) + "}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "chords": [list(c) for c in self.chords],
            "singletons": list(self.singletons),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Matching":
        return cls(int(data["n"]), tuple(tuple(c) for c in data["chords"]),
                   tuple(data.get("singletons", ())))


_TOKEN = re.compile(r"\s*(?:(\{)|(\})|(,)|\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\))")


def parse_matching(text: str, n: int | None = None) -> Matching:
    """Parse ``{(1,3),(2,6),(4,5)}``; singletons are written ``(4)``.

    The vertex count defaults to the largest vertex mentioned.  JSON objects in
    the ``{"n": ..., "chords": ...}`` form are accepted too.
    """
    stripped = text.strip()
    if stripped.startswith('{"') or stripped.startswith("{ \""):
        try:
            return Matching.from_dict(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON ({exc.msg})", text, exc.pos) from None
        except (KeyError, TypeError) as exc:
            raise ParseError(f"JSON matching lacks a valid field {exc}", text, 0) from None
    pos = 0
    chords: list[Chord] = []
    singles: list[int] = []
    expect_open = True
    closed = False
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        while text[pos].isspace():
            pos += 1
        tok = _TOKEN.match(text, pos)
        if tok is None:
            what = "malformed block" if text[pos] == "(" else "unexpected character"
            raise ParseError(what, text, pos)
        lbrace, rbrace, comma, a, b = tok.groups()
        if closed:
            raise ParseError("trailing input after '}'", text, tok.start())
        if expect_open:
            if not lbrace:
                raise ParseError("expected '{'", text, tok.start())
            expect_open = False
        elif lbrace:
            raise ParseError("nested '{'", text, tok.start())
        elif rbrace:
            closed = True
        elif a is not None:
            if b is None:
                singles.append(int(a))
            else:
                chords.append((int(a), int(b)))
        pos = tok.end()
    if expect_open:
        raise ParseError("empty input", text, 0)
    if not closed:
        raise ParseError("missing '}'", text, len(text))
    vertices = [v for c in chords for v in c] + singles
    if n is None:
        n = max(vertices, default=0)
    return Matching(n, tuple(chords), tuple(singles))


def mask_of(members: Iterable[int]) -> int:
    """Bitmask with bit i-1 set for each element i (elements are >= 1)."""
    mask = 0
    for i in members:
        mask |= 1 << (i - 1)
    return mask


def members(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def short_mask(m: Matching) -> int:
    mask = 0
    for i, j in m.chords:
        if j == i + 1:
            mask |= 1 << (i - 1)
    return mask


def short_set(m: Matching) -> frozenset[int]:
    """Openers of short chords ``(i, i+1)``.  ``(1, n)`` is never counted."""
    return frozenset(i for i, j in m.chords if j == i + 1)


def chords_intersect(c1: Chord, c2: Chord) -> bool:
    a, b = sorted(c1)
    c, d = sorted(c2)
    if len({a, b, c, d}) < 4:
        raise MatchingError(f"chords {c1} and {c2} share an endpoint")
    return a < c < b < d or c < a < d < b


def double_factorial(k: int) -> int:
    """k!! with the conventions (-1)!! = 0!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def count_matchings(n: int, f: int) -> int:
    """|M_{n,f}| = C(n, f) * (n-f-1)!!, zero for impossible (n, f)."""
    if f < 0 or f > n or (n - f) % 2:
        return 0
    return comb(n, f) * double_factorial(n - f - 1)


def enumerate_matchings(n: int, f: int) -> Iterator[Matching]:
    """Yield every matching on [n] with exactly f singletons, once each.

    The smallest unhandled vertex is paired with each larger free vertex in
    increasing order, or (after those) left single while singleton budget
    remains.  The stream is sorted by :func:`order_key`.
    """
    if n < 0 or f < 0 or f > n or (n - f) % 2:
        return
    partner = [0] * (n + 1)

    def rec(v: int, singles_left: int, chords_left: int):
        while v <= n and partner[v]:
            v += 1
        if v > n:
            yield Matching.from_partner(partner)
            return
        if chords_left:
            for w in range(v + 1, n + 1):
                if not partner[w]:
                    partner[v], partner[w] = w, v
                    yield from rec(v + 1, singles_left, chords_left - 1)
                    partner[v] = partner[w] = 0
        if singles_left:
            partner[v] = v
            yield from rec(v + 1, singles_left - 1, chords_left)
            partner[v] = 0

    yield from rec(1, f, (n - f) // 2)


def order_key(m: Matching) -> tuple[float, ...]:
    """Sort key of the enumeration order: partner table, with a singleton ranking after every chord."""
    return tuple(float("inf") if p == v else p for v, p in enumerate(m.partner) if v)


def enumerate_all(n: int) -> Iterator[Matching]:
    """Every matching on [n], grouped by number of singletons."""
    for f in range(n % 2, n + 1, 2):
        yield from enumerate_matchings(n, f)


def restrict(m: Matching, subset: Iterable[int]) -> Matching:
    """Restriction to an m-invariant vertex set, re-indexed to 1..|subset|."""
    s = sorted(set(subset))
    inside = set(s)
    for v in s:
        if not 1 <= v <= m.n:
            raise MatchingError(f"vertex {v} outside [1,{m.n}]")
    for i, j in m.chords:
        if (i in inside) != (j in inside):
            raise MatchingError(f"set is not invariant: chord ({i},{j}) crosses its boundary")
    rank = {v: r for r, v in enumerate(s, 1)}
    chords = tuple((rank[i], rank[j]) for i, j in m.chords if i in inside)
    singles = tuple(rank[v] for v in m.singletons if v in inside)
    return Matching(len(s), chords, singles)


def combine(subset: Iterable[int], inner: Matching, outer: Matching) -> Matching:
    """The unique matching on [N] restricting to ``inner`` on ``subset`` and ``outer`` off it."""
    s = sorted(set(subset))
    total = inner.n + outer.n
    if len(s) != inner.n:
        raise MatchingError(f"subset has {len(s)} vertices but inner matching has {inner.n}")
    if s and (s[0] < 1 or s[-1] > total):
        raise MatchingError(f"subset not contained in [1,{total}]")
    inside = set(s)
    rest = [v for v in range(1, total + 1) if v not in inside]
    partner = [0] * (total + 1)
    for labels, sub in ((s, inner), (rest, outer)):
        for v in range(1, sub.n + 1):
            partner[labels[v - 1]] = labels[sub.partner[v] - 1]
    return Matching.from_partner(partner)
