"""Bessel polynomials and the distribution of short chords in perfect matchings."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .matchings import Matching, MatchingError, enumerate_matchings, short_mask

__all__ = [
    "IntPolynomial",
    "bessel_theta",
    "collapse_short_chords",
    "expand_singletons",
    "schur_coeffs_via_bessel",
    "shift_expand",
    "short_chord_distribution",
    "short_free_count",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[d]`` is the coefficient of x**d."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else "x" if d == 1 else f"x^{d}"
            body = str(abs(c)) if (abs(c) != 1 or d == 0) else ""
            terms.append(("-" if c < 0 else "+", body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def bessel_theta(n: int) -> IntPolynomial:
    """theta_n(x) = sum_k (2n-k)! / (k! (n-k)! 2^(n-k)) x^k."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    coeffs = []
    for k in range(n + 1):
        q, r = divmod(factorial(2 * n - k), factorial(k) * factorial(n - k) * 2 ** (n - k))
        assert r == 0
        coeffs.append(q)
    return IntPolynomial(tuple(coeffs))


def shift_expand(p: IntPolynomial, a: int) -> IntPolynomial:
    """Coefficients of p(x + a)."""
    out = [0] * len(p.coeffs)
    for d, c in enumerate(p.coeffs):
        for i in range(d + 1):
            out[i] += c * comb(d, i) * a ** (d - i)
    return IntPolynomial(tuple(out))


def short_chord_distribution(n: int) -> tuple[int, ...]:
    """h[i]: perfect matchings on 2n vertices with exactly i short chords (brute force)."""
    h = [0] * (n + 1)
    for m in enumerate_matchings(2 * n, 0):
        h[bin(short_mask(m)).count("1")] += 1
    return tuple(h)


def short_free_count(n: int, f: int) -> int:
    """|M_{n,f}(Short = empty)| by brute force."""
    return sum(1 for m in enumerate_matchings(n, f) if not short_mask(m))


def collapse_short_chords(m: Matching) -> Matching:
    """Replace each short chord of a perfect matching with one unmatched vertex."""
    if not m.is_perfect:
        raise MatchingError("expected a perfect matching")
    label = [0] * (m.n + 1)
    nxt = 0
    v = 1
    while v <= m.n:
        nxt += 1
        label[v] = nxt
        if m.partner[v] == v + 1:
            label[v + 1] = nxt
            v += 2
        else:
            v += 1
    chords = tuple((label[i], label[j]) for i, j in m.chords if j != i + 1)
    singles = tuple(label[i] for i, j in m.chords if j == i + 1)
    return Matching(nxt, chords, singles)


def expand_singletons(m: Matching) -> Matching:
    """Inverse of :func:`collapse_short_chords`: each unmatched vertex becomes a short chord."""
    label = [0] * (m.n + 1)
    pos = 0
    for v in range(1, m.n + 1):
        pos += 1
        label[v] = pos
        if m.partner[v] == v:
            pos += 1
    chords = tuple((label[i], label[j]) for i, j in m.chords)
    chords += tuple((label[v], label[v] + 1) for v in m.singletons)
    return Matching(pos, chords)


def schur_coeffs_via_bessel(n_vertices: int, f: int) -> tuple[int, ...]:
    """c_k for M_{N,f}: the (x+1)^f Taylor coefficient of theta_{n+f-k} at x = -1."""
    if f < 0 or f > n_vertices or (n_vertices - f) % 2:
        raise ValueError(f"N - f must be even and nonnegative, got N={n_vertices}, f={f}")
    n = (n_vertices - f) // 2
    return tuple(shift_expand(bessel_theta(n + f - k), -1)[f] for k in range(n + 1))


def h_vector(n: int) -> Sequence[int]:
    """h(P_2n, i) for i = 0..n, read off theta_n(x - 1)."""
    return shift_expand(bessel_theta(n), -1).coeffs
