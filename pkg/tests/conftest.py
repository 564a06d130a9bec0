from __future__ import annotations

from hypothesis import strategies as st

from shortchords.matchings import Matching


@st.composite
def matchings(draw, max_n: int = 10, min_n: int = 0, perfect: bool = False) -> Matching:
    """Random matching: shuffle [n], keep a prefix as singletons, pair up the rest."""
    n = draw(st.integers(min_n, max_n))
    if perfect and n % 2:
        n -= 1
    f = 0 if perfect else draw(st.sampled_from(range(n % 2, n + 1, 2)))
    order = draw(st.permutations(range(1, n + 1)))
    singles = order[:f]
    rest = order[f:]
    chords = [tuple(sorted(rest[i:i + 2])) for i in range(0, len(rest), 2)]
    return Matching(n, tuple(chords), tuple(singles))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
