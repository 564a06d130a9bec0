"""Matchings, short chords, and how many of each there are.

Run: python demos/01_matchings.py
"""
from collections import Counter

from shortchords.matchings import count_matchings, enumerate_matchings, parse_matching, short_set

m = parse_matching("{(1,3),(2,6),(4,5)}")
print("matching        ", m)
print("short chords at ", sorted(short_set(m)))
print("as JSON         ", m.to_json())

print("\nM_{3,1}, one matching per line:")
for x in enumerate_matchings(3, 1):
    print("  ", x, " Short =", sorted(short_set(x)))

print("\n|M_{N,f}| for N <= 8 (rows N, columns f):")
for n in range(9):
    row = [count_matchings(n, f) if (n - f) % 2 == 0 and f <= n else 0 for f in range(n + 1)]
    print(f"  N={n}: {row}")

# how the number of short chords is spread over perfect matchings of 8 points
dist = Counter(len(short_set(x)) for x in enumerate_matchings(8, 0))
print("\nshort chords in perfect matchings on 8 points:", dict(sorted(dist.items())))
