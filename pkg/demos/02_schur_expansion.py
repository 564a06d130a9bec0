"""Schur expansions of descent generating functions.

The short-chord statistic on M_{N,f} only ever produces two-row Schur
functions, and the coefficient of s_(N-k,k) counts short-chord-free
matchings on N-2k points with f singletons.

Run: python demos/02_schur_expansion.py
"""
from shortchords.bessel import short_free_count
from shortchords.descents import DescentVector
from shortchords.matchings import enumerate_matchings, short_mask
from shortchords.symfunc import descent_vector, schur_expand, sparse_criterion_vector
from shortchords.tableaux import descent_vector_of_shape

for n, f in [(4, 0), (3, 1), (6, 0), (7, 1), (8, 2)]:
    v = descent_vector(enumerate_matchings(n, f), short_mask, n)
    e = schur_expand(v)
    counts = [short_free_count(n - 2 * k, f) for k in range((n - f) // 2 + 1)]
    print(f"M_{n},{f}: {e}")
    print(f"   short-chord-free counts by k: {counts}")
    print(f"   sparse criterion coefficients: {sparse_criterion_vector(v).coefficients}")

# A shape's own descent vector expands to a single Schur function.
print("\nSyt(3,2,1) expands to", schur_expand(descent_vector_of_shape((3, 2, 1))))

# A lone descent set {1} at N=3 is not symmetric; the leftover is reported.
bad = schur_expand(DescentVector.from_sets(3, {(1,): 1}))
print("single {1} at N=3:", bad)
