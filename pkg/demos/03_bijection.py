"""Core reduction and the bijection m -> (core, tableau).

Run: python demos/03_bijection.py
"""
from shortchords.bijection import forward, inverse, path_of_tableau, reduce, unstable_matching_of_path
from shortchords.matchings import enumerate_all, parse_matching, short_set
from shortchords.tableaux import descent_set

m = parse_matching("{(1,7),(2,10),(3,6),(4,5),(8,9)}")
r = reduce(m)
print("matching      ", m)
print("unstable      ", r.unstable_chords)
print("stable        ", r.stable)
print("core          ", r.core)

core, t = forward(m)
print("tableau       ", t, " descents", sorted(descent_set(t)), " short", sorted(short_set(m)))

p = path_of_tableau(t)
print("ballot path   ", p.heights[1:])
chords, stable = unstable_matching_of_path(p)
print("path chords   ", chords, " unpaired up steps", stable)
print("rebuilt       ", inverse(core, t))

# the two maps undo each other on every matching with up to 9 points
assert all(inverse(*forward(x)) == x for n in range(10) for x in enumerate_all(n))
print("roundtrip over all matchings with N <= 9: ok")
