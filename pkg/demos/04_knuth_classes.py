"""Knuth-like moves: equivalence classes are exactly the fibres of the core map.

Run: python demos/04_knuth_classes.py
"""
from shortchords.knuth import class_generating_function, elementary_moves, insert_short_chord, knuth_classes
from shortchords.matchings import parse_matching

m = parse_matching("{(1,2),(3,5),(4)}")
print("moves from", m, "->", [str(x) for x in elementary_moves(m)])
print("insert at 3:", insert_short_chord(parse_matching("{(1,3),(2,6),(4,5)}"), 3))

for n, f in [(4, 0), (5, 1), (6, 0)]:
    print(f"\nclasses of M_{n},{f}:")
    for c in knuth_classes(n, f):
        print(f"  core {str(c.core):<22} size {c.size:<3} -> {class_generating_function(c.members)}")
