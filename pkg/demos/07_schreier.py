"""Schreier graph of perfect matchings under adjacent transpositions.

Layers are BFS distances from {(1,2),(3,4),...}.  Ascents and descents of a
matching are the generators that move it up or down a layer; we compare their
distributions over all of PM_2n.

Run: python demos/07_schreier.py
"""
from shortchords.schreier import build_graph, check_conjecture, to_dot

print(to_dot(build_graph(4), loops=True))

for n2 in range(2, 13, 2):
    g = build_graph(n2)
    r = check_conjecture(n2, g)
    print(f"2n={n2:<2} vertices={g.size:<6} layers={g.layer_sizes()}")
    print(f"      Asc and Des equidistributed: {r.equidistributed}")
    print(f"      Des expansion: {r.des_expansion}")
