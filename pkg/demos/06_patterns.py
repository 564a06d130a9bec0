"""Pattern avoidance and intersection-graph refinements.

Run: python demos/06_patterns.py
"""
from shortchords.matchings import enumerate_all, parse_matching
from shortchords.patterns import (
    avoidance_counterexample,
    avoiders_expansion,
    crossing_number,
    intersect_counts,
    refine_by,
    singleton_pattern_schur_positive,
)

m = parse_matching("{(1,3),(2,6),(4,5)}")
print(m, "crossing number", crossing_number(m), "I =", intersect_counts(m))

print("\nAvoiding the crossing {(1,3),(2,4)} in M_6,0:", avoiders_expansion(6, 0, [parse_matching("{(1,3),(2,4)}")]))

print("\nsingle patterns on 3 points:")
for p in enumerate_all(3):
    verdict = singleton_pattern_schur_positive(p)
    witness = None if verdict else avoidance_counterexample(p, max_n=7)
    print(f"  {str(p):<14} positive={verdict}" + (f"  fails first at (N,f)={witness[:2]}" if witness else ""))

print("\nM_6,0 split by number of crossing pairs:")
for value, e in refine_by(6, 0, "pair-count").items():
    print(f"  {value}: {e}")
