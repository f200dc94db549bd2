"""
Following a construction when the seed is not good enough
==========================================================

A locally optimal balanced seed already has a large cut, but one of its
parts can still be too heavy.  The constructions then peel vertices off
that part.  Two small graphs below force this, and the trace records
each step together with the claims that were checked along the way.
"""

import itertools

from judicious import WeightedGraph, judicious_3partition, judicious_bipartition

# two heavy K_4s next to three isolated vertices
edges = [(u, v, 10) for u, v in itertools.combinations(range(4), 2)]
edges += [(u + 4, v + 4, 10) for u, v in itertools.combinations(range(4), 2)]
g = WeightedGraph(11, edges)

out = judicious_3partition(g)
t = out.trace
print("3-partition of two heavy K_4s")
print("  branch:", t.branch)
print("  peeled before the pivot:", t.peel_sequence, " pivot:", t.pivot)
print(f"  r = {t.r}, c = {t.c}, theta = {t.theta}, n3 = {t.n3}")
print("  parts:", [sorted(p) for p in out.partition.parts])
print("  part weights:", [str(w) for w in out.part_weights], " cut:", out.cut_weight)
print("  claims checked:", len(t.checks))

# a clique whose vertices each see every member of an independent set
m = 11
edges = [(u, v, 1) for u, v in itertools.combinations(range(m), 2)]
edges += [(x, m + y, "10/11") for x in range(m) for y in range(m)]
g = WeightedGraph(2 * m, edges)

out = judicious_bipartition(g)
t = out.trace
print()
print("bipartition of K_11 joined to 11 independent vertices")
print("  branch:", t.branch, " moved:", t.peel_sequence, " pivot:", t.pivot)
print("  part weights:", [str(w) for w in out.part_weights], " cut:", out.cut_weight)
for claim in t.checks:
    print("   ok:", claim)
