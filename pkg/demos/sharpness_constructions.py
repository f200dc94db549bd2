"""
Why the bipartition constants cannot be improved
=================================================

Two families push back on the bipartition guarantee.  A heavy apex joined
to a clique stops the cut term in front of the maximum degree from growing
past the current constant, and a clique drowned in isolated vertices does
the same for the average degree term of the part bound.  Both claims are
checked here by exhaustive search.
"""

from fractions import Fraction

from judicious import max_weighted_degree, total_weight
from judicious.instances import apex_graph, proposition2_search
from judicious.oracle import exact_max_kcut, verify_proposition1

# apex graphs: every bipartition cuts less than w/2 + c * Delta
for c, n in ((Fraction(1, 4), 5), (Fraction(1, 5), 7), (Fraction(1, 6), 10)):
    g = apex_graph(c, n)
    best = exact_max_kcut(g, 2)
    target = total_weight(g) / 2 + c * max_weighted_degree(g)
    print(f"apex c={c}, n={n}: max cut {best.optimum} vs {target}  holds={verify_proposition1(c, n)}")
    apex_side = next(part for part in best.witness.parts if n in part)
    print(f"    clique vertices on the apex side: {sorted(set(apex_side) - {n})}")

# padded cliques: some side always outweighs w/4 + c * d_w
for c in (Fraction(1, 20), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    g, evidence = proposition2_search(c)
    print(
        f"padding c={c}: K_{evidence.m} + {evidence.p} isolated, lightest heavy side "
        f"{evidence.min_max_part} > {evidence.threshold} [{evidence.method}]"
    )
