"""
Complete graphs where the guarantees are met exactly
=====================================================

Odd cliques, K_{3q+1} and K_{qk+1} are the instances on which the
bipartition, 3-partition and k-partition guarantees leave no room.  This
script builds each partition and prints the bound table next to it.
"""

from judicious import judicious_3partition, judicious_bipartition, judicious_kpartition, report
from judicious.instances import complete_graph


def show(title, g, outcome, group):
    table = report(g, outcome.partition, [group])
    sizes = sorted(outcome.partition.sizes(), reverse=True)
    print(f"{title:<12} sizes {sizes}  cut {outcome.cut_weight}  heaviest {outcome.max_part_weight}")
    for entry in table:
        print(f"{'':12} {entry.id.value:<16} bound {entry.value}  slack {entry.slack}")


# bipartitions of odd cliques split (n-1)/2 against (n+1)/2
for n in (5, 9):
    g = complete_graph(n)
    show(f"K_{n}, k=2", g, judicious_bipartition(g), "maxd")

# three parts of sizes q, q, q+1
for q in (1, 3):
    g = complete_graph(3 * q + 1)
    show(f"K_{3 * q + 1}, k=3", g, judicious_3partition(g), "max32")

# the heaviest part of a k-partition of K_{qk+1} holds q+1 vertices
for k, q in ((4, 2), (5, 3)):
    g = complete_graph(q * k + 1)
    show(f"K_{q * k + 1}, k={k}", g, judicious_kpartition(g, k), "maxk")
