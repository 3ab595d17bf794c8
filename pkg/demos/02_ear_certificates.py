"""Strong bipartite spanning subdigraphs of C_n({1,k}) for odd n and k.

Each (n, k) falls into one subcase of the ear construction. The certificate
(an arc set plus a bipartition) turns into a proper 2-coloring by coloring
every arc by the side of its tail.
"""
from collections import Counter

from pconn import (certificate_coloring, circulant_bipartite_subdigraph, ear_plan,
                   is_properly_connected, lemma_subcase, make_circulant)

# one small instance in detail
plan = ear_plan(9, 3)
print(f"C_9({{1,3}}) uses subcase {plan.subcase}")
print(f"  base cycle ({len(plan.base_cycle)} vertices): {[v % 9 for v in plan.base_cycle]}")
for label, ear in plan.ears:
    print(f"  ear {label}: {[v % 9 for v in ear]}")
cert = circulant_bipartite_subdigraph(9, 3)
print(f"  parts: {sorted(cert.parts.part1)} | {sorted(cert.parts.part2)}")
print(f"  {len(cert.arcs)} of 18 arcs kept")

# subcase census over a wider range
census = Counter()
for n in range(9, 32, 2):
    for k in range(3, n, 2):
        D = make_circulant(n, [1, k])
        cert = circulant_bipartite_subdigraph(n, k)
        assert is_properly_connected(D, certificate_coloring(D, cert)).ok
        census[lemma_subcase(n, k)] += 1
print()
print("instances per subcase, odd n in 9..31:")
for sub in sorted(census, key=lambda s: [int(x) for x in s.split(".")]):
    print(f"  {sub:6s} {census[sub]}")

# 3.3 borrows the k = 3 certificate through the relabelling j -> jk mod n
print()
print("subcase 3.3 instances:", [(n, k) for n in range(9, 32, 2) for k in range(3, n, 2)
                                 if lemma_subcase(n, k) == "3.3"])
