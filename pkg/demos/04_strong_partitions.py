"""Strong 2-partitions of circulants.

A 2-partition is strong when the arcs crossing it form a strong digraph.
Constructive routes cover every C_n({1,s}) except n = 7, and brute force
shows that C_7({1,3}) and C_7({1,5}) have no strong 2-partition at all.
"""
from pconn import CycleOrder, crossing_digraph, make_circulant, strong_two_partition_bruteforce
from pconn.partition import construct_with_route

for n in range(3, 14):
    row = []
    for s in range(2, n):
        D = make_circulant(n, [1, s])
        built = construct_with_route(D, CycleOrder(range(n)))
        brute = strong_two_partition_bruteforce(D)
        mark = "." if built else ("x" if brute is None else "?")
        row.append(mark)
    print(f"n={n:2d}  s=2..{n - 1}: {''.join(row)}")
print("(. constructed, x no strong 2-partition exists, ? exists but no route)")

D = make_circulant(7, [1, 3])
print()
print("C_7({1,3}) brute force:", strong_two_partition_bruteforce(D))
parts, route = construct_with_route(make_circulant(11, [1, 3]), CycleOrder(range(11)))
print(f"C_11({{1,3}}) via {route}: {sorted(parts.part1)} | {sorted(parts.part2)}, "
      f"{crossing_digraph(make_circulant(11, [1, 3]), parts).m} crossing arcs")
