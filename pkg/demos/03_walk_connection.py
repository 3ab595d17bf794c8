"""Two colors for properly colored walks, and where the constructions stop.

Euler tours, balanced Hamiltonian digraphs, and Hamiltonian digraphs with
short chords all admit walk-connecting 2-colorings, with two exceptions
shown at the end.
"""
from pconn import (CycleOrder, Digraph, balanced_hamiltonian_wc_coloring, biorient,
                   euler_alternating_coloring, make_circulant, short_chord_wc_coloring, wc_number)
from pconn.errors import VerificationError
from pconn.wc_construct import LandingError, short_chord_construction

# alternate colors along an Euler tour
P3 = biorient([(0, 1), (1, 2)], 3)
print("bioriented path, Euler alternation:", euler_alternating_coloring(P3).colors)

# balanced Hamiltonian: the Hamiltonian cycle plus one odd cycle of what remains
D = make_circulant(9, [1, 3])
got = balanced_hamiltonian_wc_coloring(D, CycleOrder(range(9)))
print(f"C_9({{1,3}}) balanced route: {got.route}")

# short chords: a partial coloring, 0 marks arcs left uncolored
for n, S in ((9, [1, 2]), (11, [1, 5]), (12, [1, 4])):
    got = short_chord_wc_coloring(make_circulant(n, S), CycleOrder(range(n)))
    blank = got.coloring.colors.count(0)
    print(f"C_{n}({set(S)}) short-chord route {got.route}, {blank} arcs uncolored")

print()
print("exceptions")

# the odd-chord path from x_0 x_3 in C_9({1,3}) lands back on x_0
try:
    short_chord_construction(make_circulant(9, [1, 3]), CycleOrder(range(9)))
except LandingError as exc:
    print("  C_9({1,3}) case 2:", exc)
got = short_chord_wc_coloring(make_circulant(9, [1, 3]), CycleOrder(range(9)))
print("  ... fallback route:", got.route)

# balanced and Hamiltonian, but every 2-coloring fails
D = Digraph(7, [(0, 4), (1, 5), (2, 1), (3, 2), (4, 3), (4, 5), (5, 4), (5, 6), (6, 0)])
try:
    balanced_hamiltonian_wc_coloring(D, CycleOrder([6, 0, 4, 3, 2, 1, 5]))
except VerificationError as exc:
    print("  odd 7-cycle plus a 2-cycle:", exc)
print("  wc =", wc_number(D).number)
