"""The circulant C_7({1,3}) has proper connection number 2.

No ear construction exists for n = 7, so the number comes from exhaustive
search. The script prints the witness and its DOT rendering.
"""
from pconn import is_properly_connected, make_circulant, pc_number, wc_number
from pconn.io import to_dot

D = make_circulant(7, [1, 3])
print(f"C_7({{1,3}}): n={D.n}, m={D.m}")

res = pc_number(D, cap=3)
print(f"pc = {res.number}")
for arc, c in zip(D.arcs, res.witness.colors):
    print(f"  {arc[0]} -> {arc[1]}  color {c}")

# the witness is a full proof: every ordered pair has a properly colored path
print("verified:", is_properly_connected(D, res.witness).ok)

# walks are weaker than paths, so wc can only be smaller
print(f"wc = {wc_number(D, cap=3).number}")

print()
print(to_dot(D, res.witness, name="C7_1_3"))
