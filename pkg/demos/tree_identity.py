"""For a tree, the orientation total is a scalar multiple of the
chromatic symmetric function: every coefficient picks up the same
factor (q + 1)^(number of edges).

Run:  python3 demos/tree_identity.py
"""

from tchrom import csf, path, star, total_orientation_cqsf
from tchrom.chromatic import verify_tree_formula
from tchrom.graph import cycle, from_edge_list
from tchrom.qpoly import one_plus_q_power

SPIDER = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])

for name, tree in (("path on 5", path(5)), ("star on 5", star(5)), ("spider", SPIDER)):
    m = len(tree.edges)
    chi = csf(tree)
    total = total_orientation_cqsf(tree)
    factor = one_plus_q_power(m)
    print(f"{name}: {m} edges, factor (q+1)^{m} = {factor}")
    for lam in chi.support():
        lhs = total.coefficient(lam)
        rhs = chi.coefficient(lam) * factor
        tag = "ok" if lhs == rhs else "MISMATCH"
        print(f"  {lam}  chi: {chi.coefficient(lam)}  total: {lhs}  [{tag}]")
    print(f"  verify_tree_formula: {verify_tree_formula(tree)}")
    print()

print("The identity needs acyclicity. On a cycle the check refuses to run:")
try:
    verify_tree_formula(cycle(4))
except ValueError as err:
    print(f"  ValueError: {err}")

print()
print("Intuition: a tree has exactly 2^m acyclic orientations, one per")
print("subset of flipped edges, and flipping one edge of an orientation")
print("trades an ascent for a non-ascent independently of the others.")
