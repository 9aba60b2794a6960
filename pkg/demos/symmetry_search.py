"""Probe when the acyclic-orientation total is a symmetric function.

Trees always are (scalar multiple of the chromatic symmetric function),
and so are single cycles. One might hope the pattern extends to every
graph whose cycles share no edge, but a square with two pendant edges
already breaks it.

Run:  python3 demos/symmetry_search.py
"""

from tchrom import cycle, path, star, total_orientation_cqsf
from tchrom.chromatic import check_symmetry_conjecture
from tchrom.graph import from_edge_list

BOWTIE = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
SQUARE_PENDANTS = from_edge_list(6, [(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4)])
SHARED_EDGE = from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])

CASES = [
    # (name, graph, cycles pairwise edge-disjoint?)
    ("path on 5", path(5), True),
    ("star on 5", star(5), True),
    ("cycle on 5", cycle(5), True),
    ("cycle on 6", cycle(6), True),
    ("two triangles sharing a vertex", BOWTIE, True),
    ("square with two pendant edges", SQUARE_PENDANTS, True),
    ("two triangles sharing an edge", SHARED_EDGE, False),
]

print("graph                            edge-disjoint cycles?  total symmetric?")
for name, g, disjoint in CASES:
    verdict = check_symmetry_conjecture(g)
    print(f"{name:<32} {str(disjoint):<22} {verdict}")

print()
print("The square with two pendants has a single cycle, yet its total is")
print("not symmetric. The failure sits at partition (2,2,1,1):")
total = total_orientation_cqsf(SQUARE_PENDANTS)
for alpha in ((1, 1, 2, 2), (1, 2, 1, 2)):
    print(f"  {alpha}  {total.coefficient(alpha)}")
print("Symmetry would force these two rows to agree; they differ in the")
print("odd-degree slots. Each row is still palindromic, and reversed")
print("compositions still match, so those weaker identities are intact.")
