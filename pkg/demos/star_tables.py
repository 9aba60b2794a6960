"""Walk through the star-graph tables: how the refinement depends on the
root's label, and how the normalized total collapses that dependence.

Run:  python3 demos/star_tables.py
"""

from tchrom import cqsf_labeled, star
from tchrom.chromatic import (
    normalized_total_star,
    star_cqsf_coeff_closed,
    tst_coeff_closed,
)
from tchrom.combinat import enumerate_compositions
from tchrom.graph import star_representative_labeling

N = 4


def show(title, rows):
    print(f"\n{title}")
    width = max(len(str(index)) for index, _ in rows)
    for index, value in rows:
        print(f"  {str(index):<{width}}  {value}")


print(f"Star graph on {N} vertices: one root joined to {N - 1} leaves.")
print("Its refinement depends only on which label the root receives,")
print("so one representative labeling per root label tells the whole story.")

for root in range(1, N + 1):
    lab = star_representative_labeling(N, root)
    refined = cqsf_labeled(star(N), lab)
    rows = [
        (alpha, refined.coefficient(alpha))
        for alpha in enumerate_compositions(N)
        if refined.coefficient(alpha)
    ]
    show(f"root label {root} (labeling {lab}):", rows)

print("\nThe same columns come out of the closed form, no enumeration:")
for root in (1, N):
    rows = [
        (alpha, star_cqsf_coeff_closed(alpha, root, N))
        for alpha in enumerate_compositions(N)
        if star_cqsf_coeff_closed(alpha, root, N)
    ]
    show(f"closed form, root label {root}:", rows)

print("\nSumming the representative refinements over every root label and")
print("checking against the two-binomial closed form:")
total = normalized_total_star(N)
rows = []
for alpha in enumerate_compositions(N):
    brute = total.coefficient(alpha)
    closed = tst_coeff_closed(alpha, N)
    marker = "" if brute == closed else "  <-- MISMATCH"
    if brute or closed:
        rows.append((alpha, f"{brute}{marker}"))
show("normalized total (brute == closed):", rows)

print("\nNote the palindromic rows: reversing the coefficient sequence in")
print(f"window {N - 1} leaves every row unchanged.")
