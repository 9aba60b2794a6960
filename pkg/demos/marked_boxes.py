"""Tour of the marked-box model: rows of boxes, home slots, the
displacement count, and the binomial identity the model explains.

Run:  python3 demos/marked_boxes.py
"""

from math import comb

from tchrom.configmodel import (
    Configuration,
    b0_shift_bijection,
    closed_T,
    count_B,
    count_T,
    enumerate_configurations,
    nat,
    special_bijection,
    verify_binomial_identity,
)


def render(gamma, b0):
    """One-line picture: marked boxes are [*], home slots get a caret."""
    boxes = "".join("[*]" if p in gamma.marks else "[ ]" for p in range(1, gamma.n + 1))
    homes = {b0 + 2 * j - 1 for j in range(1, gamma.s + 1)}
    carets = "".join(" ^ " if p in homes else "   " for p in range(1, gamma.n + 1))
    return boxes, carets


print("A configuration is a row of n boxes with s of them marked.")
print("The j-th mark's home is slot b0 + 2j - 1; nat counts marks away")
print("from home. All 2-mark rows of length 4, homes for b0 = 1:\n")
for gamma in enumerate_configurations(4, 2):
    boxes, carets = render(gamma, 1)
    print(f"  {boxes}   marks {gamma.marks}, nat = {nat(gamma, 1)}")
print(f"  {render(enumerate_configurations(4, 2)[0], 1)[1]}   (home slots)")

print("\nCounting rows of length 6 by displacement, s = 3, b0 = 1:")
for i in range(4):
    brute = count_T(6, 3, i, 1)
    closed = closed_T(6, i)
    formula = "1" if i == 0 else f"C(6,{i}) - C(6,{i - 1})"
    print(f"  nat = {i}: {brute} rows, closed form {formula} = {closed}")

print("\nThe count is independent of b0; an explicit bijection moves the")
print("first home one slot right while preserving nat. For (2,4) in 6 boxes:")
gamma = Configuration((2, 4), 6)
for b0 in (1, 2, 3):
    boxes, _ = render(gamma, b0)
    print(f"  b0 = {b0}: {boxes}  marks {gamma.marks}, nat = {nat(gamma, b0)}")
    if b0 < 3:
        gamma = b0_shift_bijection(gamma, 2, b0)

print("\nFully displaced square rows (2i boxes, i marks, nat = i) are")
print("counted by the Catalan numbers, via a size-dropping bijection:")
for i in range(1, 7):
    print(f"  i = {i}: {count_T(2 * i, i, i, 1)}")
gamma = Configuration((1, 3), 4)
image = special_bijection(gamma, 2)
print(f"  e.g. marks {gamma.marks} in 4 boxes -> marks {image.marks} in 3 boxes")

print("\nAll of this feeds one binomial identity. For n = 9, s = 2, k = 3:")
n, s, k = 9, 2, 3
for j in range(s + 1):
    weight = comb(s + k - 2 * j, s - j) * comb(n - 1 - s - k + 2 * j, j)
    print(f"  j = {j}: {count_B(n, s, k, j)} rows satisfy the j-condition, weight {weight}")
lhs = sum(count_B(n, s, k, j) for j in range(s + 1))
rhs = sum(comb(n, l) for l in range(s + 1))
print(f"  total {lhs} = C(9,0) + C(9,1) + C(9,2) = {rhs}")
print(f"  verify_binomial_identity(9, 2, 3): {verify_binomial_identity(n, s, k)}")
