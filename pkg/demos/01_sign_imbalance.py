"""Sign-imbalance of straight, skew and reversed shapes.

Run with ``python3 demos/01_sign_imbalance.py``.
"""
from skewdomino import F_poly, SignedSkewShape, shape_stats, sign_imbalance
from skewdomino.shapes import format_partition, partitions, subsets

# The sign of an SYT is the sign of its book-order reading word. Summing
# signs over all SYTs of a shape gives its imbalance I.
print("I of every partition of 6:")
for lam in partitions(6):
    print(f"  {format_partition(lam):>12}  I = {sign_imbalance(lam)}")

# Weighting each shape by x^v y^h z^d collapses the whole sum to a power of x + y.
for n in range(9):
    print(f"F_{n} of the empty shape = {F_poly((), n)}")

# Skew shapes above alpha = (2,2) and reversed shapes below it.
alpha = (2, 2)
print("\nshapes (2,2)/mu and their statistics:")
for k in range(5):
    for mu in subsets(alpha, k):
        s = SignedSkewShape(alpha, mu)
        print(f"  {s!s:>8}  stats={tuple(shape_stats(s))}  I={sign_imbalance(s)}")
for n in (-4, -2, 0, 2, 4):
    print(f"F_{n} of (2,2) = {F_poly(alpha, n)}")
