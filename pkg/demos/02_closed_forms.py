"""The recursion against the textbook closed forms for cycles, cubes and Johnson graphs."""
from fractions import Fraction
from math import factorial

from drgresist import FamilySpec, cycle_closed_form, family_array, resistance_table

# Even cycle: R^(l) = l (N - l) / N.
N = 12
table = resistance_table(family_array(FamilySpec("cycle", {"N": N})))
for l, r in enumerate(table.R, start=1):
    print(f"C_{N}  l={l}:  recursion {r!s:>6}   closed form {cycle_closed_form(N, l)}")

# For large N the cycle looks like an infinite line and R^(l) -> l.
big = 10**6
print("C_1e6, l=1..5:", [float(cycle_closed_form(big, l)) for l in range(1, 6)])

# Hypercube: the first stratum is (2^d - 1) / (d 2^(d-1)).
for d in range(3, 8):
    r1 = resistance_table(family_array(FamilySpec("hypercube", {"d": d}))).R[0]
    assert r1 == Fraction(2**d - 1, d * 2 ** (d - 1))
    print(f"Q_{d}: R^(1) = {r1} ~ {float(r1):.4f}  (2/d = {2 / d:.4f})")

# Johnson J(n, d): R^(1) = 2 (n! - d!(n-d)!) / (d (n-d) n!).
for n, d in [(6, 3), (8, 4), (10, 5)]:
    r1 = resistance_table(family_array(FamilySpec("johnson", {"n": n, "d": d}))).R[0]
    closed = Fraction(2 * (factorial(n) - factorial(d) * factorial(n - d)), d * (n - d) * factorial(n))
    print(f"J({n},{d}): R^(1) = {r1}  matches closed form: {r1 == closed}")
