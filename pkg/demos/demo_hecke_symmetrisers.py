"""Hecke algebra elements and q-symmetrisers, exactly.

Builds a few elements of H_4(q), checks the defining relations by direct
multiplication, and constructs the partial q-symmetriser S_[1,3] by its two
equivalent formulas (weighted sum over the block, ordered product of
baxterised generators).
"""

from fractions import Fraction as F

from fusedhecke import (
    element_to_obj,
    generator,
    multiply,
    symmetriser_product,
    symmetriser_sum,
    unit,
)

q = F(2)
m = 4

s1, s2 = generator(1, m, q), generator(2, m, q)

print("quadratic relation sigma_1^2 = (q - 1/q) sigma_1 + 1:")
print("  ", multiply(s1, s1) == s1.scale(q - 1 / q) + unit(m, q))

print("braid relation sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2:")
print("  ", multiply(multiply(s1, s2), s1) == multiply(multiply(s2, s1), s2))

s = symmetriser_sum(1, 3, m, q)
print("\nq-symmetriser S_[1,3] in H_4 at q = 2 (6 weighted terms):")
for entry in element_to_obj(s)["terms"]:
    print("   perm", entry["perm"], "coeff", entry["coeff"])

print("\nidempotent:", multiply(s, s) == s)
print("absorbs its generators with eigenvalue q:",
      multiply(s1, s) == s.scale(q) and multiply(s, s2) == s.scale(q))
print("product formula agrees with the sum formula:",
      symmetriser_product(1, 3, m, q) == s)
