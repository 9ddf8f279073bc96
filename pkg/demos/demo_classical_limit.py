"""The q = 1 degeneration: fused permutations and the additive Yang solution.

At q = 1 the partial braidings become block-exchange permutation operators
and the spectral parameter turns additive; the solution reduces to the
rational (Yang-type) R-matrix with simple factorial coefficients.
"""

from fractions import Fraction as F

from fusedhecke import (
    classical_baxter_R,
    classical_coefficients,
    classical_fused_R_matrix,
    format_rational,
    generator,
    unit,
    verify_classical_ybe,
)

mu, nu = F(7, 2), F(9, 4)

print("k = 1 recovers the Yang solution sigma + 1/mu:")
got = classical_baxter_R(1, 2, 1, mu)
want = generator(1, 2, F(1)) + unit(2, F(1)).scale(1 / mu)
print("  ", got == want)

print("\nclassical coefficients for k = 2, mu = 7/2:")
for p, c in enumerate(classical_coefficients(2, mu)):
    print(f"   c_{p} = {format_rational(c)}")

print("\nadditive braided Yang-Baxter equation in the fused algebra:")
for k in (1, 2):
    print(f"   k = {k}:", bool(verify_classical_ybe(k, 3, mu, nu)))

print("\nthe 9 x 9 classical R-matrix for k = 2, N = 2 at mu = 7/2:")
for row in classical_fused_R_matrix(2, 2, mu):
    print("   " + "  ".join(f"{format_rational(x):>7}" for x in row))
