"""From the algebra to numbers: the 9 x 9 spin-1 R-matrix.

For k = 2, N = 2 the fused algebra acts on W = S_q^2(V), the 3-dimensional
quantum symmetric square: these are the higher-spin representations of
quantum sl(2).  The script prints the two crossing matrices on W tensor W,
assembles R(u), and verifies the matrix Yang-Baxter equation on W^3 (27 x 27
products, exact).
"""

from fractions import Fraction as F

from fusedhecke import (
    format_rational,
    fused_R_matrix,
    sigma_matrix,
    verify_matrix_ybe,
    w_basis,
)

q, u, v = F(2), F(3, 7), F(5, 9)

wb = w_basis(2, 2, q)
print("basis of W = S_q^2(V), N = 2 (symmetriser images, unnormalised):")
for idx, col in zip(wb.indices, wb.columns):
    pretty = " + ".join(f"({format_rational(c)}) e{a}e{b}" for (a, b), c in sorted(col.items()))
    print(f"   w{idx} = {pretty}")


def show(mat, title):
    print(title)
    for row in mat:
        print("   " + "  ".join(f"{format_rational(x):>8}" for x in row))


show(sigma_matrix(2, 1, 2, q), "\npartial crossing on W tensor W:")
show(sigma_matrix(2, 2, 2, q), "\nfull crossing on W tensor W:")
show(fused_R_matrix(2, 2, u, q), f"\nR(u) at u = {u}:")

print("\nmatrix Yang-Baxter equation on W^3:",
      bool(verify_matrix_ybe(2, 2, u, v, q)))
