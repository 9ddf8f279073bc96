"""A quick tour of the exact q-combinatorics layer.

Everything is a `fractions.Fraction`, so the printed values are exact; in
particular the classical point q = 1 recovers the ordinary integers.
"""

from fractions import Fraction as F

from fusedhecke import (
    brace_int,
    format_rational,
    q_binomial,
    q_factorial,
    q_int,
    q_pochhammer,
)


def show(values):
    print("  ", "  ".join(format_rational(v) for v in values))


q = F(3, 2)

print(f"q = {q}")
print("q-integers [L]_q for L = 0..6:")
show(q_int(L, q) for L in range(7))

print("q-factorials [L]_q! for L = 0..4:")
show(q_factorial(L, q) for L in range(5))

print("row L = 4 of the q-Pascal triangle:")
show(q_binomial(4, p, q) for p in range(5))

print("the same row at q = 1 (ordinary binomials):")
show(q_binomial(4, p, F(1)) for p in range(5))

print("q-Pochhammer (a; q)_p at a = 1/2, q = 1/3:")
show(q_pochhammer(F(1, 2), F(1, 3), p) for p in range(4))

print("geometric-style counts 1 + q^2 + ... + q^(2(L-1)):")
show(brace_int(L, q) for L in range(6))
