"""Exponent bookkeeping in exact rational arithmetic.

Prints the (1/p, 1/r) polygons where extension bounds are known, in the
same plain-text format the CLI writes, plus the kernel-decay bootstrap that
lands exactly on the L^2 threshold (2d+2)/(d-1).
"""
from fractions import Fraction

from qextend.exponents import (
    bootstrap_exponent,
    exponent_regions,
    fmt,
    format_region,
    incidence3_exponents,
)

for d in range(2, 7):
    res = bootstrap_exponent(d, d - 1, Fraction(d - 1, d + 1))
    print(f"d={d}: bootstrap gives r = {fmt(res.r_out)} with q-exponent {fmt(res.q_exponent)}")

print()
for d in (3, 4):
    for p0 in (2, 3, 4):
        for branch in ("small", "large"):
            print(f"d={d} p0={p0} {branch:>5}: (p, r) = {incidence3_exponents(d, p0, branch)}")

print()
for label, verts in exponent_regions(3, [Fraction(2), Fraction(4)]):
    print(format_region(label, verts))
