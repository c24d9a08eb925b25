"""Character sums over a prime field.

A Gauss sum has modulus exactly sqrt(q). Kloosterman and Salie sums carry no
such exact formula, but they stay below 2 sqrt(q). This script prints both
facts for a few primes and lists the largest Kloosterman sums seen.
"""
import math

from qextend import gauss_sum, kloosterman_sum, make_field, salie_sum

for q in (5, 13, 31, 101):
    field = make_field(q)
    mags = [gauss_sum(field, a).magnitude for a in range(1, q)]
    print(f"q={q:4d}  |G_a| in [{min(mags):.12f}, {max(mags):.12f}],  sqrt(q) = {math.sqrt(q):.12f}")

print()
q = 31
field = make_field(q)
rows = []
for a in range(q):
    for b in range(q):
        if a or b:
            rows.append((kloosterman_sum(field, a, b).magnitude, salie_sum(field, a, b).magnitude, a, b))
rows.sort(reverse=True)
print(f"largest Kloosterman sums over F_{q} (Weil ceiling 2 sqrt(q) = {2 * math.sqrt(q):.4f}):")
for k, s, a, b in rows[:5]:
    print(f"  a={a:2d} b={b:2d}   |K| = {k:.4f}   |Salie| = {s:.4f}")
