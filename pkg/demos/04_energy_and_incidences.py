"""Additive energy of subsets of a surface.

For E inside the surface, the fourth power of the L^4 norm of (E dsigma)^
counts quadruples x + z = y + s in E. That gives an identity we can test,
plus energy ceilings coming from counting shifted incidences.
"""
from qextend import enumerate_surface, parse_form_spec, random_subset
from qextend.incidence import additive_energy, dyadic_sizes, energy_l4_identity, incidence_check

q, d = 11, 3
s = enumerate_surface(parse_form_spec("random:1", q, d, seed=4)[0], 1)
print(f"surface over F_{q}^{d} with {s.cardinality} points")
print(f"{'#E':>5} {'energy':>10} {'#E^2':>8} {'ceiling':>12} {'L4 gap':>9} {'incidence':>10}")
for size in dyadic_sizes(s.cardinality):
    E = random_subset(s, size, seed=0)
    en = additive_energy(E)
    ident = energy_l4_identity(E)
    inc = incidence_check(E)
    print(f"{size:5d} {en.energy:10d} {size ** 2:8d} {en.bound:12.1f} {abs(ident.value / ident.bound - 1):9.1e}"
          f" {inc.value:5d}/{inc.bound:<8.0f}")
