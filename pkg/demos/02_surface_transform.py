"""Level sets of a quadratic form and their Fourier transform.

For a non-degenerate form Q on F_q^d, the set Q(x) = j has about q^(d-1)
points, and its Fourier transform is small away from the origin: about
q^(-(d+1)/2). The transform has an explicit formula in Gauss and twisted
Kloosterman sums. Here we compare that formula with brute-force enumeration.
"""
import numpy as np

from qextend import enumerate_surface, make_field, parse_form_spec, surface_ft_closed_form, surface_ft_direct
from qextend.extension import decay_check

print(f"{'q':>3} {'form':>12} {'j':>3} {'#S':>5} {'q^(d-1)':>8} {'max gap':>10} {'decay':>8}")
for q in (5, 7, 11):
    for form in parse_form_spec("diag", q, 3) + parse_form_spec("random:2", q, 3, seed=1):
        for j in (1, make_field(q).nonresidue):
            s = enumerate_surface(form, j)
            closed = surface_ft_closed_form(s)
            direct = surface_ft_direct(s)
            gap = np.abs(closed.values - direct.values).max()
            decay = decay_check(s, closed).value
            print(f"{q:3d} {form.label:>12} {j:3d} {s.cardinality:5d} {q ** 2:8d} {gap:10.1e} {decay:8.4f}")

print("\ndecay column: max over m != 0 of |S^(m)| q^((d+1)/2); it stays below 2.")
