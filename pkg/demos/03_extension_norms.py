"""How large can the extension operator make a function?

The ratio ||(f dsigma)^||_r / ||f||_{L^2(dsigma)} is computed for a battery of
test functions: constants, point masses, random functions, random subsets
and caps. The largest ratio is a certified lower bound for the operator norm.
For r = 2 the ratio is the same for every f, which we also show.
"""
from qextend import ExponentPair, enumerate_surface, parse_form_spec, rstar_lower_bound, rstar_two_two_exact
from qextend.exponents import fmt, stein_tomas_exponent

for d in (2, 3):
    r = stein_tomas_exponent(d)
    print(f"d={d}: L^2 -> L^{fmt(r)}")
    for q in (5, 7, 11, 13, 17):
        s = enumerate_surface(parse_form_spec("diag", q, d)[0], 1)
        best = rstar_lower_bound(s, ExponentPair(2, r), threshold=None)
        exact = rstar_two_two_exact(s, n_functions=20)
        print(f"  q={q:3d}  sup ratio {best.value:.4f} (from {best.witness:>12}),"
              f"  L2->L2 constant {exact.bound:.4f} [spread {abs(exact.value - exact.bound):.1e}]")
