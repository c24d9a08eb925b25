"""Exact exponent arithmetic for extension estimates.

Exponents are :class:`fractions.Fraction` or ``math.inf``. Nothing in this
module touches floating point except the interpolated constants.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BadExponent, BadTheta, DegenerateDenominator

INF = math.inf
Exponent = Union[Fraction, float]


def as_exponent(p) -> Exponent:
    """Coerce ``p`` (int, Fraction, str like '4/3' or 'inf') to an exponent >= 1."""
    if isinstance(p, str):
        s = p.strip().lower()
        p = INF if s in ("inf", "infinity", "oo") else Fraction(s)
    elif isinstance(p, float):
        p = INF if math.isinf(p) else Fraction(p).limit_denominator(10**6)
    elif not isinstance(p, Fraction):
        p = Fraction(p)
    if p != INF and p < 1:
        raise BadExponent(f"exponent {p} < 1")
    return p


def recip(p: Exponent) -> Fraction:
    return Fraction(0) if p == INF else 1 / Fraction(p)


def from_recip(s: Fraction) -> Exponent:
    return INF if s == 0 else 1 / Fraction(s)


def fmt(x) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExponentPair:
    p: Exponent
    r: Exponent

    def __post_init__(self):
        object.__setattr__(self, "p", as_exponent(self.p))
        object.__setattr__(self, "r", as_exponent(self.r))

    @property
    def point(self) -> tuple[Fraction, Fraction]:
        """(1/p, 1/r), the coordinates used in exponent diagrams."""
        return recip(self.p), recip(self.r)

    def __str__(self):
        return f"({fmt(self.p)}, {fmt(self.r)})"


def stein_tomas_exponent(d: int) -> Fraction:
    if d < 2:
        raise ValueError("d must be >= 2")
    return Fraction(2 * d + 2, d - 1)


@dataclass(frozen=True)
class BootstrapResult:
    r_out: Exponent
    q_exponent: Fraction

    @property
    def bounded(self) -> bool:
        return self.q_exponent <= 0


def bootstrap_exponent(d: int, d_tilde, theta) -> BootstrapResult:
    """Exponent bookkeeping of the kernel-decay bootstrap started from L^2 -> L^2.

    With R*(2->2) ~ q^(1/2) and kernel decay q^(-d_tilde/2), the bound on
    R*(2 -> 2/theta) is 1 + q^(theta/2 - d_tilde (1 - theta) / 4).
    """
    theta, d_tilde = Fraction(theta), Fraction(d_tilde)
    if not 0 < theta < 1:
        raise BadTheta(f"theta={theta} not in (0, 1)")
    if not 0 < d_tilde < d:
        raise ValueError(f"d_tilde={d_tilde} not in (0, {d})")
    return BootstrapResult(2 / theta, theta / 2 - d_tilde * (1 - theta) / 4)


def interpolate_exponents(e1, e2, theta):
    """Riesz-Thorin exponent arithmetic.

    ``e1`` and ``e2`` are ``(ExponentPair, constant)``; returns the pair with
    1/p = theta/p1 + (1-theta)/p2 (likewise r) and constant c1^theta c2^(1-theta).
    """
    theta = Fraction(theta)
    if not 0 <= theta <= 1:
        raise BadTheta(f"theta={theta} not in [0, 1]")
    (pr1, c1), (pr2, c2) = e1, e2
    s1, t1 = pr1.point
    s2, t2 = pr2.point
    pair = ExponentPair(
        from_recip(theta * s1 + (1 - theta) * s2),
        from_recip(theta * t1 + (1 - theta) * t2),
    )
    c = float(c1) ** float(theta) * float(c2) ** float(1 - theta)
    return pair, c


# Size-restricted L^4 estimates for characteristic functions E of a subset
# of the surface: ||(E dsigma)^||_4 <~ q^e ||E||_{p0}, with e depending on the
# size range of #E.

def small_set_exponent(d: int, p0, branch: str) -> Fraction:
    """q-power in the restricted L^{p0} -> L^4 estimate.

    ``branch``: 'first' (#E <~ q^((d-1)/2)), 'second' (q^((d-1)/2) <~ #E <~ q^((d+1)/2))
    or 'third' (#E <~ q^((d+1)/2)); 'second' and 'third' share the exponent.
    """
    p0 = Fraction(p0)
    if branch == "first":
        return Fraction(-3 * d + 5, 8) + Fraction(d - 1) / (2 * p0)
    if branch in ("second", "third"):
        return Fraction(-3 * d + 9, 8) + Fraction(d - 3) / (2 * p0)
    raise ValueError(f"unknown branch {branch!r}")


_RESTRICTED_COEFFS = {
    # branch: (numerator, p-denominator, r-denominator), each as (p0 coeff, const) in d
    "small": (
        lambda d: (6 * d - 2, -8 * d + 8),
        lambda d: (3 * d - 5, -4 * d + 12),
        lambda d: (3 * d - 3, -4 * d + 4),
    ),
    "large": (
        lambda d: (6 * d - 10, -8 * d + 24),
        lambda d: (3 * d - 9, -4 * d + 20),
        lambda d: (3 * d - 7, -4 * d + 12),
    ),
}


def incidence3_exponents(d: int, p0, branch: str) -> ExponentPair:
    """Thresholds (p, r) of the restricted extension estimate for subsets E of S_j.

    ``branch='small'`` covers 1 <~ #E <~ q^((d-1)/2), ``'large'`` covers
    1 <~ #E <~ q^((d+1)/2). Raises DegenerateDenominator when a denominator is
    zero or negative, instead of guessing a limit.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    p0 = Fraction(p0)
    if p0 < 2:
        raise BadExponent("p0 must be >= 2")
    try:
        num_f, pden_f, rden_f = _RESTRICTED_COEFFS[branch]
    except KeyError:
        raise ValueError(f"unknown branch {branch!r}") from None

    def lin(coef):
        a, b = coef(d)
        return a * p0 + b

    num, pden, rden = lin(num_f), lin(pden_f), lin(rden_f)
    if pden <= 0 or rden <= 0 or num <= 0:
        raise DegenerateDenominator(
            f"d={d}, p0={fmt(p0)}, branch={branch}: numerator {fmt(num)}, "
            f"denominators {fmt(pden)}, {fmt(rden)}"
        )
    return ExponentPair(num / pden, num / rden)


def incidence3_by_interpolation(d: int, p0, branch: str) -> ExponentPair:
    """Same thresholds, derived by interpolation instead of the closed formulas.

    Interpolates the exact L^2 identity (constant q^(1/2)) with the
    restricted L^{p0} -> L^4 estimate (constant q^e), choosing theta so the
    q-powers cancel: theta/2 + (1 - theta) e = 0.
    """
    p0 = Fraction(p0)
    e = small_set_exponent(d, p0, "first" if branch == "small" else "third")
    if e == Fraction(1, 2):
        raise DegenerateDenominator("q-exponents cannot be balanced")
    theta = -e / (Fraction(1, 2) - e)
    # theta < 0 happens for d = 2; the closed formulas are then the affine
    # continuation of the same line, so the arithmetic is done unrestricted.
    s = theta / 2 + (1 - theta) / p0
    t = theta / 2 + (1 - theta) / 4
    return ExponentPair(from_recip(s), from_recip(t))


# --- exponent regions, as (1/p, 1/r) polygons -----------------------------

def _below(label: str, corner: tuple[Fraction, Fraction]) -> tuple[str, list]:
    s, t = corner
    verts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (s, t), (Fraction(0), t)]
    return label, verts


def exponent_regions(d: int, p0_list=()) -> list[tuple[str, list[tuple[Fraction, Fraction]]]]:
    """Polygons of (1/p, 1/r) where boundedness is established.

    Each known endpoint (p, r) is combined with the trivial (1, inf) estimate
    and monotonicity in p and r, which gives the quadrilateral
    (0,0), (1,0), (1/p,1/r), (0,1/r).
    """
    regions = [
        _below("tomas_stein", ExponentPair(2, stein_tomas_exponent(d)).point),
        _below("l2_to_l4", ExponentPair(2, 4).point),
        _below("big_sets", ExponentPair(Fraction(4, 3), 4).point),
    ]
    if d == 2:
        regions.append(_below("necessary_d2", (Fraction(1, 2), Fraction(1, 4))))
    for p0 in p0_list:
        for branch in ("small", "large"):
            try:
                pair = incidence3_exponents(d, p0, branch)
            except DegenerateDenominator:
                continue
            regions.append(_below(f"restricted_{branch}_p0={fmt(p0)}", pair.point))
    return regions


def necessary_boundary_d2() -> list[tuple[Fraction, Fraction]]:
    """Boundary polyline of r >= 4, r >= 2p/(p-1) in (1/p, 1/r) coordinates."""
    return [(Fraction(0), Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 4)), (Fraction(1), Fraction(0))]


def format_region(label: str, verts) -> str:
    return label + " " + " ".join(f"{fmt(s)},{fmt(t)}" for s, t in verts)
