"""Counting on surfaces: pair sums, shifted incidences, additive energy, and
the L^4 extension estimates for indicator functions of subsets.

All counts are exact integers obtained by hashing; the floating-point
quantities are only the extension norms they are compared with.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import SizeOutOfRegime, SizeTooLarge, ZeroShift
from .exponents import small_set_exponent
from .extension import extend_many
from .fourier import SurfaceFunction, measure_convolution
from .quadform import Surface, flat_index
from .report import BoundReport, ceiling_report, identity_report

INCIDENCE_CONSTANT = 4.0
PAIRSUM_CONSTANT = 2


@dataclass(frozen=True, eq=False)
class SubsetE:
    """A subset of a surface, stored as sorted indices into ``surface.points``."""

    surface: Surface
    members: np.ndarray

    def __post_init__(self):
        m = np.unique(np.asarray(self.members, dtype=np.int64))
        if m.size and (m[0] < 0 or m[-1] >= self.surface.cardinality):
            raise IndexError("subset index out of range")
        m.flags.writeable = False
        object.__setattr__(self, "members", m)

    @property
    def size(self) -> int:
        return int(self.members.size)

    def __len__(self) -> int:
        return self.size

    @property
    def points(self) -> np.ndarray:
        return self.surface.points[self.members]

    @cached_property
    def indicator(self) -> np.ndarray:
        v = np.zeros(self.surface.cardinality)
        v[self.members] = 1.0
        return v

    def as_function(self) -> SurfaceFunction:
        return SurfaceFunction(self.surface, self.indicator)

    @classmethod
    def full(cls, surface: Surface) -> "SubsetE":
        return cls(surface, np.arange(surface.cardinality))


def random_subset(surface: Surface, size: int, seed=0) -> SubsetE:
    """Uniform subset of the given size; ``seed`` may be an int or a tuple of ints."""
    n = surface.cardinality
    if not 1 <= size <= n:
        raise SizeTooLarge(f"size {size} not in [1, {n}]")
    rng = np.random.default_rng([*np.atleast_1d(seed).tolist(), surface.q, surface.d, surface.j, size])
    return SubsetE(surface, rng.choice(n, size=size, replace=False))


def dyadic_sizes(n: int) -> list[int]:
    """1, 2, 4, ... below n, then n itself."""
    sizes, s = [], 1
    while s < n:
        sizes.append(s)
        s *= 2
    sizes.append(n)
    return sizes


def _ctx(surface: Surface, **kw) -> dict:
    return {"q": surface.q, "d": surface.d, "form_id": surface.form.label, "j": surface.j, **kw}


def _pair_indices(a: np.ndarray, b: np.ndarray, q: int, sign: int = 1) -> np.ndarray:
    """Row-major indices of a_i + sign*b_k for every pair, shape (len(a) * len(b),)."""
    s = (a[:, None, :] + sign * b[None, :, :]) % q
    return flat_index(s.reshape(-1, a.shape[1]), q)


# --- pair sums ----------------------------------------------------------------

def pairsum_count(surface: Surface, x) -> int:
    """#{(a, b) in S x S : a + b = x}."""
    x = np.asarray(x, dtype=np.int64)
    partner = flat_index((x[None, :] - surface.points) % surface.q, surface.q)
    return int(np.count_nonzero(surface.indicator[partner]))


def pairsum_profile(surface: Surface) -> np.ndarray:
    """Pair-sum count for every x at once, indexed row-major."""
    q, d = surface.q, surface.d
    pts = surface.points
    out = np.zeros(q**d, dtype=np.int64)
    chunk = max(1, 2**20 // max(len(pts), 1))
    for start in range(0, len(pts), chunk):
        out += np.bincount(_pair_indices(pts[start:start + chunk], pts, q), minlength=q**d)
    return out


def pairsum_check(surface: Surface, x=None, strict: bool = False) -> BoundReport:
    """Pair-sum count against 2 q^(d-2) (exact integers).

    With ``x=None`` the maximum over all x != 0 is checked. x = 0 is
    computed but not asserted (or raises ZeroShift when ``strict``).
    """
    q, d = surface.q, surface.d
    bound = PAIRSUM_CONSTANT * q ** (d - 2)
    if x is None:
        prof = pairsum_profile(surface)
        prof[0] = -1
        k = int(np.argmax(prof))
        count = int(prof[k])
        witness = "x=(" + ",".join(str(int(c)) for c in np.unravel_index(k, (q,) * d)) + ")"
    else:
        x = np.asarray(x, dtype=np.int64) % q
        count = pairsum_count(surface, x)
        witness = "x=(" + ",".join(map(str, x.tolist())) + ")"
        if not x.any():
            if strict:
                raise ZeroShift("pair-sum bound needs x != 0")
            return BoundReport("pairsum", count, bound, None, witness, "ZeroShift", **_ctx(surface))
    return BoundReport("pairsum", count, bound, count <= bound, witness, **_ctx(surface))


def self_convolution_check(surface: Surface, ceiling: float = 8.0) -> BoundReport:
    """max_{x != 0} (dsigma * dsigma)(x), computed by the direct convolution."""
    ones = SurfaceFunction(surface, np.ones(surface.cardinality))
    conv = measure_convolution(ones, ones).values.real.copy()
    conv[0] = -1.0
    k = int(np.argmax(conv))
    witness = "x=(" + ",".join(str(int(c)) for c in np.unravel_index(k, (surface.q,) * surface.d)) + ")"
    return ceiling_report("self_convolution", float(conv[k]), ceiling, witness=witness, **_ctx(surface))


# --- shifted incidences -------------------------------------------------------

def shifted_incidence_count(E: SubsetE, z) -> int:
    """#{(x, y) in E x E : x - y + z in S_j}."""
    s = E.surface
    z = np.asarray(z, dtype=np.int64)
    pts = E.points
    shifted = (pts[:, None, :] - pts[None, :, :] + z) % s.q
    hits = s.indicator[flat_index(shifted.reshape(-1, s.d), s.q)]
    return int(np.count_nonzero(hits))


def shifted_incidence_profile(E: SubsetE) -> np.ndarray:
    """Shifted incidence count for every z (row-major), by circular correlation.

    count(z) = sum_w D(w) 1_S(w + z), where D is the histogram of differences
    x - y. The correlation is done with numpy's FFT on the q^d torus and
    rounded; the rounding residue is checked.
    """
    s = E.surface
    q, d = s.q, s.d
    pts = E.points
    diff_hist = np.bincount(_pair_indices(pts, pts, q, sign=-1), minlength=q**d).astype(float)
    shape = (q,) * d
    spec = np.conj(np.fft.fftn(diff_hist.reshape(shape))) * np.fft.fftn(s.indicator.reshape(shape).astype(float))
    raw = np.fft.ifftn(spec).real.reshape(-1)
    counts = np.rint(raw)
    if np.abs(raw - counts).max() > 1e-6:
        raise ArithmeticError("FFT rounding residue too large for exact counts")
    return counts.astype(np.int64)


def incidence_bound(size: int, q: int, d: int, constant: float = INCIDENCE_CONSTANT) -> float:
    return constant * (size**2 / q + size * q ** ((d - 1) / 2))


def incidence_check(E: SubsetE, constant: float = INCIDENCE_CONSTANT) -> BoundReport:
    """max_z of the shifted incidence count against C((#E)^2/q + #E q^((d-1)/2))."""
    s = E.surface
    prof = shifted_incidence_profile(E)
    k = int(np.argmax(prof))
    witness = "z=(" + ",".join(str(int(c)) for c in np.unravel_index(k, (s.q,) * s.d)) + ")"
    bound = incidence_bound(E.size, s.q, s.d, constant)
    return ceiling_report(
        "shifted_incidence", int(prof[k]), bound, witness=witness,
        family=f"size={E.size}", **_ctx(s),
    )


# --- additive energy ----------------------------------------------------------

@dataclass(frozen=True)
class EnergyReport:
    energy: int
    size: int
    trivial_ceiling: int
    incidence_ceiling: float

    @property
    def bound(self) -> float:
        return min(self.trivial_ceiling, self.incidence_ceiling)

    @property
    def passed(self) -> bool:
        return self.size**2 <= self.energy <= self.bound


def additive_energy(E: SubsetE, constant: float = INCIDENCE_CONSTANT) -> EnergyReport:
    """Lambda(E) = #{(x,y,z,s) in E^4 : x + z = y + s} = sum_s r(s)^2."""
    s = E.surface
    pts = E.points
    _, r = np.unique(_pair_indices(pts, pts, s.q), return_counts=True)
    energy = int(np.sum(r.astype(np.int64) ** 2))
    n = E.size
    ceiling = constant * (n**3 / s.q + n**2 * s.q ** ((s.d - 1) / 2))
    return EnergyReport(energy, n, n**3, ceiling)


def energy_check(E: SubsetE, constant: float = INCIDENCE_CONSTANT) -> BoundReport:
    rep = additive_energy(E, constant)
    return BoundReport(
        "additive_energy", rep.energy, rep.bound, rep.passed,
        family=f"size={E.size}", **_ctx(E.surface),
    )


def _l4_norm(E: SubsetE) -> float:
    ext = extend_many(E.surface, E.indicator)[0]
    return float(np.sum(np.abs(ext) ** 4) ** 0.25)


def energy_l4_identity(E: SubsetE, rtol: float = 1e-8) -> BoundReport:
    """||(E dsigma)^||_4 against (q^(d/4) / #S) Lambda(E)^(1/4).

    The two sides are computed independently (extension transform versus
    hashed energy); they must agree to ``rtol``.
    """
    s = E.surface
    lhs = _l4_norm(E)
    rhs = s.q ** (s.d / 4) / s.cardinality * additive_energy(E).energy ** 0.25
    return identity_report("energy_l4_identity", lhs, rhs, rtol, family=f"size={E.size}", **_ctx(s))


def big_set_l4_check(E: SubsetE, threshold: float = INCIDENCE_CONSTANT, strict: bool = False) -> BoundReport:
    """||(E dsigma)^||_4 / ||E||_{L^{4/3}(dsigma)} for #E >= q^((d+1)/2)."""
    s = E.surface
    q, d, n = s.q, s.d, E.size
    value = _l4_norm(E) / (n / s.cardinality) ** 0.75
    ctx = _ctx(s, family=f"size={n}")
    if n * n < q ** (d + 1):
        if strict:
            raise SizeOutOfRegime(f"#E={n} below q^((d+1)/2)")
        return BoundReport("big_set_l4", value, threshold, None, note="SizeOutOfRegime", **ctx)
    return ceiling_report("big_set_l4", value, threshold, **ctx)


def small_set_branches(size: int, q: int, d: int) -> list[str]:
    """Size-regime branches that apply to a set of this size (exact comparisons)."""
    sq = size * size
    out = []
    if sq <= q ** (d - 1):
        out.append("first")
    if q ** (d - 1) <= sq <= q ** (d + 1):
        out.append("second")
    if sq <= q ** (d + 1):
        out.append("third")
    return out


def small_set_l4_check(E: SubsetE, p0=2, threshold: float = INCIDENCE_CONSTANT) -> list[BoundReport]:
    """||(E dsigma)^||_4 / (q^e ||E||_{p0}) for every size branch that applies to E."""
    s = E.surface
    q, d, n = s.q, s.d, E.size
    p0 = Fraction(p0)
    lhs = _l4_norm(E)
    norm_p0 = (n / s.cardinality) ** (1 / float(p0))
    out = []
    for branch in small_set_branches(n, q, d):
        e = small_set_exponent(d, p0, branch)
        value = lhs / (q ** float(e) * norm_p0)
        out.append(ceiling_report(
            f"small_set_l4_{branch}", value, threshold,
            family=f"size={n},p0={p0}", **_ctx(s),
        ))
    return out


def regime_of(size: int, q: int, d: int) -> str:
    if size * size < q ** (d - 1):
        return "small"
    if size * size < q ** (d + 1):
        return "middle"
    return "big"


__all__ = [
    "SubsetE", "EnergyReport", "random_subset", "dyadic_sizes",
    "pairsum_count", "pairsum_profile", "pairsum_check", "self_convolution_check",
    "shifted_incidence_count", "shifted_incidence_profile", "incidence_bound", "incidence_check",
    "additive_energy", "energy_check", "energy_l4_identity",
    "big_set_l4_check", "small_set_l4_check", "small_set_branches", "regime_of",
]
