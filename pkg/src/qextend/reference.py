"""Slow, obviously-correct oracles.

Nothing here reuses the character tables, the axis-factored transform or the
hashing counters of the fast paths: exponentials come from ``cmath``/``np.exp``
on explicitly formed dot products, and counts come from literal loops.
"""
from __future__ import annotations

import cmath
import itertools
import math

import numpy as np

from .errors import BudgetExceeded, SetTooLarge
from .fourier import GridFunction
from .incidence import SubsetE
from .quadform import Surface

NAIVE_BUDGET = 10**10
NAIVE_ENERGY_MAX = 32


def _e(t: int, q: int) -> complex:
    return cmath.exp(2j * math.pi * (t % q) / q)


def naive_fourier(f: GridFunction) -> GridFunction:
    """q^-d sum_x exp(-2 pi i x.m / q) f(x), one full dot-product row per m."""
    q, d = f.q, f.d
    n = q**d
    if n * n > NAIVE_BUDGET:
        raise BudgetExceeded(f"q^(2d) = {n * n} exceeds {NAIVE_BUDGET}")
    xs = np.array(list(itertools.product(range(q), repeat=d)), dtype=np.int64).reshape(n, d)
    out = np.empty(n, dtype=complex)
    for k, m in enumerate(xs):
        dots = (xs @ m) % q
        out[k] = np.sum(np.exp(-2j * np.pi * dots / q) * f.values) / n
    return GridFunction(f.field, d, out)


def naive_energy(E: SubsetE) -> int:
    """Literal quadruple loop over E^4."""
    if E.size > NAIVE_ENERGY_MAX:
        raise SetTooLarge(f"#E = {E.size} > {NAIVE_ENERGY_MAX}")
    q = E.surface.q
    pts = [tuple(int(c) for c in p) for p in E.points]
    count = 0
    for x, y, z, s in itertools.product(pts, repeat=4):
        if all((a + c - b - e) % q == 0 for a, b, c, e in zip(x, y, z, s)):
            count += 1
    return count


def naive_surface_ft(surface: Surface, m) -> complex:
    """q^-d sum_{x in S} exp(-2 pi i x.m / q) at a single frequency."""
    q, d = surface.q, surface.d
    total = 0j
    for x in surface.points:
        total += _e(-sum(int(a) * int(b) for a, b in zip(x, m)), q)
    return total / q**d


def naive_gauss(q: int, a: int, k: int = 1) -> complex:
    total = 0j
    for t in range(1, q):
        leg = 1 if pow(t, (q - 1) // 2, q) == 1 else -1
        total += _e(a * t, q) * leg**k
    return total


def naive_kloosterman(q: int, a: int, b: int, twisted: bool = False) -> complex:
    """sum_{t != 0} e((a t + b t^-1)/q), times the Legendre symbol of t if ``twisted``."""
    total = 0j
    for t in range(1, q):
        term = _e(a * t + b * pow(t, -1, q), q)
        if twisted:
            term *= 1 if pow(t, (q - 1) // 2, q) == 1 else -1
        total += term
    return total


def naive_surface_points(q: int, matrix, j: int) -> list[tuple[int, ...]]:
    """Brute-force level set of x^T A x = j."""
    a = [[int(v) for v in row] for row in matrix]
    d = len(a)
    return [
        x for x in itertools.product(range(q), repeat=d)
        if sum(a[i][k] * x[i] * x[k] for i in range(d) for k in range(d)) % q == j % q
    ]
