"""Gauss, Salie and Kloosterman sums over a prime field, with their square-root ceilings.

Each evaluator is a direct O(q) sum over the multiplicative group; these
values are themselves used as oracles elsewhere, so no shortcuts are taken.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import ZeroCoefficient
from .field import PrimeField, discrete_log_table
from .report import BoundReport

WEIL_CONSTANT = 2.0


@dataclass(frozen=True)
class SumValue:
    value: complex
    bound: float

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def ratio(self) -> float:
        if math.isinf(self.bound):
            return 0.0
        return self.magnitude / self.bound


def _units(field: PrimeField) -> np.ndarray:
    return np.arange(1, field.q, dtype=np.int64)


def gauss_sum(field: PrimeField, a: int, k: int = 1) -> SumValue:
    """sum_{t != 0} chi(a t) psi(t)^k.

    For odd k the twist is the quadratic character and |G| = sqrt(q) exactly;
    for even k the twist is trivial and the sum is -1.
    """
    q = field.q
    if a % q == 0:
        raise ZeroCoefficient("Gauss sum needs a != 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    t = _units(field)
    twist = field.legendre_table[t] ** k
    value = complex(np.sum(field.char_table[(a * t) % q] * twist))
    bound = math.sqrt(q) if k % 2 else 1.0
    return SumValue(value, bound)


def quadratic_gauss_constant(field: PrimeField) -> complex:
    """G(chi, psi) = sum_{s != 0} psi(s) chi(s)."""
    return gauss_sum(field, 1, 1).value


def order_h_character(field: PrimeField, h: int) -> np.ndarray:
    """Table of a multiplicative character of exact order h (zero at 0).

    Built from the smallest primitive root g: g**e -> exp(2 pi i e / h).
    Requires h | q - 1.
    """
    q = field.q
    if (q - 1) % h:
        raise ValueError(f"h={h} does not divide q-1={q - 1}")
    log = discrete_log_table(q)
    table = np.zeros(q, dtype=complex)
    table[1:] = np.exp(2j * np.pi * (log[1:] % h) / h)
    return table


def power_sum_identity_check(field: PrimeField, t: int, n: int) -> BoundReport:
    """Compare sum_s chi(t s^n) with its Gauss-sum expansion over characters of order h = gcd(n, q-1)."""
    q = field.q
    if t % q == 0:
        raise ZeroCoefficient("power-sum identity needs t != 0")
    if n < 2:
        raise ValueError("n must be >= 2")
    t %= q
    s = np.arange(q, dtype=np.int64)
    powers = np.array([pow(int(x), n, q) for x in s], dtype=np.int64)
    lhs = complex(np.sum(field.char_table[(t * powers) % q]))

    h = gcd(n, q - 1)
    rhs = 0j
    if h > 1:
        psi_h = order_h_character(field, h)
        units = _units(field)
        for k in range(1, h):
            twist = psi_h[units] ** k
            g_k = np.sum(twist * field.char_table[units])
            rhs += np.conj(psi_h[t] ** k) * g_k
    gap = abs(lhs - rhs)
    return BoundReport(
        "power_sum_identity", gap, 1e-9 * q, passed=bool(gap <= 1e-9 * q),
        witness=f"t={t},n={n},h={h}", q=q,
        extra={"lhs": lhs, "rhs": complex(rhs), "h": h},
    )


def salie_sum(field: PrimeField, a: int, b: int) -> SumValue:
    """Twisted Kloosterman sum sum_{t != 0} psi(t) chi(a t + b / t)."""
    q = field.q
    t = _units(field)
    phase = (a * t + b * field.inv_table[t]) % q
    value = complex(np.sum(field.legendre_table[t] * field.char_table[phase]))
    return SumValue(value, WEIL_CONSTANT * math.sqrt(q))


def kloosterman_sum(field: PrimeField, a: int, b: int) -> SumValue:
    """sum_{t != 0} chi(a t + b / t); the bound is +inf when a = b = 0."""
    q = field.q
    t = _units(field)
    phase = (a * t + b * field.inv_table[t]) % q
    value = complex(np.sum(field.char_table[phase]))
    if a % q == 0 and b % q == 0:
        return SumValue(value, math.inf)
    return SumValue(value, WEIL_CONSTANT * math.sqrt(q))
