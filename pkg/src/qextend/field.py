"""Prime-field arithmetic with precomputed character tables.

Field elements are plain Python ints (or numpy integer arrays) reduced
modulo ``q``. All tables are built once in :func:`make_field` and frozen.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import EvenCharacteristic, FieldTooLarge, NotPrime, ZeroInverse

MAX_Q = 9973
# Field sizes beyond MAX_Q are refused: scalar sums are O(q) per call and
# the sweeps call them O(q^2) times.


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class PrimeField:
    """The field Z/qZ for an odd prime q.

    ``inv_table[0]`` holds the sentinel 0; every other entry is the
    multiplicative inverse. ``char_table[t] = exp(2*pi*i*t/q)`` is the
    canonical additive character and ``legendre_table`` the quadratic
    multiplicative character extended by zero.
    """

    q: int
    inv_table: np.ndarray
    legendre_table: np.ndarray
    char_table: np.ndarray

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __reduce__(self):
        return make_field, (self.q,)

    @property
    def nonresidue(self) -> int:
        """Smallest quadratic non-residue."""
        return int(np.flatnonzero(self.legendre_table == -1)[0])

    def chi(self, t):
        return self.char_table[np.mod(t, self.q)]

    def psi(self, t):
        return self.legendre_table[np.mod(t, self.q)]


@lru_cache(maxsize=None)
def make_field(q: int) -> PrimeField:
    q = int(q)
    if q == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if q < 3 or not is_prime(q):
        raise NotPrime(f"{q} is not an odd prime")
    if q > MAX_Q:
        raise FieldTooLarge(f"q={q} exceeds the supported maximum {MAX_Q}")

    inv_table = np.zeros(q, dtype=np.int64)
    for t in range(1, q):
        inv_table[t] = pow(t, -1, q)

    legendre = np.full(q, -1, dtype=np.int64)
    legendre[0] = 0
    squares = (np.arange(1, q, dtype=np.int64) ** 2) % q
    legendre[squares] = 1

    char_table = np.exp(2j * np.pi * np.arange(q) / q)

    return PrimeField(
        q=q,
        inv_table=_frozen(inv_table),
        legendre_table=_frozen(legendre),
        char_table=_frozen(char_table),
    )


def chi(field: PrimeField, t: int) -> complex:
    """Canonical additive character exp(2*pi*i*t/q)."""
    return complex(field.char_table[t % field.q])


def psi(field: PrimeField, t: int) -> int:
    """Legendre symbol of t, with psi(0) = 0."""
    return int(field.legendre_table[t % field.q])


def inv(field: PrimeField, t: int) -> int:
    t %= field.q
    if t == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    return int(field.inv_table[t])


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    """Smallest generator of the multiplicative group of F_q."""
    n = q - 1
    factors = [p for p in range(2, n + 1) if n % p == 0 and is_prime(p)]
    for g in range(2, q):
        if all(pow(g, n // p, q) != 1 for p in factors):
            return g
    raise NotPrime(f"no generator exists mod {q}")


@lru_cache(maxsize=None)
def discrete_log_table(q: int) -> np.ndarray:
    """``log[t]`` with ``g**log[t] == t`` for the smallest generator g; log[0] = -1."""
    g = primitive_root(q)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for e in range(q - 1):
        log[x] = e
        x = x * g % q
    return _frozen(log)
