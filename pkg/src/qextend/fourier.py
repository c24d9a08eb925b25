"""Fourier analysis on F_q^d with normalised counting measure in space.

    f^(m) = q^-d sum_x chi(-x.m) f(x)          f(x) = sum_m chi(x.m) f^(m)

Space norms average over the q^d points, phase norms sum over them, and
surface norms average over the surface.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, SurfaceMismatch
from .exponents import INF, as_exponent
from .field import PrimeField, make_field
from .quadform import Surface, check_grid


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Complex values on F_q^d in row-major order (x_1 most significant)."""

    field: PrimeField
    d: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).reshape(-1)
        if v.shape[0] != self.q**self.d:
            raise DimensionMismatch(f"expected {self.q ** self.d} values, got {v.shape[0]}")
        object.__setattr__(self, "values", v)

    @property
    def q(self) -> int:
        return self.field.q

    def cube(self) -> np.ndarray:
        return self.values.reshape((self.q,) * self.d)

    def __getitem__(self, x):
        return self.cube()[tuple(int(c) % self.q for c in x)]

    @classmethod
    def zeros(cls, field: PrimeField, d: int) -> "GridFunction":
        return cls(field, d, np.zeros(field.q**d, dtype=complex))

    @classmethod
    def constant(cls, field: PrimeField, d: int, c=1.0) -> "GridFunction":
        return cls(field, d, np.full(field.q**d, c, dtype=complex))


@dataclass(frozen=True, eq=False)
class SurfaceFunction:
    """Complex values on the points of a surface, aligned with ``surface.points``."""

    surface: Surface
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).reshape(-1)
        if v.shape[0] != self.surface.cardinality:
            raise DimensionMismatch(
                f"surface has {self.surface.cardinality} points, got {v.shape[0]} values"
            )
        object.__setattr__(self, "values", v)

    def embed(self) -> np.ndarray:
        """Values on the full grid, zero off the surface."""
        out = np.zeros(self.surface.q**self.surface.d, dtype=complex)
        out[self.surface.flat_indices] = self.values
        return out


def _line_matrix(field: PrimeField, sign: int) -> np.ndarray:
    k = np.arange(field.q, dtype=np.int64)
    return field.char_table[(sign * np.outer(k, k)) % field.q]


def transform_cube(field: PrimeField, cube: np.ndarray, d: int, sign: int) -> np.ndarray:
    """Unnormalised sum_x chi(sign x.m) cube[..., x] over the last d axes.

    One length-q transform per line along each axis: O(d q^(d+1)). Leading
    axes beyond the last d are treated as a batch.
    """
    mat = _line_matrix(field, sign)
    out = np.asarray(cube, dtype=complex)
    nd = out.ndim
    for axis in range(nd - d, nd):
        out = np.moveaxis(np.tensordot(mat, out, axes=([1], [axis])), 0, axis)
    return out


def fourier_forward(f: GridFunction) -> GridFunction:
    check_grid(f.q, f.d)
    out = transform_cube(f.field, f.cube(), f.d, -1) * float(f.q) ** (-f.d)
    return GridFunction(f.field, f.d, out.reshape(-1))


def fourier_inverse(g: GridFunction) -> GridFunction:
    check_grid(g.q, g.d)
    out = transform_cube(g.field, g.cube(), g.d, +1)
    return GridFunction(g.field, g.d, out.reshape(-1))


def _power_mean(mod: np.ndarray, p, weight: float) -> float:
    p = as_exponent(p)
    if p == INF:
        return float(mod.max(initial=0.0))
    pf = float(p)
    return float((weight * np.sum(mod**pf)) ** (1.0 / pf))


def norm_space(f: GridFunction, p) -> float:
    """(q^-d sum_x |f(x)|^p)^(1/p); the max modulus for p = inf."""
    return _power_mean(np.abs(f.values), p, float(f.q) ** (-f.d))


def norm_phase(g: GridFunction, r) -> float:
    """(sum_m |g(m)|^r)^(1/r), counting measure."""
    return _power_mean(np.abs(g.values), r, 1.0)


def norm_surface(f: SurfaceFunction, p) -> float:
    """((1/#S) sum_{x in S} |f(x)|^p)^(1/p)."""
    return _power_mean(np.abs(f.values), p, 1.0 / f.surface.cardinality)


def measure_convolution(f: SurfaceFunction, g: SurfaceFunction) -> GridFunction:
    """(f dsigma * g dsigma)(x) = (#S)^-2 q^d sum_{a + b = x, a, b in S} f(a) g(b).

    Direct double sum over pairs of surface points, chunked over a.
    """
    s = f.surface
    if g.surface is not s:
        raise SurfaceMismatch("convolution needs functions on the same surface")
    q, d, n = s.q, s.d, s.cardinality
    coords = [s.points[:, k] for k in range(d)]
    weights = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    acc = np.zeros(q**d, dtype=complex)
    chunk = max(1, 2**20 // max(n, 1))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        idx = np.zeros((stop - start, n), dtype=np.int64)
        for k in range(d):
            idx += ((coords[k][start:stop, None] + coords[k][None, :]) % q) * weights[k]
        w = f.values[start:stop, None] * g.values[None, :]
        acc += np.bincount(idx.ravel(), weights=w.real.ravel(), minlength=q**d)
        acc += 1j * np.bincount(idx.ravel(), weights=w.imag.ravel(), minlength=q**d)
    return GridFunction(s.field, d, acc * (float(q) ** d / n**2))


# --- text serialisation ---------------------------------------------------

def dump_grid(f: GridFunction, path) -> None:
    """``q d`` header, then one ``re im`` pair per line in row-major order."""
    lines = [f"{f.q} {f.d}"]
    lines += [f"{float(v.real)!r} {float(v.imag)!r}" for v in f.values]
    Path(path).write_text("\n".join(lines) + "\n")


def load_grid(path) -> GridFunction:
    lines = Path(path).read_text().split("\n")
    q, d = (int(t) for t in lines[0].split())
    vals = [complex(float(a), float(b)) for a, b in (ln.split() for ln in lines[1:] if ln.strip())]
    return GridFunction(make_field(q), d, np.array(vals))
