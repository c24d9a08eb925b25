"""Quadratic forms over F_q, congruent diagonalization and level-set enumeration."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import (
    ConfigError,
    DegenerateForm,
    DimensionMismatch,
    GridTooLarge,
    ZeroLevel,
)
from .field import PrimeField, make_field

GRID_LIMIT = 10**8


def check_grid(q: int, d: int, limit: int = GRID_LIMIT) -> None:
    if q**d > limit:
        raise GridTooLarge(f"grid of size {q}^{d} exceeds {limit}")


def _frozen(arr) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """Q(x) = sum_ij a_ij x_i x_j with a symmetric coefficient matrix mod q."""

    field: PrimeField
    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        a = np.asarray(self.matrix, dtype=np.int64) % self.field.q
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"coefficient matrix must be square, got {a.shape}")
        if a.shape[0] < 1:
            raise DimensionMismatch("empty form")
        if not np.array_equal(a, a.T):
            raise ValueError("coefficient matrix must be symmetric")
        object.__setattr__(self, "matrix", _frozen(a))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticForm)
            and other.q == self.q
            and np.array_equal(other.matrix, self.matrix)
        )

    def __hash__(self):
        return hash((self.q, self.matrix.tobytes()))

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"QuadraticForm(q={self.q}, d={self.d}{tag})"

    @classmethod
    def diagonal(cls, field: PrimeField, coeffs, label: str | None = None) -> "QuadraticForm":
        coeffs = [int(c) % field.q for c in coeffs]
        if label is None:
            label = "diag:" + ",".join(map(str, coeffs))
        return cls(field, np.diag(coeffs), label)

    @cached_property
    def is_nondegenerate(self) -> bool:
        return det_mod(self.matrix, self.q) != 0

    @cached_property
    def diagonal_form(self) -> "DiagonalForm":
        return diagonalize(self)


def evaluate(form: QuadraticForm, x) -> int:
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (form.d,):
        raise DimensionMismatch(f"point has shape {x.shape}, form has dimension {form.d}")
    x = x % form.q
    return int(x @ form.matrix @ x % form.q)


def det_mod(a, q: int) -> int:
    """Determinant of an integer matrix over F_q by Gaussian elimination."""
    m = [[int(v) % q for v in row] for row in np.asarray(a)]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % q
        inv_p = pow(m[col][col], -1, q)
        for r in range(col + 1, n):
            f = m[r][col] * inv_p % q
            if f:
                m[r] = [(x - f * y) % q for x, y in zip(m[r], m[col])]
    return det % q


def is_nondegenerate(form: QuadraticForm) -> bool:
    return form.is_nondegenerate


@dataclass(frozen=True)
class DiagonalForm:
    """``basis.T @ A @ basis == diag(coeffs)`` over F_q, ``basis`` invertible."""

    coeffs: np.ndarray
    basis: np.ndarray


def diagonalize(form: QuadraticForm) -> DiagonalForm:
    """Symmetric congruence elimination, smallest eligible pivot first.

    When every diagonal entry of the active block vanishes but an off-diagonal
    a_ij does not, x_i -> x_i + x_j makes the (i, i) entry 2 a_ij, which is
    nonzero because q is odd.
    """
    q, n = form.q, form.d
    a = [[int(v) for v in row] for row in form.matrix]
    p = [[int(r == c) for c in range(n)] for r in range(n)]

    def add_col(dst, src, f):
        # congruence by the elementary matrix adding f * (column src) to column dst
        for r in range(n):
            a[r][dst] = (a[r][dst] + f * a[r][src]) % q
        for c in range(n):
            a[dst][c] = (a[dst][c] + f * a[src][c]) % q
        for r in range(n):
            p[r][dst] = (p[r][dst] + f * p[r][src]) % q

    def swap(i, k):
        a[i], a[k] = a[k], a[i]
        for row in a:
            row[i], row[k] = row[k], row[i]
        for row in p:
            row[i], row[k] = row[k], row[i]

    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][i]), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]),
                None,
            )
            if pair is None:
                break
            i, j = pair
            add_col(i, j, 1)
            pivot = i
        if pivot != k:
            swap(pivot, k)
        inv_p = pow(a[k][k], -1, q)
        for r in range(k + 1, n):
            if a[r][k]:
                add_col(r, k, (-a[r][k] * inv_p) % q)

    coeffs = [a[i][i] for i in range(n)]
    return DiagonalForm(_frozen(coeffs), _frozen(p))


def grid_values(form: QuadraticForm) -> np.ndarray:
    """Q evaluated at every point of F_q^d, flattened in row-major order.

    Computed one leading-coordinate slab at a time: within a slab the first
    coordinate is fixed, so Q splits into a constant, a linear term in the
    remaining coordinates, and the quadratic form of the trailing block.
    """
    q, d = form.q, form.d
    check_grid(q, d)
    a = form.matrix
    if d == 1:
        x = np.arange(q, dtype=np.int64)
        return a[0, 0] * x * x % q

    rest = np.indices((q,) * (d - 1), dtype=np.int64).reshape(d - 1, -1)
    b = a[1:, 1:]
    tail = np.einsum("ik,ik->k", rest, (b @ rest) % q) % q
    cross = (2 * a[0, 1:] @ rest) % q
    out = np.empty(q**d, dtype=np.int64)
    step = q ** (d - 1)
    for x0 in range(q):
        out[x0 * step:(x0 + 1) * step] = (a[0, 0] * x0 * x0 + x0 * cross + tail) % q
    return out


@dataclass(frozen=True, eq=False)
class Surface:
    """S_j = {x : Q(x) = j}, points sorted lexicographically."""

    form: QuadraticForm
    j: int
    points: np.ndarray

    @property
    def q(self) -> int:
        return self.form.q

    @property
    def d(self) -> int:
        return self.form.d

    @property
    def field(self) -> PrimeField:
        return self.form.field

    @property
    def cardinality(self) -> int:
        return int(self.points.shape[0])

    def __len__(self) -> int:
        return self.cardinality

    def __repr__(self):
        return f"Surface({self.form!r}, j={self.j}, #S={self.cardinality})"

    @cached_property
    def flat_indices(self) -> np.ndarray:
        return _frozen(flat_index(self.points, self.q))

    @cached_property
    def indicator(self) -> np.ndarray:
        """Boolean membership mask over the row-major grid."""
        mask = np.zeros(self.q**self.d, dtype=bool)
        mask[self.flat_indices] = True
        mask.flags.writeable = False
        return mask


def flat_index(points: np.ndarray, q: int) -> np.ndarray:
    """Row-major index sum_k x_k q^(d-1-k) of each row of ``points``."""
    points = np.asarray(points, dtype=np.int64)
    d = points.shape[-1]
    weights = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (points % q) @ weights


def grid_points(q: int, d: int) -> np.ndarray:
    """All of F_q^d as a (q^d, d) array in row-major order."""
    check_grid(q, d)
    return np.indices((q,) * d, dtype=np.int64).reshape(d, -1).T


def enumerate_surface(form: QuadraticForm, j: int, method: str = "slab") -> Surface:
    """Exhaustively list S_j.

    ``method="slab"`` is the vectorised scan of :func:`grid_values`;
    ``method="scan"`` evaluates Q point by point and is kept as a cross-check.
    """
    q, d = form.q, form.d
    j = int(j) % q
    if j == 0:
        raise ZeroLevel("level j must be nonzero")
    if not form.is_nondegenerate:
        raise DegenerateForm(f"{form!r} is degenerate")
    check_grid(q, d)
    if method == "slab":
        idx = np.flatnonzero(grid_values(form) == j)
        points = np.stack(np.unravel_index(idx, (q,) * d), axis=1).astype(np.int64)
    elif method == "scan":
        points = np.array(
            [x for x in itertools.product(range(q), repeat=d) if evaluate(form, x) == j],
            dtype=np.int64,
        ).reshape(-1, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Surface(form, j, _frozen(points))


# --- form specifications -------------------------------------------------

def random_form(field: PrimeField, d: int, rng: np.random.Generator, label: str = "") -> QuadraticForm:
    """Uniformly random non-degenerate symmetric matrix (rejection sampling)."""
    q = field.q
    while True:
        upper = np.triu(rng.integers(0, q, size=(d, d)))
        a = (upper + np.triu(upper, 1).T) % q
        if det_mod(a, q):
            return QuadraticForm(field, a, label)


def read_matrix(path, q: int | None = None) -> np.ndarray:
    rows = [line.split() for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        a = np.array([[int(v) for v in row] for row in rows], dtype=np.int64)
    except ValueError as exc:
        raise ConfigError(f"{path}: matrix entries must be integers") from exc
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ConfigError(f"{path}: expected a square matrix")
    return a % q if q else a


def write_matrix(path, matrix) -> None:
    lines = [" ".join(str(int(v)) for v in row) for row in np.asarray(matrix)]
    Path(path).write_text("\n".join(lines) + "\n")


def parse_form_spec(spec: str, q: int, d: int, seed: int = 0) -> list[QuadraticForm]:
    """Expand one form specification into concrete forms over F_q^d.

    ``diag:a1,...,ad`` | ``matrix:<path>`` | ``random:<count>``. Random forms
    are seeded from (seed, q, d, index) so each is reproducible on its own.
    """
    field = make_field(q)
    kind, _, arg = spec.strip().partition(":")
    if kind == "diag":
        try:
            coeffs = [int(c) for c in arg.split(",")] if arg else [1] * d
        except ValueError as exc:
            raise ConfigError(f"bad diagonal spec {spec!r}") from exc
        if len(coeffs) != d:
            raise ConfigError(f"{spec!r} has {len(coeffs)} coefficients, need d={d}")
        return [QuadraticForm.diagonal(field, coeffs)]
    if kind == "matrix":
        a = read_matrix(arg, q)
        if a.shape[0] != d:
            raise ConfigError(f"{arg}: matrix is {a.shape[0]}x{a.shape[0]}, need d={d}")
        if not np.array_equal(a, a.T):
            raise ConfigError(f"{arg}: matrix is not symmetric mod {q}")
        return [QuadraticForm(field, a, f"matrix:{arg}")]
    if kind == "random":
        try:
            count = int(arg)
        except ValueError as exc:
            raise ConfigError(f"bad random spec {spec!r}") from exc
        return [
            random_form(field, d, np.random.default_rng([seed, q, d, i]), f"random:{i}")
            for i in range(count)
        ]
    raise ConfigError(f"unknown form spec {spec!r}")


def level_list(q: int, j_list="all") -> list[int]:
    """Expand a level selector: 'all', 'classes' (1 and the least non-residue) or explicit ints."""
    if j_list == "all":
        return list(range(1, q))
    if j_list == "classes":
        return [1, make_field(q).nonresidue]
    return [int(j) for j in j_list]


def iter_surfaces(q_list, d: int, forms=("diag",), j_list="all", seed: int = 0):
    """Yield every surface of a sweep in deterministic (q, form, j) order."""
    for q in q_list:
        for spec in forms:
            for form in parse_form_spec(spec, q, d, seed):
                for j in level_list(q, j_list):
                    yield enumerate_surface(form, j)
