import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qextend import (
    GridFunction,
    SurfaceFunction,
    extension_transform,
    fourier_forward,
    fourier_inverse,
    make_field,
    measure_convolution,
    norm_phase,
    norm_space,
    norm_surface,
)
from qextend.errors import BadExponent, DimensionMismatch, SurfaceMismatch
from qextend.fourier import dump_grid, load_grid
from qextend.quadform import enumerate_surface, parse_form_spec
from qextend.reference import naive_fourier


def random_grid(q, d, seed):
    rng = np.random.default_rng(seed)
    return GridFunction(make_field(q), d, rng.normal(size=q**d) + 1j * rng.normal(size=q**d))


@pytest.mark.parametrize("q, d", [(3, 1), (5, 2), (7, 2), (3, 3)])
def test_forward_of_constant_and_point_mass(q, d):
    f = make_field(q)
    hat = fourier_forward(GridFunction.constant(f, d))
    expect = np.zeros(q**d)
    expect[0] = 1
    assert np.abs(hat.values - expect).max() < 1e-9
    delta = GridFunction.zeros(f, d).values.copy()
    delta[0] = 1
    assert np.abs(fourier_forward(GridFunction(f, d, delta)).values - q ** (-d)).max() < 1e-12
    assert np.abs(fourier_inverse(GridFunction(f, d, expect)).values - 1).max() < 1e-12


@pytest.mark.parametrize("q, d", [(5, 2), (3, 3), (7, 2), (5, 3), (3, 4), (5, 1)])
def test_forward_matches_oracle(q, d):
    g = random_grid(q, d, q * 10 + d)
    assert np.abs(fourier_forward(g).values - naive_fourier(g).values).max() <= 1e-9


def test_single_frequency_layout():
    """A plane wave chi(x.m0) transforms to the indicator of m0, fixing the index convention."""
    q, d = 5, 3
    f = make_field(q)
    m0 = np.array([1, 3, 2])
    xs = np.indices((q,) * d).reshape(d, -1).T
    wave = GridFunction(f, d, f.char_table[(xs @ m0) % q])
    hat = fourier_forward(wave)
    assert abs(hat[m0] - 1) < 1e-12
    assert np.abs(hat.values).sum() == pytest.approx(1, abs=1e-9)


@given(st.sampled_from([(3, 1), (5, 1), (3, 2), (7, 2), (3, 3), (5, 3)]), st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_inversion_and_plancherel(qd, seed):
    q, d = qd
    g = random_grid(q, d, seed)
    hat = fourier_forward(g)
    back = fourier_inverse(hat)
    assert np.abs(back.values - g.values).max() <= 1e-10 * max(1.0, np.abs(g.values).max())
    assert norm_phase(hat, 2) == pytest.approx(norm_space(g, 2), rel=1e-9)


def test_norm_examples():
    f = make_field(5)
    c = GridFunction.constant(f, 2, 3 - 4j)
    for p in (1, 2, 4, "4/3", "inf"):
        assert norm_space(c, p) == pytest.approx(5)
    delta = np.zeros(25)
    delta[7] = 1
    d = GridFunction(f, 2, delta)
    assert norm_space(d, 2) == pytest.approx(5 ** (-1))
    for r in (1, 2, 3, "inf"):
        assert norm_phase(d, r) == pytest.approx(1)
    assert norm_phase(GridFunction.constant(f, 2), 2) == pytest.approx(5.0)
    g = random_grid(5, 2, 1)
    assert norm_phase(g, 4) == pytest.approx(sum(abs(v) ** 4 for v in g.values) ** 0.25, rel=1e-12)
    with pytest.raises(BadExponent):
        norm_space(g, 0.5)
    with pytest.raises(DimensionMismatch):
        GridFunction(f, 2, np.zeros(24))


def test_surface_norms(circle3):
    ones = SurfaceFunction(circle3, np.ones(4))
    for p in (1, 2, "4/3", 7, "inf"):
        assert norm_surface(ones, p) == pytest.approx(1)
    one_point = SurfaceFunction(circle3, [1, 0, 0, 0])
    assert norm_surface(one_point, "4/3") == pytest.approx(0.3535534, abs=1e-7)
    s = enumerate_surface(parse_form_spec("random:1", 7, 3)[0], 2)
    e = np.zeros(s.cardinality)
    e[:10] = 1
    for p in (1, 2, 4):
        assert norm_surface(SurfaceFunction(s, e), p) == pytest.approx((10 / s.cardinality) ** (1 / p))


def test_convolution_examples(circle3):
    ones = SurfaceFunction(circle3, np.ones(4))
    conv = measure_convolution(ones, ones)
    assert conv.values.sum() / 9 == pytest.approx(1)
    assert conv[(0, 0)] == pytest.approx(2.25)
    other = enumerate_surface(circle3.form, 2)
    with pytest.raises(SurfaceMismatch):
        measure_convolution(ones, SurfaceFunction(other, np.ones(other.cardinality)))


@pytest.mark.parametrize("q, d", [(5, 2), (7, 3), (3, 3)])
def test_convolution_transform_is_product(q, d):
    """The transform of f dsigma * g dsigma is the product of the two extensions."""
    s = enumerate_surface(parse_form_spec("random:1", q, d, seed=3)[0], 1)
    rng = np.random.default_rng(4)
    f = SurfaceFunction(s, rng.normal(size=s.cardinality) + 1j * rng.normal(size=s.cardinality))
    g = SurfaceFunction(s, rng.normal(size=s.cardinality))
    lhs = fourier_forward(measure_convolution(f, g)).values
    rhs = extension_transform(f).values * extension_transform(g).values
    assert np.abs(lhs - rhs).max() < 1e-12


def test_grid_dump_round_trip(tmp_path):
    g = random_grid(5, 2, 9)
    path = tmp_path / "g.txt"
    dump_grid(g, path)
    h = load_grid(path)
    assert h.q == 5 and h.d == 2
    assert np.array_equal(h.values, g.values)
