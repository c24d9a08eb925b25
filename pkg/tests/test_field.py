import cmath
import pickle

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qextend import chi, inv, make_field, psi
from qextend.errors import EvenCharacteristic, FieldTooLarge, NotPrime, ZeroInverse
from qextend.field import discrete_log_table, is_prime, primitive_root

from conftest import small_primes

PRIMES = small_primes(200)


def test_inverse_table_q7():
    assert make_field(7).inv_table.tolist() == [0, 1, 4, 5, 2, 3, 6]


@pytest.mark.parametrize("q, exc", [(2, EvenCharacteristic), (9, NotPrime), (1, NotPrime), (15, NotPrime), (10007, FieldTooLarge)])
def test_make_field_rejects(q, exc):
    with pytest.raises(exc):
        make_field(q)


def test_chi_values():
    f = make_field(5)
    assert chi(f, 0) == pytest.approx(1 + 0j)
    assert chi(f, 1) == pytest.approx(complex(0.309017, 0.951057), abs=1e-6)


def test_psi_values():
    f = make_field(5)
    assert psi(f, 4) == 1
    assert psi(f, 2) == -1
    for q in (3, 7, 101):
        assert psi(make_field(q), 0) == 0


def test_inv_values():
    f = make_field(7)
    assert inv(f, 3) == 5
    assert inv(f, 1) == 1
    with pytest.raises(ZeroInverse):
        inv(f, 0)
    with pytest.raises(ZeroDivisionError):
        inv(f, 7)


@given(st.sampled_from(PRIMES), st.integers(min_value=-10**6, max_value=10**6))
def test_chi_conjugate_pair(q, t):
    f = make_field(q)
    assert abs(chi(f, t) * chi(f, q - t) - 1) < 1e-12
    assert abs(chi(f, t) - cmath.exp(2j * cmath.pi * (t % q) / q)) < 1e-12


@given(st.sampled_from(PRIMES), st.integers(min_value=1, max_value=10**6))
def test_inverse_and_legendre_agree_with_pow(q, t):
    f = make_field(q)
    if t % q == 0:
        return
    assert inv(f, t) * t % q == 1
    euler = pow(t, (q - 1) // 2, q)
    assert psi(f, t) == (1 if euler == 1 else -1)


@pytest.mark.parametrize("q", PRIMES)
def test_legendre_is_multiplicative_and_balanced(q):
    f = make_field(q)
    leg = f.legendre_table
    assert leg[0] == 0
    assert leg[1:].sum() == 0
    t = np.arange(1, q)
    assert np.array_equal(leg[(t[:, None] * t[None, :]) % q], leg[t][:, None] * leg[t][None, :])


def test_tables_read_only_and_cached():
    f = make_field(11)
    assert f is make_field(11)
    with pytest.raises(ValueError):
        f.inv_table[1] = 3
    assert pickle.loads(pickle.dumps(f)) == f
    assert psi(f, f.nonresidue) == -1


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("q", [3, 5, 7, 13, 101])
def test_primitive_root_and_logs(q):
    g = primitive_root(q)
    assert sorted(pow(g, k, q) for k in range(q - 1)) == list(range(1, q))
    logs = discrete_log_table(q)
    for t in range(1, q):
        assert pow(g, int(logs[t]), q) == t
