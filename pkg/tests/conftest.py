import pytest

from qextend import QuadraticForm, enumerate_surface, make_field


@pytest.fixture
def circle3():
    """x^2 + y^2 = 1 over F_3: the four points (0,1), (0,2), (1,0), (2,0)."""
    f = make_field(3)
    return enumerate_surface(QuadraticForm.diagonal(f, [1, 1]), 1)


def small_primes(limit):
    out = []
    for n in range(3, limit + 1, 2):
        if all(n % p for p in range(3, int(n**0.5) + 1, 2)):
            out.append(n)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
