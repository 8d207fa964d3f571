from hypothesis import given
from hypothesis import strategies as st

from quartprimes.gaussian import GaussianInt

ints = st.integers(-10**6, 10**6)
gauss = st.builds(GaussianInt, ints, ints)


@given(gauss, gauss)
def test_norm_multiplicative(z, w):
    assert (z * w).norm() == z.norm() * w.norm()


@given(gauss, gauss, gauss)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert a * b == b * a


@given(gauss, st.integers(0, 6))
def test_power(z, k):
    out = GaussianInt(1)
    for _ in range(k):
        out = out * z
    assert z**k == out


@given(gauss, gauss)
def test_divides(z, w):
    if z.norm():
        assert z.divides(z * w)


def test_basics():
    assert GaussianInt(0, 1) ** 2 == GaussianInt(-1)
    assert 2 * GaussianInt(9, 2) == GaussianInt(18, 4)
    assert 3 - GaussianInt(1, 1) == GaussianInt(2, -1)
    assert str(GaussianInt(18, 4)) == "18+4i"
    assert str(GaussianInt(3, -2)) == "3-2i"
    assert not GaussianInt(2, 0).divides(GaussianInt(1, 1))
    assert GaussianInt(1, 1).divides(2)
