import pytest
from hypothesis import given, strategies as st

from cylpieri import _kern_py
from cylpieri._backend import BACKEND

try:
    from cylpieri import _kern_c
except ImportError:
    _kern_c = None

needs_compiled = pytest.mark.skipif(_kern_c is None, reason="compiled kernel not built")

W = _kern_py.WIDTH


@st.composite
def raw_polys(draw, nvars=13, big=False):
    out = {}
    for _ in range(draw(st.integers(0, 12))):
        key = sum(draw(st.integers(0, 3)) << (W * draw(st.integers(0, nvars - 1))) for _ in range(3))
        bound = 10**30 if big else 9
        c = draw(st.integers(-bound, bound))
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def key(i):
    return 1 << (W * (i - 1))


def test_backend_reported():
    assert BACKEND in ("compiled", "python")


@needs_compiled
@given(raw_polys(big=True), raw_polys())
def test_mul_matches(a, b):
    assert _kern_c.mul(a, b) == _kern_py.mul(a, b)


@needs_compiled
@given(raw_polys(), st.integers(1, 13), st.integers(1, 13))
def test_mul_linear_and_div_match(a, i, j):
    if i == j:
        return
    prod = _kern_c.mul_linear(a, key(i), key(j))
    assert prod == _kern_py.mul_linear(a, key(i), key(j))
    assert _kern_c.div_linear(prod, i, j) == a
    assert _kern_c.div_linear(a, i, j) == _kern_py.div_linear(a, i, j)


@needs_compiled
def test_int64_overflow_falls_back():
    a = {key(1): 2**61, key(2): 3}
    b = {key(1): 2**61, 0: 1}
    assert _kern_c.mul(a, b) == _kern_py.mul(a, b)


@needs_compiled
@given(raw_polys(), raw_polys(), st.integers(-3, 3))
def test_add_scaled_matches(a, b, s):
    assert _kern_c.add_scaled(dict(a), b, s) == _kern_py.add_scaled(dict(a), b, s)
