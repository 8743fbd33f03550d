import random
from fractions import Fraction

import pytest

from qgroupoid import _kernel_py
from qgroupoid.kernel import BACKEND

try:
    from qgroupoid import _kernel_c
except ImportError:
    _kernel_c = None


def rand_poly(rng, nvars=2, terms=5):
    out = {}
    for _ in range(terms):
        key = tuple(rng.randint(0, 4) for _ in range(nvars))
        out[key] = Fraction(rng.randint(-20, 20) or 1, rng.randint(1, 12))
    return out


def test_pure_kernel_basics():
    a = {(1, 0): Fraction(2)}
    b = {(0, 1): Fraction(3)}
    assert _kernel_py.poly_mul(a, b) == {(1, 1): Fraction(6)}
    assert _kernel_py.poly_add(a, {(1, 0): Fraction(-2)}) == {}
    assert _kernel_py.poly_diff({(2, 0): Fraction(1)}, 0) == {(1, 0): Fraction(2)}
    assert _kernel_py.poly_scale(a, Fraction(0)) == {}
    assert _kernel_py.poly_neg(b) == {(0, 1): Fraction(-3)}
    assert _kernel_py.poly_sub(a, a) == {}


@pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")
def test_backend_parity_randomized():
    rng = random.Random(17)
    for _ in range(40):
        a, b = rand_poly(rng), rand_poly(rng)
        assert _kernel_py.poly_add(a, b) == _kernel_c.poly_add(a, b)
        assert _kernel_py.poly_sub(a, b) == _kernel_c.poly_sub(a, b)
        assert _kernel_py.poly_mul(a, b) == _kernel_c.poly_mul(a, b)
        assert _kernel_py.poly_neg(a) == _kernel_c.poly_neg(a)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        assert _kernel_py.poly_scale(a, c) == _kernel_c.poly_scale(a, c)
        for j in (0, 1):
            assert _kernel_py.poly_diff(a, j) == _kernel_c.poly_diff(a, j)


def test_selected_backend_reports():
    assert BACKEND in ("pure", "compiled")
