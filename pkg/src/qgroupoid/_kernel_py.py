"""Pure-Python kernels for sparse polynomial dictionaries.

A polynomial is a dict mapping exponent tuples (one int per variable) to
nonzero Fraction coefficients.  These functions are the hot loops of the
whole engine; a compiled twin lives in ``_kernel_c.pyx`` with identical
semantics, selected at import time by ``kernel.py``.
"""

from fractions import Fraction

BACKEND = "pure"

_ZERO = Fraction(0)


def poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, _ZERO) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, _ZERO) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_neg(a):
    return {k: -v for k, v in a.items()}


def poly_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def poly_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, _ZERO) + va * vb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_diff(a, j):
    out = {}
    for k, v in a.items():
        e = k[j]
        if e:
            kk = k[:j] + (e - 1,) + k[j + 1:]
            s = out.get(kk, _ZERO) + v * e
            if s:
                out[kk] = s
            else:
                del out[kk]
    return out
