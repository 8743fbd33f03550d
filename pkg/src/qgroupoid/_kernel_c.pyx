# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``: sparse polynomial dict kernels.

Same contracts as the pure module; coefficients stay exact Fractions
(arbitrary-precision Python objects), the speedup comes from C-level
loops, tuple building and dict traffic.
"""

from fractions import Fraction

BACKEND = "compiled"

cdef object _ZERO = Fraction(0)


def poly_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        s = out.get(k, _ZERO) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        s = out.get(k, _ZERO) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_neg(dict a):
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        out[k] = -v
    return out


def poly_scale(dict a, object c):
    cdef dict out = {}
    cdef object k, v
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object va, vb, s
    cdef Py_ssize_t i, n
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ka, va in a.items():
        n = len(ka)
        for kb, vb in b.items():
            k = tuple([ka[i] + kb[i] for i in range(n)])
            s = out.get(k, _ZERO) + va * vb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_diff(dict a, Py_ssize_t j):
    cdef dict out = {}
    cdef tuple k, kk
    cdef object v, s
    cdef object e
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
