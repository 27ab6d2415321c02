# cython: language_level=3
"""Compiled term-dict kernels; behaviour mirrors ``pure.py`` exactly.

Coefficients stay Python ints (arbitrary precision is part of the
contract), so the win comes from compiling the dict-convolution loops,
not from narrowing any numeric types.
"""


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v == 0:
                del out[k]
            else:
                out[k] = v
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v == 0:
                del out[k]
            else:
                out[k] = v
    return out


def neg_terms(dict a):
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def scale_terms(dict a, factor):
    cdef dict out = {}
    if factor == 0:
        return out
    for k, c in a.items():
        out[k] = factor * c
    return out


def mul_terms(dict a, dict b):
    cdef dict acc = {}
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = acc.get(k)
            if v is None:
                acc[k] = ca * cb
            else:
                acc[k] = v + ca * cb
    for k, v in acc.items():
        if v != 0:
            out[k] = v
    return out


def bi_mul_terms(dict a, dict b):
    cdef dict acc = {}
    cdef dict out = {}
    cdef tuple ka, kb, k
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = (ka[0] + kb[0], ka[1] + kb[1])
            v = acc.get(k)
            if v is None:
                acc[k] = ca * cb
            else:
                acc[k] = v + ca * cb
    for k, v in acc.items():
        if v != 0:
            out[k] = v
    return out
