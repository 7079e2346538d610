# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse-polynomial kernels (twin of `_kernel_py`).

Coefficients stay arbitrary Python objects (Fractions), so the speedup
comes from loop/dispatch overhead, not from native numerics.
"""

BACKEND = "cython"


cdef inline tuple _exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def exp_add(tuple a, tuple b):
    return _exp_add(a, b)


def poly_neg(dict a):
    cdef dict out = {}
    for e, c in a.items():
        out[e] = -c
    return out


def poly_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for e, v in a.items():
        out[e] = c * v
    return out


def poly_add(dict a, dict b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def poly_iadd_scaled(dict out, dict b, c):
    """In place: out += c * b. Returns out."""
    if not c:
        return out
    for e, v in b.items():
        w = out.get(e)
        if w is None:
            out[e] = c * v
        else:
            w = w + c * v
            if w:
                out[e] = w
            else:
                del out[e]
    return out


def poly_mul(dict a, dict b):
    cdef dict out = {}
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    cdef tuple e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _exp_add(<tuple> ea, <tuple> eb)
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out
