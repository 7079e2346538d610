"""Pure-Python sparse-polynomial kernels.

A polynomial is a dict mapping exponent tuples to nonzero Fractions.
These functions are the hot inner loop of every rewriting step; the
compiled twin lives in `_speedups.pyx` with the same signatures.
"""

BACKEND = "python"


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def poly_neg(a):
    return {e: -c for e, c in a.items()}


def poly_scale(a, c):
    if not c:
        return {}
    return {e: c * v for e, v in a.items()}


def poly_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
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


def poly_iadd_scaled(out, b, c):
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


def poly_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    bi = b.items()
    for ea, ca in a.items():
        for eb, cb in bi:
            e = tuple(x + y for x, y in zip(ea, eb))
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
