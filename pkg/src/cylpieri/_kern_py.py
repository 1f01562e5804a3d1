"""Pure-Python polynomial kernels.

Polynomials are plain dicts mapping a packed monomial key to a nonzero int.
The exponent of ``t_i`` occupies bits ``[WIDTH*(i-1), WIDTH*i)`` of the key, so
multiplying monomials is integer addition of keys.  The compiled module
``_kern_c`` exposes the same functions with the same semantics.
"""

WIDTH = 8
FIELD = (1 << WIDTH) - 1


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            c = get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                del out[k]
    return out


def mul_linear(a, ka, kb):
    """Multiply ``a`` by ``t_i - t_j`` where ``ka``/``kb`` are the keys of t_i, t_j."""
    out = {}
    get = out.get
    for k, c in a.items():
        k1 = k + ka
        v = get(k1, 0) + c
        if v:
            out[k1] = v
        else:
            del out[k1]
        k2 = k + kb
        v = get(k2, 0) - c
        if v:
            out[k2] = v
        else:
            del out[k2]
    return out


def add_scaled(acc, b, scale):
    """In place ``acc += scale * b``; returns ``acc``."""
    if not scale:
        return acc
    get = acc.get
    for k, c in b.items():
        v = get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            del acc[k]
    return acc


def div_linear(a, var_a, var_b):
    """Exact quotient of ``a`` by ``t_{var_a} - t_{var_b}``, or None on remainder.

    Synthetic division in ``t_{var_a}``: the top-degree slice moves into the
    quotient and is pushed one degree down with ``t_{var_a}`` traded for
    ``t_{var_b}``.
    """
    shift = WIDTH * (var_a - 1)
    ka = 1 << shift
    kb = 1 << (WIDTH * (var_b - 1))
    buckets = {}
    for k, c in a.items():
        e = (k >> shift) & FIELD
        buckets.setdefault(e, {})[k] = c
    if not buckets:
        return {}
    quot = {}
    for e in range(max(buckets), 0, -1):
        layer = buckets.pop(e, None)
        if not layer:
            continue
        below = buckets.setdefault(e - 1, {})
        for k, c in layer.items():
            qk = k - ka
            quot[qk] = quot.get(qk, 0) + c
            nk = qk + kb
            v = below.get(nk, 0) + c
            if v:
                below[nk] = v
            else:
                del below[nk]
    if buckets.get(0):
        return None
    return {k: c for k, c in quot.items() if c}
