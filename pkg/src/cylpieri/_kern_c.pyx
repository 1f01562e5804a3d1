# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels with the same interface as ``_kern_py``.

Terms are marshalled into 128-bit keys and int64 coefficients.  Whenever a
coefficient does not fit, or an intermediate sum would overflow, the call is
answered by the pure-Python kernel instead, so results never depend on the
backend.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp cimport bool as cbool
from libcpp.vector cimport vector

from . import _kern_py

WIDTH = _kern_py.WIDTH

cdef extern from "_kern_impl.hpp" namespace "kern":
    cdef struct Key:
        uint64_t lo
        uint64_t hi
    cdef struct Term:
        Key key
        int64_t coeff
    cbool c_mul "kern::mul"(const vector[Term]& a, const vector[Term]& b, vector[Term]& out)
    cbool c_div_linear "kern::div_linear"(const vector[Term]& a, unsigned shift, const Key& ka, const Key& kb,
                                          uint64_t field, vector[Term]& out, cbool& exact)

cdef extern from "Python.h":
    # Little-endian byte conversions; one call per key in each direction.
    object _PyLong_FromByteArray(const unsigned char* buf, size_t n, int little_endian, int is_signed)
    ctypedef struct PyLongObject:
        pass
    int _PyLong_AsByteArray(PyLongObject* v, unsigned char* buf, size_t n, int little_endian, int is_signed) except -1

cdef int64_t LIMIT = (1 << 62)


cdef inline cbool _key(object k, Key* out) except *:
    """False when ``k`` needs more than 128 bits."""
    try:
        _PyLong_AsByteArray(<PyLongObject*>k, <unsigned char*>out, 16, 1, 0)
    except OverflowError:
        return False
    return True


cdef cbool _load(dict d, vector[Term]& out) except *:
    cdef Term t
    out.reserve(len(d))
    for k, v in d.items():
        if not (-LIMIT < v < LIMIT):
            return False
        if not _key(k, &t.key):
            return False
        t.coeff = <int64_t>v
        out.push_back(t)
    return True


cdef dict _store(vector[Term]& v):
    cdef dict out = {}
    cdef size_t i
    for i in range(v.size()):
        out[_PyLong_FromByteArray(<const unsigned char*>&v[i].key, 16, 1, 0)] = v[i].coeff
    return out


def mul(dict a, dict b):
    cdef vector[Term] va, vb, out
    if not _load(a, va) or not _load(b, vb):
        return _kern_py.mul(a, b)
    if not c_mul(va, vb, out):
        return _kern_py.mul(a, b)
    return _store(out)


# Its output is about twice its input, so marshalling always outweighs the
# arithmetic; the dict loop is faster at every size measured.
mul_linear = _kern_py.mul_linear


def add_scaled(dict acc, dict b, scale):
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


def div_linear(dict a, int var_a, int var_b):
    cdef vector[Term] va, out
    cdef cbool exact = True
    cdef unsigned shift = WIDTH * (var_a - 1)
    cdef Key cka, ckb
    if var_a > 128 // WIDTH or var_b > 128 // WIDTH or not _load(a, va):
        return _kern_py.div_linear(a, var_a, var_b)
    _key((<object>1) << (WIDTH * (var_a - 1)), &cka)
    _key((<object>1) << (WIDTH * (var_b - 1)), &ckb)
    if not c_div_linear(va, shift, cka, ckb, (1 << WIDTH) - 1, out, exact):
        return _kern_py.div_linear(a, var_a, var_b)
    if not exact:
        return None
    return _store(out)
