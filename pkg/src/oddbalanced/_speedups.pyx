# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled twin of _kernels_py: same signatures, C loop overhead removed.

Coefficients stay arbitrary Python objects (big ints, Fractions, complex,
Laurent/cyclotomic elements); only the loop machinery is compiled.
"""


def shifted_add(list c, Py_ssize_t a, s, Py_ssize_t lo=0):
    """In place, multiply the series by (1 + s*q^a)."""
    cdef Py_ssize_t k
    cdef object v
    for k in range(len(c) - 1, lo + a - 1, -1):
        v = c[k - a]
        if v:
            c[k] = c[k] + s * v


def shifted_add_one(list c, Py_ssize_t a, Py_ssize_t lo=0):
    """In place, multiply the series by (1 + q^a)."""
    cdef Py_ssize_t k
    cdef object v
    for k in range(len(c) - 1, lo + a - 1, -1):
        v = c[k - a]
        if v:
            c[k] = c[k] + v


def geometric_add(list c, Py_ssize_t a, Py_ssize_t lo=0):
    """In place, divide the series by (1 - q^a)."""
    cdef Py_ssize_t k
    cdef object v
    for k in range(lo + a, len(c)):
        v = c[k - a]
        if v:
            c[k] = c[k] + v


def acc_add(list dst, list src, Py_ssize_t lo=0):
    """dst[k] += src[k] for k >= lo."""
    cdef Py_ssize_t k
    cdef object v
    for k in range(lo, len(dst)):
        v = src[k]
        if v:
            dst[k] = dst[k] + v


def cauchy_mul(list a, list b, zero):
    """Schoolbook product of two equal-length coefficient lists."""
    cdef Py_ssize_t n = min(len(a), len(b))
    cdef Py_ssize_t i, j
    cdef object ai, bj
    cdef list out = [zero] * n
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def table_mul_w(list cols, Py_ssize_t a, Py_ssize_t lo=0):
    """In place, multiply the table by (1 + w*q^a); top column first."""
    cdef Py_ssize_t i, k
    cdef list dst, src
    cdef object v
    for i in range(len(cols) - 1, 0, -1):
        dst = cols[i]
        src = cols[i - 1]
        for k in range(len(dst) - 1, lo + a - 1, -1):
            v = src[k - a]
            if v:
                dst[k] = dst[k] + v


def table_mul_winv(list cols, Py_ssize_t a, Py_ssize_t lo=0):
    """In place, multiply the table by (1 + w^-1*q^a); bottom column first."""
    cdef Py_ssize_t i, k
    cdef list dst, src
    cdef object v
    for i in range(len(cols) - 1):
        dst = cols[i]
        src = cols[i + 1]
        for k in range(len(dst) - 1, lo + a - 1, -1):
            v = src[k - a]
            if v:
                dst[k] = dst[k] + v


def table_geometric(list cols, Py_ssize_t a, Py_ssize_t lo=0):
    """In place, divide every column by (1 - q^a)."""
    cdef list col
    for col in cols:
        geometric_add(col, a, lo)


def table_acc(list dst_cols, list src_cols, Py_ssize_t lo=0):
    """Accumulate src table into dst table."""
    cdef Py_ssize_t i
    for i in range(len(dst_cols)):
        acc_add(dst_cols[i], src_cols[i], lo)
