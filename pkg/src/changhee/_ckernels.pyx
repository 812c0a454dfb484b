# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer convolution kernels.

Same contract as ``changhee._pykernels``.  When every product and partial
sum provably fits in a signed 64-bit word the loops run on C integers;
otherwise they fall back to Python integer objects.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef int _SAFE_BITS = 62


cdef int _bits(seq):
    cdef int m = 0
    cdef int b
    for v in seq:
        b = (<object>v).bit_length()
        if b > m:
            m = b
    return m


cdef bint _fits(int bits_a, int bits_b, Py_ssize_t terms):
    # |sum| <= terms * 2^(bits_a + bits_b)
    return bits_a + bits_b + (<object>terms).bit_length() <= _SAFE_BITS


cdef list _convolve_c(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na + nb - 1
    cdef Py_ssize_t i, j
    cdef i64 ai
    cdef i64 *ca = <i64 *> malloc(na * sizeof(i64))
    cdef i64 *cb = <i64 *> malloc(nb * sizeof(i64))
    cdef i64 *co = <i64 *> malloc(n * sizeof(i64))
    if ca == NULL or cb == NULL or co == NULL:
        free(ca); free(cb); free(co)
        raise MemoryError()
    try:
        for i in range(na):
            ca[i] = a[i]
        for j in range(nb):
            cb[j] = b[j]
        for i in range(n):
            co[i] = 0
        for i in range(na):
            ai = ca[i]
            if ai == 0:
                continue
            for j in range(nb):
                co[i + j] += ai * cb[j]
        return [co[i] for i in range(n)]
    finally:
        free(ca); free(cb); free(co)


cdef list _convolve_obj(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t i, j
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def convolve(a, b):
    """Full linear convolution of two integer sequences."""
    a = list(a)
    b = list(b)
    if not a or not b:
        return []
    if _fits(_bits(a), _bits(b), min(len(a), len(b))):
        return _convolve_c(a, b)
    return _convolve_obj(a, b)


def convolve2d(A, B, order):
    """Cauchy product of two series of integer polynomials, truncated."""
    cdef Py_ssize_t k, i, p, q, n, na, nb, lena, lenb
    cdef list out = []
    cdef list acc
    cdef list ra, rb
    A = [list(r) for r in A]
    B = [list(r) for r in B]
    lena = len(A)
    lenb = len(B)
    cdef int bits_a = max([_bits(r) for r in A] or [0])
    cdef int bits_b = max([_bits(r) for r in B] or [0])
    cdef Py_ssize_t wa = max([len(r) for r in A] or [0])
    cdef Py_ssize_t wb = max([len(r) for r in B] or [0])
    cdef bint fast = _fits(bits_a, bits_b, (order + 1) * (min(wa, wb) + 1))
    cdef i64 *cacc
    cdef i64 ap
    for k in range(order + 1):
        n = 0
        for i in range(k + 1):
            if i < lena and k - i < lenb:
                na = len(<list>A[i])
                nb = len(<list>B[k - i])
                if na and nb and na + nb - 1 > n:
                    n = na + nb - 1
        if n == 0:
            out.append([])
            continue
        if fast:
            cacc = <i64 *> malloc(n * sizeof(i64))
            if cacc == NULL:
                raise MemoryError()
            try:
                for p in range(n):
                    cacc[p] = 0
                for i in range(k + 1):
                    if i >= lena or k - i >= lenb:
                        continue
                    ra = <list>A[i]
                    rb = <list>B[k - i]
                    for p in range(len(ra)):
                        ap = ra[p]
                        if ap == 0:
                            continue
                        for q in range(len(rb)):
                            cacc[p + q] += ap * <i64>rb[q]
                out.append([cacc[p] for p in range(n)])
            finally:
                free(cacc)
        else:
            acc = [0] * n
            for i in range(k + 1):
                if i >= lena or k - i >= lenb:
                    continue
                ra = <list>A[i]
                rb = <list>B[k - i]
                for p in range(len(ra)):
                    apo = ra[p]
                    if apo == 0:
                        continue
                    for q in range(len(rb)):
                        acc[p + q] = acc[p + q] + apo * rb[q]
            out.append(acc)
    return out
