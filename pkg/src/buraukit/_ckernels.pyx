# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled int64 versions of the coefficient kernels in ``_pykernels``.

Arithmetic is checked: any int64 overflow (or an input that does not fit
in int64) raises OverflowError so the caller can retry with Python ints.
"""

from libc.stdlib cimport malloc, calloc, free


cdef extern from *:
    bint add_ovf "__builtin_saddll_overflow"(long long a, long long b, long long *res) nogil
    bint mul_ovf "__builtin_smulll_overflow"(long long a, long long b, long long *res) nogil
    bint sub_ovf "__builtin_ssubll_overflow"(long long a, long long b, long long *res) nogil


cdef long long *_load(seq, Py_ssize_t n) except NULL:
    cdef long long *buf = <long long *> malloc((n if n > 0 else 1) * sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = seq[i]
    except OverflowError:
        free(buf)
        raise
    return buf


cdef inline int _fma(long long *acc, long long a, long long b) nogil:
    cdef long long prod
    if mul_ovf(a, b, &prod):
        return 1
    if add_ovf(acc[0], prod, acc):
        return 1
    return 0


cdef int _reduce(long long *r, Py_ssize_t nr, const long long *m, Py_ssize_t d) nogil:
    cdef Py_ssize_t i, j, base
    cdef long long c, prod
    for i in range(nr - 1, d - 1, -1):
        c = r[i]
        if c == 0:
            continue
        base = i - d
        for j in range(d):
            if m[j] == 0:
                continue
            if mul_ovf(c, m[j], &prod):
                return 1
            if sub_ovf(r[base + j], prod, &r[base + j]):
                return 1
    return 0


def convolve(a, b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef long long *pa = _load(a, na)
    cdef long long *pb = NULL
    cdef long long *out = NULL
    cdef int bad = 0
    try:
        pb = _load(b, nb)
        out = <long long *> calloc(na + nb - 1, sizeof(long long))
        if out == NULL:
            raise MemoryError()
        with nogil:
            for i in range(na):
                if pa[i] == 0:
                    continue
                for j in range(nb):
                    if _fma(&out[i + j], pa[i], pb[j]):
                        bad = 1
                        break
                if bad:
                    break
        if bad:
            raise OverflowError("int64 overflow in convolve")
        return [out[i] for i in range(na + nb - 1)]
    finally:
        free(pa)
        free(pb)
        free(out)


def reduce_monic(p, m):
    cdef Py_ssize_t nm = len(m), d = nm - 1, n = len(p), i
    cdef Py_ssize_t size = n if n > d else d
    cdef long long *pm = _load(m, nm)
    cdef long long *r = NULL
    cdef int bad
    try:
        r = <long long *> calloc(size if size > 0 else 1, sizeof(long long))
        if r == NULL:
            raise MemoryError()
        for i in range(n):
            r[i] = p[i]
        with nogil:
            bad = _reduce(r, n, pm, d)
        if bad:
            raise OverflowError("int64 overflow in reduce_monic")
        return [r[i] for i in range(d)]
    finally:
        free(pm)
        free(r)


def mulmod(a, b, m):
    return reduce_monic(convolve(a, b), m)


def matmul_mod(A, B, Py_ssize_t n, m):
    cdef Py_ssize_t nm = len(m), d = nm - 1
    cdef Py_ssize_t width = 2 * d - 1 if d > 0 else 1
    cdef Py_ssize_t cells = n * n, i, j, k, u, v, e
    cdef long long *pm = _load(m, nm)
    cdef long long *pa = NULL
    cdef long long *pb = NULL
    cdef long long *acc = NULL
    cdef const long long *arow
    cdef const long long *bcol
    cdef int bad = 0
    out = []
    try:
        pa = <long long *> malloc((cells * d if cells * d > 0 else 1) * sizeof(long long))
        pb = <long long *> malloc((cells * d if cells * d > 0 else 1) * sizeof(long long))
        acc = <long long *> malloc(width * sizeof(long long))
        if pa == NULL or pb == NULL or acc == NULL:
            raise MemoryError()
        for e in range(cells):
            ea = A[e]
            eb = B[e]
            for u in range(d):
                pa[e * d + u] = ea[u]
                pb[e * d + u] = eb[u]
        for i in range(n):
            for j in range(n):
                with nogil:
                    for u in range(width):
                        acc[u] = 0
                    for k in range(n):
                        arow = &pa[(i * n + k) * d]
                        bcol = &pb[(k * n + j) * d]
                        for u in range(d):
                            if arow[u] == 0:
                                continue
                            for v in range(d):
                                if _fma(&acc[u + v], arow[u], bcol[v]):
                                    bad = 1
                                    break
                            if bad:
                                break
                        if bad:
                            break
                    if not bad:
                        bad = _reduce(acc, width, pm, d)
                if bad:
                    raise OverflowError("int64 overflow in matmul_mod")
                out.append([acc[u] for u in range(d)])
        return out
    finally:
        free(pm)
        free(pa)
        free(pb)
        free(acc)
