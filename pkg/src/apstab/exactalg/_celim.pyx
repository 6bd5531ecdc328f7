# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels (CSR input, int64 arithmetic).

Pivot rows live in one growable pool; the row being reduced is held in a
dense accumulator.  The integer kernel detects int64 overflow and raises
OverflowError so the caller can fall back to arbitrary precision.
"""

from libc.stdlib cimport malloc, realloc, free, calloc
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int apstab_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int apstab_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int apstab_mul_ovf(long long a, long long b, long long *r) nogil
    int apstab_sub_ovf(long long a, long long b, long long *r) nogil


cdef struct Pool:
    int64_t *cols
    int64_t *vals
    Py_ssize_t size
    Py_ssize_t cap


cdef int pool_reserve(Pool *pool, Py_ssize_t extra) noexcept nogil:
    cdef Py_ssize_t need = pool.size + extra
    cdef Py_ssize_t cap
    cdef int64_t *c
    cdef int64_t *v
    if need <= pool.cap:
        return 0
    cap = pool.cap * 2
    if cap < need:
        cap = need
    if cap < 1024:
        cap = 1024
    c = <int64_t *> realloc(pool.cols, cap * sizeof(int64_t))
    if c == NULL:
        return -1
    pool.cols = c
    v = <int64_t *> realloc(pool.vals, cap * sizeof(int64_t))
    if v == NULL:
        return -1
    pool.vals = v
    pool.cap = cap
    return 0


cdef inline int64_t gcd64(int64_t a, int64_t b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline int64_t inv_mod(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
               Py_ssize_t nrows, Py_ssize_t ncols, int64_t p):
    """Rank over F_p of a CSR matrix whose entries are already reduced mod p."""
    if p <= 1 or p >= (1 << 31):
        raise ValueError("prime out of range for the int64 kernel")
    cdef Pool pool
    pool.cols = NULL
    pool.vals = NULL
    pool.size = 0
    pool.cap = 0
    cdef int64_t *acc = <int64_t *> calloc(ncols + 1, sizeof(int64_t))
    cdef Py_ssize_t *pstart = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *plen = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    if acc == NULL or pstart == NULL or plen == NULL:
        free(acc); free(pstart); free(plen)
        raise MemoryError()
    cdef Py_ssize_t i, k, c, lo, s, e, cnt
    cdef int64_t f, inv, v
    cdef Py_ssize_t rank = 0
    cdef int failed = 0
    with nogil:
        for c in range(ncols):
            pstart[c] = -1
            plen[c] = 0
        for i in range(nrows):
            s = indptr[i]
            e = indptr[i + 1]
            if s == e:
                continue
            lo = ncols
            for k in range(s, e):
                acc[indices[k]] = data[k]
                if indices[k] < lo:
                    lo = indices[k]
            c = lo
            while c < ncols:
                f = acc[c]
                if f == 0:
                    c += 1
                    continue
                if pstart[c] >= 0:
                    for k in range(pstart[c], pstart[c] + plen[c]):
                        v = acc[pool.cols[k]] - f * pool.vals[k]
                        v %= p
                        if v < 0:
                            v += p
                        acc[pool.cols[k]] = v
                    c += 1
                    continue
                cnt = 0
                for k in range(c, ncols):
                    if acc[k]:
                        cnt += 1
                if pool_reserve(&pool, cnt) < 0:
                    failed = 1
                    break
                inv = inv_mod(f, p)
                pstart[c] = pool.size
                plen[c] = cnt
                for k in range(c, ncols):
                    if acc[k]:
                        pool.cols[pool.size] = k
                        pool.vals[pool.size] = (acc[k] * inv) % p
                        pool.size += 1
                        acc[k] = 0
                rank += 1
                break
            if failed:
                break
    free(acc); free(pstart); free(plen)
    free(pool.cols); free(pool.vals)
    if failed:
        raise MemoryError()
    return rank


def rank_integer(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
                 Py_ssize_t nrows, Py_ssize_t ncols):
    """Rank over Q of an integer CSR matrix; OverflowError if int64 is exceeded."""
    cdef Pool pool
    pool.cols = NULL
    pool.vals = NULL
    pool.size = 0
    pool.cap = 0
    cdef int64_t *acc = <int64_t *> calloc(ncols + 1, sizeof(int64_t))
    cdef Py_ssize_t *pstart = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *plen = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    if acc == NULL or pstart == NULL or plen == NULL:
        free(acc); free(pstart); free(plen)
        raise MemoryError()
    cdef Py_ssize_t i, k, c, lo, s, e, cnt, base
    cdef int64_t a, b, q, g, sc, v
    cdef long long tmp, tmp2
    cdef Py_ssize_t rank = 0
    cdef int status = 0  # 1 = overflow, 2 = memory
    with nogil:
        for c in range(ncols):
            pstart[c] = -1
            plen[c] = 0
        for i in range(nrows):
            s = indptr[i]
            e = indptr[i + 1]
            if s == e:
                continue
            lo = ncols
            for k in range(s, e):
                acc[indices[k]] = data[k]
                if indices[k] < lo:
                    lo = indices[k]
            c = lo
            while c < ncols:
                b = acc[c]
                if b == 0:
                    c += 1
                    continue
                if pstart[c] >= 0:
                    base = pstart[c]
                    a = pool.vals[base]
                    if b % a == 0:
                        q = b // a
                    else:
                        g = gcd64(a, b)
                        sc = a // g
                        q = b // g
                        for k in range(c, ncols):
                            if acc[k]:
                                if apstab_mul_ovf(acc[k], sc, &tmp):
                                    status = 1
                                    break
                                acc[k] = tmp
                        if status:
                            break
                    for k in range(base, base + plen[c]):
                        if apstab_mul_ovf(q, pool.vals[k], &tmp):
                            status = 1
                            break
                        if apstab_sub_ovf(acc[pool.cols[k]], tmp, &tmp2):
                            status = 1
                            break
                        acc[pool.cols[k]] = tmp2
                    if status:
                        break
                    c += 1
                    continue
                cnt = 0
                g = 0
                for k in range(c, ncols):
                    if acc[k]:
                        cnt += 1
                        g = gcd64(g, acc[k])
                if pool_reserve(&pool, cnt) < 0:
                    status = 2
                    break
                pstart[c] = pool.size
                plen[c] = cnt
                for k in range(c, ncols):
                    if acc[k]:
                        pool.cols[pool.size] = k
                        pool.vals[pool.size] = acc[k] // g
                        pool.size += 1
                        acc[k] = 0
                rank += 1
                break
            if status:
                break
    free(acc); free(pstart); free(plen)
    free(pool.cols); free(pool.vals)
    if status == 1:
        raise OverflowError("int64 overflow in integer elimination")
    if status == 2:
        raise MemoryError()
    return rank
