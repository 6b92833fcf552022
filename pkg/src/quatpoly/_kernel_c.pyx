# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled float kernels.

Must mirror ``_kernel_py`` operation for operation (same arithmetic, same
order) so both backends produce bit-identical doubles.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef inline void _mul4(double* out,
                       double aw, double ax, double ay, double az,
                       double bw, double bx, double by, double bz) noexcept nogil:
    out[0] = aw * bw - ax * bx - ay * by - az * bz
    out[1] = aw * bx + ax * bw + ay * bz - az * by
    out[2] = aw * by - ax * bz + ay * bw + az * bx
    out[3] = aw * bz + ax * by - ay * bx + az * bw


def qmul(a, b):
    cdef double out[4]
    _mul4(out, a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3])
    return (out[0], out[1], out[2], out[3])


def qnormsq(a):
    cdef double aw = a[0], ax = a[1], ay = a[2], az = a[3]
    return aw * aw + ax * ax + ay * ay + az * az


def qinv(a):
    cdef double aw = a[0], ax = a[1], ay = a[2], az = a[3]
    cdef double n = aw * aw + ax * ax + ay * ay + az * az
    return (aw / n, -ax / n, -ay / n, -az / n)


def qconj(q, x):
    return qmul(qmul(q, x), qinv(q))


def eval_poly(exps, coefs, point, int nvars):
    """Ordered evaluation; see the pure twin for the layout contract."""
    cdef long[::1] ev = exps
    cdef double[::1] cv = coefs
    cdef double[::1] pv = point
    cdef int nterms = cv.shape[0] // 4
    cdef int t, v, e, base, stride
    cdef long mx
    cdef double accw = 0.0, accx = 0.0, accy = 0.0, accz = 0.0
    cdef double term[4]
    cdef double tmp[4]
    cdef long* maxexp = NULL
    cdef double* powers = NULL
    cdef long* offsets = NULL
    if nterms == 0:
        return (0.0, 0.0, 0.0, 0.0)
    maxexp = <long*> malloc(nvars * sizeof(long))
    offsets = <long*> malloc((nvars + 1) * sizeof(long))
    if maxexp == NULL or offsets == NULL:
        free(maxexp)
        free(offsets)
        raise MemoryError()
    try:
        for v in range(nvars):
            maxexp[v] = 0
        for t in range(nterms):
            for v in range(nvars):
                if ev[t * nvars + v] > maxexp[v]:
                    maxexp[v] = ev[t * nvars + v]
        offsets[0] = 0
        for v in range(nvars):
            offsets[v + 1] = offsets[v] + (maxexp[v] + 1) * 4
        powers = <double*> malloc(offsets[nvars] * sizeof(double))
        if powers == NULL:
            raise MemoryError()
        for v in range(nvars):
            base = offsets[v]
            powers[base] = 1.0
            powers[base + 1] = 0.0
            powers[base + 2] = 0.0
            powers[base + 3] = 0.0
            for e in range(1, maxexp[v] + 1):
                _mul4(
                    &powers[base + 4 * e],
                    powers[base + 4 * (e - 1)],
                    powers[base + 4 * (e - 1) + 1],
                    powers[base + 4 * (e - 1) + 2],
                    powers[base + 4 * (e - 1) + 3],
                    pv[4 * v], pv[4 * v + 1], pv[4 * v + 2], pv[4 * v + 3],
                )
        for t in range(nterms):
            term[0] = cv[4 * t]
            term[1] = cv[4 * t + 1]
            term[2] = cv[4 * t + 2]
            term[3] = cv[4 * t + 3]
            for v in range(nvars):
                e = ev[t * nvars + v]
                if e:
                    stride = offsets[v] + 4 * e
                    _mul4(
                        tmp,
                        term[0], term[1], term[2], term[3],
                        powers[stride], powers[stride + 1],
                        powers[stride + 2], powers[stride + 3],
                    )
                    term[0] = tmp[0]
                    term[1] = tmp[1]
                    term[2] = tmp[2]
                    term[3] = tmp[3]
            accw += term[0]
            accx += term[1]
            accy += term[2]
            accz += term[3]
        return (accw, accx, accy, accz)
    finally:
        free(maxexp)
        free(offsets)
        free(powers)
