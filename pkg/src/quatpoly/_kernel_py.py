"""Pure-Python float kernels.

Mirrors ``_kernel_c`` operation for operation; both backends must perform the
same floating-point operations in the same order so that results are
bit-identical whichever one the import selects.
"""

BACKEND = "pure"


def qmul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def qnormsq(a):
    aw, ax, ay, az = a
    return aw * aw + ax * ax + ay * ay + az * az


def qinv(a):
    n = qnormsq(a)
    aw, ax, ay, az = a
    return (aw / n, -ax / n, -ay / n, -az / n)


def qconj(q, x):
    return qmul(qmul(q, x), qinv(q))


def eval_poly(exps, coefs, point, nvars):
    """Ordered evaluation of sum_I a_I * q1^i1 * ... * qn^in.

    ``exps`` is a flat row-major (nterms, nvars) exponent table, ``coefs`` a
    flat (nterms, 4) coefficient table, ``point`` a flat (nvars, 4) table.
    Term order is the caller's canonical order.
    """
    nterms = len(coefs) // 4
    maxexp = [0] * nvars
    for t in range(nterms):
        for v in range(nvars):
            e = exps[t * nvars + v]
            if e > maxexp[v]:
                maxexp[v] = e
    # powers[v][e] as flat 4-wide rows, built by successive multiplication
    powers = []
    for v in range(nvars):
        q = tuple(point[4 * v : 4 * v + 4])
        table = [(1.0, 0.0, 0.0, 0.0)]
        for _ in range(maxexp[v]):
            table.append(qmul(table[-1], q))
        powers.append(table)
    accw = accx = accy = accz = 0.0
    for t in range(nterms):
        term = tuple(coefs[4 * t : 4 * t + 4])
        for v in range(nvars):
            e = exps[t * nvars + v]
            if e:
                term = qmul(term, powers[v][e])
        accw += term[0]
        accx += term[1]
        accy += term[2]
        accz += term[3]
    return (accw, accx, accy, accz)
