# cython: language_level=3
"""Exact rational and lex-vector primitives, compiled twin.

Same API and semantics as _ratvec_py; numerators and denominators stay
arbitrary-precision Python ints, Cython only removes interpreter overhead
from the tight loops.
"""

from math import gcd

ZERO = (0, 1)
ONE = (1, 1)


cpdef tuple rnorm(p, q):
    if q < 0:
        p, q = -p, -q
    g = gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    return (p, q)


cpdef tuple rmake(p, q=1):
    if q == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return rnorm(p, q)


cpdef tuple radd(tuple a, tuple b):
    p1, q1 = a
    p2, q2 = b
    if q1 == 1 and q2 == 1:
        return (p1 + p2, 1)
    return rnorm(p1 * q2 + p2 * q1, q1 * q2)


cpdef tuple rneg(tuple a):
    return (-a[0], a[1])


cpdef tuple rsub(tuple a, tuple b):
    return radd(a, (-b[0], b[1]))


cpdef tuple rmul(tuple a, tuple b):
    p1, q1 = a
    p2, q2 = b
    if q1 == 1 and q2 == 1:
        return (p1 * p2, 1)
    return rnorm(p1 * p2, q1 * q2)


cpdef tuple rdiv(tuple a, tuple b):
    if b[0] == 0:
        raise ZeroDivisionError("rational division by zero")
    return rnorm(a[0] * b[1], a[1] * b[0])


cpdef int rcmp(tuple a, tuple b):
    lhs = a[0] * b[1]
    rhs = b[0] * a[1]
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


cpdef bint ris_int(tuple a):
    return a[1] == 1


cpdef tuple vzero(Py_ssize_t n):
    return ((0, 1),) * n


cpdef tuple vadd(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    out = []
    for i in range(n):
        out.append(radd(u[i], v[i]))
    return tuple(out)


cpdef tuple vneg(tuple u):
    out = []
    for a in u:
        out.append((-a[0], a[1]))
    return tuple(out)


cpdef tuple vsub(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    out = []
    for i in range(n):
        out.append(rsub(u[i], v[i]))
    return tuple(out)


cpdef int vcmp(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    cdef int c
    for i in range(n):
        c = rcmp(u[i], v[i])
        if c:
            return c
    return 0
