# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of kdvsym._kernel._pure.

Same three entry points, same semantics; the win comes from typed loop
counters and early-bound dict access in the inner collection loops.
"""

KERNEL_NAME = "speedups"


def mono_mul(tuple m1, tuple m2):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(m1), n2 = len(m2)
    cdef list out = []
    cdef object a1, a2, k1, k2
    cdef object e1, e2, e
    while i < n1 and j < n2:
        a1, e1 = <tuple> m1[i]
        a2, e2 = <tuple> m2[j]
        k1 = a1.skey
        k2 = a2.skey
        if k1 == k2:
            e = e1 + e2
            if e:
                out.append((a1, e))
            i += 1
            j += 1
        elif k1 < k2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    while i < n1:
        out.append(m1[i])
        i += 1
    while j < n2:
        out.append(m2[j])
        j += 1
    return tuple(out)


def poly_add(dict p, dict q):
    cdef dict r = dict(p)
    cdef object m, c, c0, c1
    for m, c in q.items():
        c0 = r.get(m)
        if c0 is None:
            r[m] = c
        else:
            c1 = c0 + c
            if c1:
                r[m] = c1
            else:
                del r[m]
    return r


def poly_mul(dict p, dict q):
    cdef dict r = {}
    cdef object m1, c1, m2, c2, m, c, c0, c1b
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(<tuple> m1, <tuple> m2)
            c = c1 * c2
            c0 = r.get(m)
            if c0 is None:
                r[m] = c
            else:
                c1b = c0 + c
                if c1b:
                    r[m] = c1b
                else:
                    del r[m]
    return r


def poly_scale(dict p, c):
    cdef dict r
    cdef object m, cc
    if not c:
        return {}
    r = {}
    for m, cc in p.items():
        r[m] = cc * c
    return r
