"""Pure-Python term-arithmetic kernel.

Monomials are tuples of (atom, exponent) pairs sorted by the atom's
precomputed sort key (`.skey`); polynomials are dicts mapping monomials to
Fraction coefficients with no zero entries.  These three loops dominate the
runtime of every normalization, so they also exist as a compiled twin in
`_speedups.pyx`; both implementations must stay behaviorally identical
(see tests/test_kernels.py).

Monomials reaching `mono_mul` must not contain exponential atoms; the
caller routes those through the merge-aware slow path.
"""

KERNEL_NAME = "pure"


def mono_mul(m1, m2):
    i = 0
    j = 0
    n1 = len(m1)
    n2 = len(m2)
    out = []
    while i < n1 and j < n2:
        a1, e1 = m1[i]
        a2, e2 = m2[j]
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
    if i < n1:
        out.extend(m1[i:])
    if j < n2:
        out.extend(m2[j:])
    return tuple(out)


def poly_add(p, q):
    r = dict(p)
    get = r.get
    for m, c in q.items():
        c0 = get(m)
        if c0 is None:
            r[m] = c
        else:
            c1 = c0 + c
            if c1:
                r[m] = c1
            else:
                del r[m]
    return r


def poly_mul(p, q):
    r = {}
    get = r.get
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            c = c1 * c2
            c0 = get(m)
            if c0 is None:
                r[m] = c
            else:
                c1b = c0 + c
                if c1b:
                    r[m] = c1b
                else:
                    del r[m]
    return r


def poly_scale(p, c):
    if not c:
        return {}
    return {m: cc * c for m, cc in p.items()}
