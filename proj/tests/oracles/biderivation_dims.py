"""Independent oracle for solution-space dimensions of bilinear-map laws.

Builds matrix-unit algebras, evaluates each defining identity on every unit
bilinear map by direct matrix arithmetic, and computes the rank of the dense
constraint matrix over QQ with sympy. Used to freeze expected values in the
C++ test suites.
"""
import itertools
import sys

import numpy as np
from sympy.polys.matrices import DomainMatrix
from sympy import QQ


def matrix_unit_basis(n, allowed):
    return [(p, q) for p in range(n) for q in range(n) if allowed(p, q)]


def mat(n, pq):
    m = np.zeros((n, n), dtype=object)
    m[pq] = 1
    return m


def law_columns(n, basis, law):
    d = len(basis)
    mats = [mat(n, pq) for pq in basis]
    index = {pq: i for i, pq in enumerate(basis)}

    def coords(m):
        v = [0] * d
        for (p, q), val in np.ndenumerate(m):
            if val != 0:
                v[index[(p, q)]] = val
        return v

    def br(x, y):
        return x.dot(y) - y.dot(x)

    def unit_phi(i, j, k):
        def phi(x, y):
            cx, cy = coords(x), coords(y)
            return cx[i] * cy[j] * mats[k]
        return phi

    cols = []
    for i, j, k in itertools.product(range(d), repeat=3):
        phi = unit_phi(i, j, k)
        col = []
        for x, y, z in itertools.product(mats, repeat=3):
            if law in ("lie-bider", "lie-deriv-1"):
                col += coords(phi(br(x, z), y) - br(phi(x, y), z) - br(x, phi(z, y)))
            if law in ("lie-bider", "lie-deriv-2"):
                col += coords(phi(x, br(y, z)) - br(phi(x, y), z) - br(y, phi(x, z)))
            if law == "assoc-bider":
                col += coords(phi(x.dot(z), y) - phi(x, y).dot(z) - x.dot(phi(z, y)))
                col += coords(phi(x, y.dot(z)) - phi(x, y).dot(z) - y.dot(phi(x, z)))
        cols.append(col)
    return cols


def nullity(cols):
    rows = [list(r) for r in zip(*cols)]
    rows = [r for r in rows if any(r)]
    uniq = sorted(set(tuple(r) for r in rows))
    if not uniq:
        return len(cols)
    dm = DomainMatrix([[QQ(v) for v in r] for r in uniq], (len(uniq), len(cols)), QQ)
    return len(cols) - dm.rank()


if __name__ == "__main__":
    cases = {
        "T2": (2, lambda p, q: p <= q),
        "T3": (3, lambda p, q: p <= q),
    }
    for name, (n, allowed) in cases.items():
        basis = matrix_unit_basis(n, allowed)
        for law in ("lie-bider", "assoc-bider", "lie-deriv-1", "lie-deriv-2"):
            print(name, law, nullity(law_columns(n, basis, law)))
        sys.stdout.flush()
