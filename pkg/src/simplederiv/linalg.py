"""Dense exact linear algebra over Q: nullspaces, characteristic polynomials, rational roots."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence

from sympy import divisors

Matrix = List[List[Fraction]]

__all__ = ["rref", "nullspace", "kernel_basis", "charpoly", "rational_roots", "poly_eval"]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        row = m[r] = [v * inv for v in m[r]]
        nz = [(k, v) for k, v in enumerate(row) if v]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    for k, v in nz:
                        mi[k] -= f * v
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of {v : rows * v = 0}, one vector per free column, in column order."""
    return kernel_basis(rows, ncols)[0]


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Like :func:`nullspace` but also returns the free columns.

    Vector k has a 1 at free column k and 0 at every other free column.
    """
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis, [c for c in range(ncols) if c not in pivset]


def charpoly(a: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """Coefficients (constant first) of det(b*I - a), via Hessenberg reduction."""
    n = len(a)
    h = [[Fraction(v) for v in row] for row in a]
    for m in range(1, n - 1):
        i = next((k for k in range(m, n) if h[k][m - 1]), None)
        if i is None:
            continue
        if i != m:
            h[i], h[m] = h[m], h[i]
            for row in h:
                row[i], row[m] = row[m], row[i]
        for j in range(m + 1, n):
            if h[j][m - 1]:
                u = h[j][m - 1] / h[m][m - 1]
                hj, hm = h[j], h[m]
                for k in range(n):
                    hj[k] -= u * hm[k]
                for row in h:
                    row[m] += u * row[j]
    # p[k] is the charpoly of the leading k x k block
    p = [[Fraction(1)]]
    for k in range(1, n + 1):
        cur = _sub(_shift(p[k - 1]), _scale(p[k - 1], h[k - 1][k - 1]))
        prod = Fraction(1)
        for i in range(1, k):
            prod *= h[k - i][k - i - 1]
            if not prod:
                break
            cur = _sub(cur, _scale(p[k - i - 1], prod * h[k - i - 1][k - 1]))
        p.append(cur)
    return p[n]


def _shift(p):
    return [Fraction(0)] + list(p)


def _scale(p, c):
    return [v * c for v in p]


def _sub(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Distinct rational roots, ascending, by the rational root theorem."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        if coeffs:
            return []
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    k = 0
    while not coeffs[k]:
        k += 1
    if k:
        roots.append(Fraction(0))
        coeffs = coeffs[k:]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if len(ints) > 1:
        for p in divisors(abs(ints[0])):
            for q in divisors(abs(ints[-1])):
                if gcd(p, q) != 1:
                    continue
                for sp in (p, -p):
                    if _scaled_eval(ints, sp, q) == 0:
                        roots.append(Fraction(sp, q))
    return sorted(set(roots))


def _scaled_eval(ints: Sequence[int], p: int, q: int) -> int:
    """q^n * P(p/q) in integer arithmetic, n = deg P."""
    acc = ints[-1]
    qk = 1
    for c in reversed(ints[:-1]):
        qk *= q
        acc = acc * p + c * qk
    return acc
