"""Exact rational scalars and sparse polynomials in x (UPoly) and in x, y (BPoly).

Coefficients are :class:`fractions.Fraction` everywhere; nothing in this
package touches floating point.  Both polynomial classes store only nonzero
coefficients, so structural equality is semantic equality, and both are
immutable once constructed.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

Rat = Fraction
Scalar = Union[int, Fraction]
Monomial = Tuple[int, int]

__all__ = [
    "Rat",
    "NEG_INF",
    "UPoly",
    "BPoly",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "scale",
    "partial_x",
    "partial_y",
    "upoly_divmod",
    "exact_div",
    "substitute",
]


@functools.total_ordering
class _NegInf:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a stray
    ``deg(0) - 1`` raises instead of silently producing a number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NEG_INF")

    def _no_arith(self, *_):
        raise TypeError("no arithmetic on the degree of the zero polynomial")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arith
    __neg__ = __int__ = __index__ = _no_arith


NEG_INF = _NegInf()


def _rat(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction coefficient, got {type(c).__name__}")


class UPoly:
    """Univariate polynomial over Q in the variable x."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[Scalar], None] = None):
        c = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent")
                v = _rat(v)
                if v:
                    c[int(e)] = v
        else:
            for e, v in enumerate(coeffs):
                v = _rat(v)
                if v:
                    c[e] = v
        self._c = c

    @classmethod
    def monomial(cls, n: int, coeff: Scalar = 1) -> "UPoly":
        return cls({n: coeff})

    @classmethod
    def const(cls, c: Scalar) -> "UPoly":
        return cls({0: c})

    def items(self):
        return sorted(self._c.items())

    def coeff(self, n: int) -> Fraction:
        return self._c.get(n, Fraction(0))

    @property
    def degree(self):
        return max(self._c) if self._c else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self._c[max(self._c)] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == UPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"UPoly({dict(self.items())!r})"

    def __add__(self, other):
        other = _as_upoly(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return UPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return UPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _as_upoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, UPoly):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return UPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = UPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return upoly_divmod(self, other)

    def derivative(self) -> "UPoly":
        return UPoly({e - 1: e * v for e, v in self._c.items() if e})

    def __call__(self, value):
        acc = Fraction(0)
        for e in range(self.degree if self._c else -1, -1, -1):
            acc = acc * value + self.coeff(e)
        return acc

    def to_bpoly(self) -> "BPoly":
        return BPoly({(e, 0): v for e, v in self._c.items()})


def _as_upoly(v) -> Optional[UPoly]:
    if isinstance(v, UPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UPoly.const(v)
    return None


def upoly_divmod(b: UPoly, a: UPoly) -> Tuple[UPoly, UPoly]:
    """Return (q, r) with b = q*a + r and deg r < deg a."""
    if a.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    da, lca = a.degree, a.lc
    q = {}
    r = dict(b._c)
    while r:
        dr = max(r)
        if dr < da:
            break
        factor = r[dr] / lca
        shift = dr - da
        q[shift] = factor
        for e, v in a._c.items():
            k = e + shift
            nv = r.get(k, 0) - factor * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    return UPoly(q), UPoly(r)


class BPoly:
    """Sparse polynomial over Q in x and y, keyed by (x-exponent, y-exponent)."""

    __slots__ = ("_t",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        t = {}
        if terms:
            for (i, j), v in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                v = _rat(v)
                if v:
                    t[(int(i), int(j))] = v
        self._t = t

    @classmethod
    def _raw(cls, t: dict) -> "BPoly":
        # t must already be zero-free with Fraction values
        p = object.__new__(cls)
        p._t = t
        return p

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Scalar = 1) -> "BPoly":
        return cls({(i, j): coeff})

    @classmethod
    def const(cls, c: Scalar) -> "BPoly":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, v) -> "BPoly":
        if isinstance(v, BPoly):
            return v
        if isinstance(v, UPoly):
            return v.to_bpoly()
        if isinstance(v, (int, Fraction)):
            return cls.const(v)
        raise TypeError(f"cannot convert {type(v).__name__} to BPoly")

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def monomials(self):
        return self._t.keys()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._t.get((i, j), Fraction(0))

    def __len__(self):
        return len(self._t)

    @property
    def deg_x(self):
        return max(i for i, _ in self._t) if self._t else NEG_INF

    @property
    def deg_y(self):
        return max(j for _, j in self._t) if self._t else NEG_INF

    @property
    def total_degree(self):
        return max(i + j for i, j in self._t) if self._t else NEG_INF

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        """Leading monomial and coefficient in lex order with x > y."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._t)
        return m, self._t[m]

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._t)

    def constant_term(self) -> Fraction:
        return self._t.get((0, 0), Fraction(0))

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, BPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction, UPoly)):
            return self == BPoly.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        return f"BPoly({dict(self.items())!r})"

    def __str__(self):
        from .exprio import format_poly

        return format_poly(self)

    def __add__(self, other):
        try:
            other = BPoly.coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for m, v in other._t.items():
            nv = t.get(m, 0) + v
            if nv:
                t[m] = nv
            else:
                t.pop(m, None)
        return BPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw({m: -v for m, v in self._t.items()})

    def __sub__(self, other):
        try:
            other = BPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        try:
            other = BPoly.coerce(other)
        except TypeError:
            return NotImplemented
        t = {}
        for (i1, j1), v1 in self._t.items():
            for (i2, j2), v2 in other._t.items():
                m = (i1 + i2, j1 + j2)
                t[m] = t.get(m, 0) + v1 * v2
        return BPoly._raw({m: v for m, v in t.items() if v})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, i: int, j: int) -> "BPoly":
        """Multiply by the monomial x^i y^j."""
        return BPoly._raw({(a + i, b + j): v for (a, b), v in self._t.items()})

    def at_y_zero(self) -> UPoly:
        return UPoly({i: v for (i, j), v in self._t.items() if j == 0})

    def to_upoly(self) -> UPoly:
        if any(j for _, j in self._t):
            raise ValueError("polynomial involves y")
        return self.at_y_zero()

    def __call__(self, xv, yv):
        acc = Fraction(0)
        for (i, j), v in self._t.items():
            acc += v * xv**i * yv**j
        return acc


def scale(c: Scalar, f: BPoly) -> BPoly:
    c = _rat(c)
    if not c:
        return ZERO
    return BPoly._raw({m: c * v for m, v in f._t.items()})


def add(f: BPoly, g: BPoly) -> BPoly:
    return f + g


def mul(f: BPoly, g: BPoly) -> BPoly:
    return f * g


def partial_x(f: BPoly) -> BPoly:
    return BPoly._raw({(i - 1, j): i * v for (i, j), v in f._t.items() if i})


def partial_y(f: BPoly) -> BPoly:
    return BPoly._raw({(i, j - 1): j * v for (i, j), v in f._t.items() if j})


def exact_div(g: BPoly, f: BPoly) -> Optional[BPoly]:
    """Return q with g == q*f, or None when f does not divide g.

    Single-divisor division in lex order (x > y).  If f divides g then every
    intermediate remainder is again a multiple of f, whose leading monomial is
    divisible by that of f; so the first non-divisible leading term proves
    non-divisibility.
    """
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (fa, fb), fc = f.leading_term()
    r = dict(g._t)
    q = {}
    ftail = [(m, v) for m, v in f._t.items()]
    while r:
        (ri, rj) = m = max(r)
        if ri < fa or rj < fb:
            return None
        factor = r[m] / fc
        si, sj = ri - fa, rj - fb
        q[(si, sj)] = factor
        for (a, b), v in ftail:
            k = (a + si, b + sj)
            nv = r.get(k, 0) - factor * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    return BPoly._raw(q)


def substitute(f: BPoly, px: BPoly, py: BPoly) -> BPoly:
    """Evaluate f(px, py) by nested Horner schemes (outer in x, inner in y)."""
    px, py = BPoly.coerce(px), BPoly.coerce(py)
    if f.is_zero():
        return ZERO
    rows = {}
    for (i, j), v in f._t.items():
        rows.setdefault(i, {})[j] = v

    def horner_y(coeffs):
        acc = ZERO
        for j in range(max(coeffs), -1, -1):
            acc = acc * py
            c = coeffs.get(j)
            if c:
                acc = acc + c
        return acc

    acc = ZERO
    for i in range(max(rows), -1, -1):
        acc = acc * px
        if i in rows:
            acc = acc + horner_y(rows[i])
    return acc


ZERO = BPoly()
ONE = BPoly.const(1)
X = BPoly.monomial(1, 0)
Y = BPoly.monomial(0, 1)
