from fractions import Fraction

import sympy
from hypothesis import strategies as st

from simplederiv.deriv import Derivation
from simplederiv.qpoly import BPoly, UPoly

SX, SY = sympy.symbols("x y")

rationals = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=6),
)
nonzero_rationals = rationals.filter(bool)


def bpolys(max_deg=6, max_terms=6):
    mono = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(mono, rationals, max_size=max_terms).map(BPoly)


def upolys(max_deg=6, nonzero=False):
    s = st.dictionaries(st.integers(0, max_deg), rationals, max_size=max_deg + 1).map(UPoly)
    return s.filter(bool) if nonzero else s


def derivations(max_deg=4):
    return st.builds(Derivation, bpolys(max_deg, 4), bpolys(max_deg, 4))


def to_sympy(p):
    if isinstance(p, UPoly):
        p = p.to_bpoly()
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * SX**i * SY**j for (i, j), c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), SX, SY)
    return BPoly({m: Fraction(int(c.p), int(c.q)) for m, c in zip(poly.monoms(), poly.coeffs())})
