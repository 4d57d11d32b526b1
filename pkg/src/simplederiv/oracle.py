"""Bounded-degree search for Darboux polynomials.

Independent of the classifier: it only sees the derivation.  An empty result
means "no Darboux element within these bounds", which is the expected answer
for a simple derivation.

Candidates ``f`` range over the span of x^i y^j with i <= max_deg_x and
j <= max_deg_y.  Two eigenvalue shapes are supported:

* ``zero-lambda``: the exact kernel of f -> d(f), constants removed.
* ``single-monomial-lambda``: d(f) = b * x^p y^q * f for a rational b != 0.
  Writing the system as A f = b B f, where B multiplies by x^p y^q, the rows
  outside the image of B give b-free constraints with kernel K.  On K the
  remaining rows read (N - b I) c = 0 for a square N, so every admissible b
  is a rational root of the characteristic polynomial of N.  Each such b is
  then solved exactly on the full system and re-verified.

Basis monomials are ordered graded-lexicographically: by total degree, then
by x-exponent, both ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .deriv import DarbouxCertificate, Derivation, apply, darboux_certificate
from .linalg import charpoly, kernel_basis, nullspace, rational_roots
from .qpoly import NEG_INF, BPoly, Monomial

__all__ = [
    "MODES",
    "SearchConfig",
    "darboux_search",
    "lambda_degree_bounds",
    "monomial_basis",
    "normalize_monic",
]

MODES = ("zero-lambda", "single-monomial-lambda", "both")


@dataclass(frozen=True)
class SearchConfig:
    max_deg_x: int
    max_deg_y: int
    lambda_bound_x: Optional[int] = None
    lambda_bound_y: Optional[int] = None
    mode: str = "both"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        for v in (self.max_deg_x, self.max_deg_y, self.lambda_bound_x, self.lambda_bound_y):
            if v is not None and v < 0:
                raise ValueError("degree bounds must be non-negative")


def lambda_degree_bounds(d: Derivation) -> Tuple[int, int]:
    """Componentwise degree bounds on any eigenvalue of d.

    deg_x d(f) <= deg_x f + max(deg_x dx - 1, deg_x dy), and likewise in y,
    while deg d(f) = deg f + deg lambda.
    """
    if d.is_zero():
        raise ValueError("the zero derivation has no eigenvalue bounds")

    def bound(dec, same):
        cands = [0]
        if dec != NEG_INF:
            cands.append(dec - 1)
        if same != NEG_INF:
            cands.append(same)
        return max(cands)

    return bound(d.dx.deg_x, d.dy.deg_x), bound(d.dy.deg_y, d.dx.deg_y)


def monomial_basis(max_x: int, max_y: int) -> List[Monomial]:
    mons = [(i, j) for i in range(max_x + 1) for j in range(max_y + 1)]
    mons.sort(key=lambda m: (m[0] + m[1], m[0]))
    return mons


def normalize_monic(f: BPoly) -> BPoly:
    """Scale f so its lex-leading coefficient is 1."""
    _, c = f.leading_term()
    return f * (1 / c)


def _vector_to_poly(vec: Sequence[Fraction], basis: Sequence[Monomial]) -> BPoly:
    return BPoly({m: v for m, v in zip(basis, vec) if v})


def _columns(polys: Sequence[BPoly]) -> Tuple[List[Monomial], Dict[Monomial, int]]:
    rows = sorted({m for p in polys for m in p.monomials()}, key=lambda m: (m[0] + m[1], m[0]))
    return rows, {m: k for k, m in enumerate(rows)}


def _matrix(polys: Sequence[BPoly], index: Dict[Monomial, int], nrows: int):
    mat = [[Fraction(0)] * len(polys) for _ in range(nrows)]
    for col, p in enumerate(polys):
        for m, v in p.terms.items():
            mat[index[m]][col] = v
    return mat


def _zero_lambda(d: Derivation, basis: List[Monomial]) -> List[DarbouxCertificate]:
    basis = [m for m in basis if m != (0, 0)]
    images = [apply(d, BPoly.monomial(i, j)) for i, j in basis]
    rows, index = _columns(images)
    mat = _matrix(images, index, len(rows))
    out = []
    for vec in nullspace(mat, len(basis)):
        f = _vector_to_poly(vec, basis)
        if not f.is_constant():
            out.append(DarbouxCertificate(f, BPoly()))
    return out


def _monomial_lambda(
    d: Derivation, basis: List[Monomial], shift: Monomial
) -> List[DarbouxCertificate]:
    p, q = shift
    images = [apply(d, BPoly.monomial(i, j)) for i, j in basis]
    shifted = [(i + p, j + q) for i, j in basis]
    rows, index = _columns(images + [BPoly.monomial(*m) for m in shifted])
    a_mat = _matrix(images, index, len(rows))
    n = len(basis)
    shifted_set = set(shifted)
    outside = [a_mat[index[m]] for m in rows if m not in shifted_set]
    # a_sq[k] is the row of A at the image of basis[k] under the shift, so B restricted there is I
    a_sq = [a_mat[index[m]] for m in shifted]

    if outside:
        kernel, free_cols = kernel_basis(outside, n)
    else:
        kernel = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
        free_cols = list(range(n))
    if not kernel:
        return []
    ak = [[sum(row[i] * vec[i] for i in range(n) if vec[i]) for vec in kernel] for row in a_sq]
    reduced = [ak[c] for c in free_cols]

    out = []
    for b in rational_roots(charpoly(reduced)):
        if not b:
            continue
        pencil = [list(r) for r in outside]
        for k, row in enumerate(a_sq):
            r = list(row)
            r[k] -= b
            pencil.append(r)
        lam = BPoly.monomial(p, q, b)
        for vec in nullspace(pencil, n):
            f = _vector_to_poly(vec, basis)
            if f.is_constant():
                continue
            out.append(DarbouxCertificate(f, lam))
    return out


def darboux_search(d: Derivation, cfg: SearchConfig) -> List[DarbouxCertificate]:
    """All Darboux certificates found within ``cfg``, monic, deduplicated, sorted."""
    basis = monomial_basis(cfg.max_deg_x, cfg.max_deg_y)
    found: List[DarbouxCertificate] = []
    if cfg.mode in ("zero-lambda", "both"):
        found.extend(_zero_lambda(d, basis))
    if cfg.mode in ("single-monomial-lambda", "both") and not d.is_zero():
        lx, ly = lambda_degree_bounds(d)
        if cfg.lambda_bound_x is not None:
            lx = min(lx, cfg.lambda_bound_x)
        if cfg.lambda_bound_y is not None:
            ly = min(ly, cfg.lambda_bound_y)
        for shift in monomial_basis(lx, ly):
            found.extend(_monomial_lambda(d, basis, shift))

    seen = set()
    result = []
    for cert in found:
        f = normalize_monic(cert.f)
        checked = darboux_certificate(d, f)
        if checked is None or checked.lam != cert.lam:
            raise AssertionError(f"search produced an invalid certificate for {f}")
        key = (f, checked.lam)
        if key not in seen:
            seen.add(key)
            result.append(checked)
    result.sort(key=lambda c: (sorted(c.lam.terms.items()), sorted(c.f.terms.items())))
    return result
