"""Derivations of Q[x, y], Darboux certificates, stable ideals, scaling conjugation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .qpoly import BPoly, Scalar, UPoly, X, Y, exact_div, partial_x, partial_y, substitute, upoly_divmod

__all__ = [
    "Derivation",
    "ScalingAut",
    "DarbouxCertificate",
    "apply",
    "darboux_certificate",
    "ideal_stable_xy",
    "ideal_stable_uy",
    "conjugate",
]


@dataclass(frozen=True)
class Derivation:
    """The derivation sending x to ``dx`` and y to ``dy``."""

    dx: BPoly
    dy: BPoly

    def __post_init__(self):
        object.__setattr__(self, "dx", BPoly.coerce(self.dx))
        object.__setattr__(self, "dy", BPoly.coerce(self.dy))

    def __call__(self, f) -> BPoly:
        return apply(self, f)

    def __mul__(self, c: Scalar) -> "Derivation":
        return Derivation(self.dx * c, self.dy * c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.dx.is_zero() and self.dy.is_zero()


@dataclass(frozen=True)
class ScalingAut:
    """The automorphism x -> ax*x, y -> by*y."""

    ax: Fraction
    by: Fraction

    def __post_init__(self):
        ax, by = Fraction(self.ax), Fraction(self.by)
        if not ax or not by:
            raise ValueError("scaling factors must be nonzero")
        object.__setattr__(self, "ax", ax)
        object.__setattr__(self, "by", by)

    def __call__(self, f: BPoly) -> BPoly:
        return substitute(f, X * self.ax, Y * self.by)

    def inverse(self) -> "ScalingAut":
        return ScalingAut(1 / self.ax, 1 / self.by)

    def then(self, other: "ScalingAut") -> "ScalingAut":
        """``other`` after ``self``; for diagonal scalings the factors multiply."""
        return ScalingAut(self.ax * other.ax, self.by * other.by)


IDENTITY = ScalingAut(1, 1)


@dataclass(frozen=True)
class DarbouxCertificate:
    f: BPoly
    lam: BPoly

    def check(self, d: Derivation) -> bool:
        return not self.f.is_constant() and apply(d, self.f) == self.lam * self.f


def apply(d: Derivation, f) -> BPoly:
    f = BPoly.coerce(f)
    return d.dx * partial_x(f) + d.dy * partial_y(f)


def darboux_certificate(d: Derivation, f: BPoly) -> Optional[DarbouxCertificate]:
    """Return (f, lambda) with d(f) = lambda*f, or None if f is not Darboux for d."""
    f = BPoly.coerce(f)
    if f.is_constant():
        raise ValueError("a Darboux element must be a non-constant polynomial")
    lam = exact_div(apply(d, f), f)
    if lam is None:
        return None
    return DarbouxCertificate(f, lam)


def ideal_stable_xy(d: Derivation) -> bool:
    """Whether d maps the ideal (x, y) into itself."""
    return not d.dx.constant_term() and not d.dy.constant_term()


def _in_uy_ideal(g: BPoly, u: UPoly) -> bool:
    return upoly_divmod(g.at_y_zero(), u)[1].is_zero()


def ideal_stable_uy(d: Derivation, u: UPoly) -> bool:
    """Whether d maps the ideal (u(x), y) into itself."""
    if u.is_zero():
        raise ValueError("u must be nonzero")
    return _in_uy_ideal(apply(d, u.to_bpoly()), u) and _in_uy_ideal(d.dy, u)


def conjugate(d: Derivation, theta: ScalingAut) -> Derivation:
    """theta . d . theta^-1, i.e. the derivation e with e(theta f) = theta(d f)."""
    return Derivation(theta(d.dx) * (1 / theta.ax), theta(d.dy) * (1 / theta.by))
