"""Simplicity of y^r d/dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) d/dy over Q.

``classify`` applies the four necessary-and-sufficient conditions in order
and, for a non-simple derivation, attaches an explicit witness for the first
condition that fails.  Simple verdicts name the family whose simplicity
result covers the instance.

Condition names used in rule traces:

``nonzero-coefficients``  c1 != 0 and c2 != 0
``distinct-x-exponents``  t2 < t1
``r-positive-shape``      r > 0 implies t2 = s2 = 0 and s1 > 0
``r-zero-shape``          r = 0 implies s1 + s2 > 0 and s1 * s2 = 0
``shamsuddin-criterion``  r = s1 = 0, s2 = 1 implies (t2 + 1) does not divide (t1 - t2)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .deriv import (
    Derivation,
    ScalingAut,
    darboux_certificate,
    ideal_stable_uy,
    ideal_stable_xy,
)
from .exprio import format_poly, format_rational, format_upoly
from .pfrak import PfrakTrace, pfrak, replay_trace
from .qpoly import BPoly, UPoly, Y

__all__ = [
    "SIMPLE",
    "NOT_SIMPLE",
    "BinomialDerivationSpec",
    "NormalizedSpec",
    "DarbouxElement",
    "StableIdealXY",
    "StableIdealUY",
    "CriterionOnly",
    "Verdict",
    "normalize",
    "classify",
    "classify_degenerate",
    "decide",
    "shamsuddin_simple",
    "scaling_relation",
    "verify_witness",
]

SIMPLE = "Simple"
NOT_SIMPLE = "NotSimple"

# Rule names for the family covering a simple verdict.
RULE_Y_POWER = "simple:y-power-family"            # y^r dx + (c1 x^t y^s + c2) dy, r > 0
RULE_MIXED = "simple:x-power-mixed-family"        # dx + x^u (c1 x^t y^s + c2) dy
RULE_SHAMSUDDIN = "simple:shamsuddin-criterion"   # dx + (c2 x^t2 y + c1 x^t1) dy, p != 0
RULE_PURE = "simple:x-power-pure-family"          # dx + x^u (c1 x^t + c2 y^s) dy, s >= 2


@dataclass(frozen=True)
class BinomialDerivationSpec:
    r: int
    t1: int
    s1: int
    t2: int
    s2: int
    c1: Fraction
    c2: Fraction
    degenerate: bool = False

    def __post_init__(self):
        for name in ("r", "t1", "s1", "t2", "s2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))

    @property
    def params(self) -> Tuple[int, int, int, int, int, Fraction, Fraction]:
        return (self.r, self.t1, self.s1, self.t2, self.s2, self.c1, self.c2)

    def derivation(self) -> Derivation:
        dy = BPoly.monomial(self.t1, self.s1, self.c1)
        if not self.degenerate:
            dy = dy + BPoly.monomial(self.t2, self.s2, self.c2)
        return Derivation(BPoly.monomial(0, self.r), dy)

    def swapped(self) -> "BinomialDerivationSpec":
        return BinomialDerivationSpec(
            self.r, self.t2, self.s2, self.t1, self.s1, self.c2, self.c1, self.degenerate
        )

    def is_normalized(self) -> bool:
        if self.degenerate:
            return not self.c2 and (self.t2, self.s2) == (self.t1, self.s1)
        return (self.t2, self.s2) < (self.t1, self.s1)


# --- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class DarbouxElement:
    f: BPoly
    lam: BPoly
    kind = "DarbouxElement"


@dataclass(frozen=True)
class StableIdealXY:
    kind = "StableIdealXY"


@dataclass(frozen=True)
class StableIdealUY:
    u: UPoly
    kind = "StableIdealUY"


@dataclass(frozen=True)
class CriterionOnly:
    trace: PfrakTrace
    kind = "CriterionOnly"


Witness = Union[DarbouxElement, StableIdealXY, StableIdealUY, CriterionOnly]


@dataclass(frozen=True)
class Verdict:
    outcome: str
    rule: str
    rule_trace: Tuple[str, ...] = ()
    witness: Optional[Witness] = None
    spec: Optional[BinomialDerivationSpec] = field(default=None, compare=False)

    @property
    def simple(self) -> bool:
        return self.outcome == SIMPLE

    def witness_text(self) -> Tuple[str, str, str]:
        """(kind, f-text, lambda-text) as used in CSV rows."""
        w = self.witness
        if w is None:
            return "", "", ""
        if isinstance(w, DarbouxElement):
            return w.kind, format_poly(w.f), format_poly(w.lam)
        if isinstance(w, StableIdealXY):
            return w.kind, "x; y", ""
        if isinstance(w, StableIdealUY):
            return w.kind, f"{format_upoly(w.u)}; y", ""
        return w.kind, "", ""

    def to_dict(self) -> dict:
        out = {
            "outcome": self.outcome,
            "rule": self.rule,
            "rule_trace": list(self.rule_trace),
            "witness": None,
        }
        if self.spec is not None:
            s = self.spec
            out["spec"] = {
                "r": s.r, "t1": s.t1, "s1": s.s1, "t2": s.t2, "s2": s.s2,
                "c1": format_rational(s.c1), "c2": format_rational(s.c2),
                "degenerate": s.degenerate,
            }
        w = self.witness
        if isinstance(w, DarbouxElement):
            out["witness"] = {"kind": w.kind, "f": format_poly(w.f), "lambda": format_poly(w.lam)}
        elif isinstance(w, StableIdealXY):
            out["witness"] = {"kind": w.kind, "generators": ["x", "y"]}
        elif isinstance(w, StableIdealUY):
            out["witness"] = {"kind": w.kind, "generators": [format_upoly(w.u), "y"]}
        elif isinstance(w, CriterionOnly):
            out["witness"] = {
                "kind": w.kind,
                "a": format_upoly(w.trace.a),
                "b": format_upoly(w.trace.b),
                "p": format_upoly(w.trace.result),
                "steps": [[format_upoly(q), format_upoly(r)] for q, r in w.trace.steps],
            }
        return out


# --- normalization -----------------------------------------------------------


def normalize(raw: BinomialDerivationSpec) -> BinomialDerivationSpec:
    """Order the terms so (t2, s2) < (t1, s1); merge equal exponent pairs."""
    if raw.degenerate:
        return raw
    if (raw.t1, raw.s1) == (raw.t2, raw.s2):
        return BinomialDerivationSpec(
            raw.r, raw.t1, raw.s1, raw.t1, raw.s1, raw.c1 + raw.c2, Fraction(0), degenerate=True
        )
    if (raw.t1, raw.s1) < (raw.t2, raw.s2):
        return raw.swapped()
    return raw


def _darboux(f: BPoly, lam: BPoly) -> DarbouxElement:
    return DarbouxElement(f, lam)


def _single_term_witness(r: int, t: int, s: int, c: Fraction) -> DarbouxElement:
    """Witness for d = y^r dx + c x^t y^s dy, where c may be zero."""
    if s > 0:
        return _darboux(Y, BPoly.monomial(t, s - 1, c))
    # (t+1) y^(r+1) - c (r+1) x^(t+1) is a first integral
    f = BPoly.monomial(0, r + 1, t + 1) - BPoly.monomial(t + 1, 0, c * (r + 1))
    return _darboux(f, BPoly())


def classify_degenerate(r: int, t: int, s: int, c) -> Verdict:
    """Verdict for the single-term derivation y^r dx + c x^t y^s dy (never simple)."""
    c = Fraction(c)
    w = _darboux(Y, BPoly()) if not c else _single_term_witness(r, t, s, c)
    detail = "c = 0" if not c else ("s > 0" if s > 0 else "s = 0")
    return Verdict(NOT_SIMPLE, "degenerate", (f"degenerate: single term, {detail}",), w)


def classify(spec: BinomialDerivationSpec) -> Verdict:
    if not spec.is_normalized():
        raise ValueError("classify needs a normalized spec; call normalize() first")
    if spec.degenerate:
        v = classify_degenerate(spec.r, spec.t1, spec.s1, spec.c1)
        return replace(v, spec=spec)
    v = _classify(spec)
    return replace(v, spec=spec)


def _classify(spec: BinomialDerivationSpec) -> Verdict:
    r, t1, s1, t2, s2, c1, c2 = spec.params
    trace: List[str] = []

    def no(rule: str, witness: Witness) -> Verdict:
        trace.append(f"{rule}: violated")
        return Verdict(NOT_SIMPLE, rule, tuple(trace), witness)

    # nonzero coefficients; the surviving term alone is a single-term derivation
    if not c1:
        return no("nonzero-coefficients:c1=0", _single_term_witness(r, t2, s2, c2))
    if not c2:
        return no("nonzero-coefficients:c2=0", _single_term_witness(r, t1, s1, c1))
    trace.append("nonzero-coefficients: holds")

    if t1 == t2:
        f = BPoly.monomial(0, s1, c1) + BPoly.monomial(0, s2, c2)
        lam = BPoly.monomial(t1, s1 - 1, c1 * s1) if s1 else BPoly()
        if s2:
            lam = lam + BPoly.monomial(t1, s2 - 1, c2 * s2)
        return no("distinct-x-exponents:t1=t2", _darboux(f, lam))
    trace.append("distinct-x-exponents: holds")

    if r > 0:
        if t2 > 0:
            return no("r-positive-shape:t2>0", StableIdealXY())
        if s2 > 0:
            return no("r-positive-shape:s2>0", StableIdealXY())
        if s1 == 0:
            return no("r-positive-shape:s1=0", StableIdealUY(UPoly({t1: c1, 0: c2})))
        trace.append("r-positive-shape: holds")
        trace.append("r-zero-shape: vacuous (r > 0)")
        trace.append("shamsuddin-criterion: vacuous (r > 0)")
        trace.append(RULE_Y_POWER)
        return Verdict(SIMPLE, RULE_Y_POWER, tuple(trace))
    trace.append("r-positive-shape: vacuous (r = 0)")

    if s1 + s2 == 0:
        f = (
            BPoly.monomial(t1 + 1, 0, c1 * (t2 + 1))
            + BPoly.monomial(t2 + 1, 0, c2 * (t1 + 1))
            - BPoly.monomial(0, 1, (t1 + 1) * (t2 + 1))
        )
        return no("r-zero-shape:s1+s2=0", _darboux(f, BPoly()))
    if s1 * s2 != 0:
        lam = BPoly.monomial(t1, s1 - 1, c1) + BPoly.monomial(t2, s2 - 1, c2)
        return no("r-zero-shape:s1*s2!=0", _darboux(Y, lam))
    trace.append("r-zero-shape: holds")

    if s2 == 0:
        trace.append("shamsuddin-criterion: vacuous (s2 = 0)")
        trace.append(RULE_MIXED)
        return Verdict(SIMPLE, RULE_MIXED, tuple(trace))

    if s2 == 1:
        # here s1 = 0: dx + (c2 x^t2 y + c1 x^t1) dy is a Shamsuddin derivation
        ok, ptrace = shamsuddin_simple(UPoly.monomial(t2, c2), UPoly.monomial(t1, c1))
        if not ok:
            return no("shamsuddin-criterion:p=0", CriterionOnly(ptrace))
        trace.append("shamsuddin-criterion: holds")
        trace.append(RULE_SHAMSUDDIN)
        return Verdict(SIMPLE, RULE_SHAMSUDDIN, tuple(trace))

    trace.append("shamsuddin-criterion: vacuous (s2 >= 2)")
    trace.append(RULE_PURE)
    return Verdict(SIMPLE, RULE_PURE, tuple(trace))


def decide(raw: BinomialDerivationSpec, hunt: bool = False) -> Verdict:
    """normalize + classify; with ``hunt``, try to upgrade a CriterionOnly witness.

    The outcome never depends on the hunt, only the witness does.
    """
    v = classify(normalize(raw))
    if hunt and isinstance(v.witness, CriterionOnly):
        v = upgrade_criterion_witness(v)
    return v


def upgrade_criterion_witness(v: Verdict) -> Verdict:
    from .oracle import SearchConfig, darboux_search

    s = v.spec
    cfg = SearchConfig(max_deg_x=s.t1 - s.t2, max_deg_y=1, mode="single-monomial-lambda")
    for cert in darboux_search(s.derivation(), cfg):
        if cert.f.deg_y == 1:
            note = f"oracle: Darboux element found with bounds ({cfg.max_deg_x}, {cfg.max_deg_y})"
            return replace(v, witness=DarbouxElement(cert.f, cert.lam), rule_trace=v.rule_trace + (note,))
    return v


def shamsuddin_simple(a: UPoly, b: UPoly) -> Tuple[bool, PfrakTrace]:
    """Simplicity of dx + (a y + b) dy: simple iff p(a, b) != 0."""
    if a.is_zero():
        raise ValueError("the coefficient a of y must be nonzero")
    p, trace = pfrak(a, b)
    return (not p.is_zero()), trace


# --- verification -------------------------------------------------------------


def verify_witness(spec: BinomialDerivationSpec, witness: Witness) -> bool:
    """Machine-check a non-simplicity witness against the derivation of ``spec``."""
    d = spec.derivation()
    if isinstance(witness, DarbouxElement):
        if witness.f.is_constant():
            return False
        cert = darboux_certificate(d, witness.f)
        return cert is not None and cert.lam == witness.lam
    if isinstance(witness, StableIdealXY):
        return ideal_stable_xy(d)
    if isinstance(witness, StableIdealUY):
        # a proper ideal needs u of positive degree
        return witness.u.degree >= 1 and ideal_stable_uy(d, witness.u)
    if isinstance(witness, CriterionOnly):
        tr = witness.trace
        expected_a = UPoly.monomial(spec.t2, spec.c2)
        expected_b = UPoly.monomial(spec.t1, spec.c1)
        return (
            spec.r == 0 and spec.s1 == 0 and spec.s2 == 1
            and tr.a == expected_a and tr.b == expected_b
            and replay_trace(tr) and tr.result.is_zero()
            and pfrak(tr.a, tr.b)[0].is_zero()
        )
    raise TypeError(f"unknown witness type {type(witness).__name__}")


# --- scaling normalization ----------------------------------------------------

MIXED = "mixed"   # dx + x^u (c1 x^t y^s + c2) dy
PURE = "pure"     # dx + x^u (c1 x^t + c2 y^s) dy, s >= 2


@dataclass(frozen=True)
class NormalizedSpec:
    """Exponent data and the power relation alpha^v = target for the unit-coefficient reduction."""

    family: str
    u: int
    t: int
    s: int
    v: int
    target: Fraction
    c1: Fraction
    c2: Fraction

    def scaling_for(self, alpha) -> ScalingAut:
        """The conjugating scaling for a given alpha; alpha^v must equal the target."""
        alpha = Fraction(alpha)
        if alpha**self.v != self.target:
            raise ValueError(f"alpha = {alpha} does not satisfy alpha^{self.v} = {self.target}")
        if self.family == MIXED:
            return ScalingAut(alpha, self.c2 * alpha ** (self.u + 1))
        return ScalingAut(alpha, self.c1 * alpha ** (self.u + self.t + 1))

    def unit_derivation(self) -> Derivation:
        xu = BPoly.monomial(self.u, 0)
        if self.family == MIXED:
            return Derivation(BPoly.const(1), xu * (BPoly.monomial(self.t, self.s) + 1))
        return Derivation(BPoly.const(1), xu * (BPoly.monomial(self.t, 0) + BPoly.monomial(0, self.s)))


def scaling_relation(spec: BinomialDerivationSpec) -> NormalizedSpec:
    """Power relation reducing the two r = 0 families to unit coefficients.

    Conjugating by x -> alpha x, y -> beta y turns the derivation into
    alpha^-1 times its unit-coefficient version exactly when

    * mixed family (s2 = 0): beta = c2 alpha^(u+1), alpha^v = c1^-1 c2^(1-s),
      v = t + (u+1) s;
    * pure family (s1 = 0, s2 >= 2): beta = c1 alpha^(u+t+1),
      alpha^v = c2^-1 c1^(1-s), v = (s-1) t + (u+1) s.
    """
    s0 = normalize(spec)
    r, t1, s1, t2, s2, c1, c2 = s0.params
    if s0.degenerate or r != 0 or not c1 or not c2 or t2 >= t1:
        raise ValueError("spec is not in a scalable family")
    u, t = t2, t1 - t2
    if s2 == 0 and s1 >= 1:
        s = s1
        v = t + (u + 1) * s
        return NormalizedSpec(MIXED, u, t, s, v, (1 / c1) * c2 ** (1 - s), c1, c2)
    if s1 == 0 and s2 >= 2:
        s = s2
        v = (s - 1) * t + (u + 1) * s
        return NormalizedSpec(PURE, u, t, s, v, (1 / c2) * c1 ** (1 - s), c1, c2)
    raise ValueError("spec is not in a scalable family")


def coefficients_for_alpha(family: str, u: int, t: int, s: int, alpha, other) -> BinomialDerivationSpec:
    """A spec of ``family`` whose power relation is realized by the rational ``alpha``.

    ``other`` fixes c2 for the mixed family and c1 for the pure family; the
    remaining coefficient is solved from alpha^v = target.
    """
    alpha, other = Fraction(alpha), Fraction(other)
    if family == MIXED:
        v = t + (u + 1) * s
        c1 = other ** (1 - s) / alpha**v
        return BinomialDerivationSpec(0, u + t, s, u, 0, c1, other)
    if family == PURE:
        v = (s - 1) * t + (u + 1) * s
        c2 = other ** (1 - s) / alpha**v
        return BinomialDerivationSpec(0, u + t, 0, u, s, other, c2)
    raise ValueError(f"unknown family {family!r}")
