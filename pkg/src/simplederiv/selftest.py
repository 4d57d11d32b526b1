"""Self-test suites run by ``simplederiv selftest``.

Every suite enumerates its cases in a fixed order (exhaustive small cases
first, then seeded random ones), so the first failure reported is also the
smallest one found.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from .decider import (
    MIXED,
    PURE,
    BinomialDerivationSpec,
    coefficients_for_alpha,
    decide,
    scaling_relation,
    shamsuddin_simple,
    verify_witness,
)
from .deriv import Derivation, ScalingAut, conjugate
from .exprio import format_rational, format_upoly
from .pfrak import monomial_pfrak_vanishes, pfrak, replay_trace
from .qpoly import BPoly, UPoly

SEED = 20240614


@dataclass
class SuiteResult:
    name: str
    count: int
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def _run(name: str, cases: Iterator[Tuple[str, Callable[[], bool]]]) -> SuiteResult:
    n = 0
    for label, check in cases:
        n += 1
        if not check():
            return SuiteResult(name, n, label)
    return SuiteResult(name, n)


def random_upoly(rng: random.Random, max_deg: int, nonzero: bool = False) -> UPoly:
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = {
            e: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for e in range(deg + 1)
            if rng.random() < 0.7 or e == deg
        }
        u = UPoly(coeffs)
        if u or not nonzero:
            return u


def _pfrak_cases():
    x = UPoly.monomial
    for n in range(9):
        for m in range(9):
            yield (
                f"shift identity n={n} m={m}",
                lambda n=n, m=m: pfrak(x(n), x(m + n + 1))[0] == pfrak(x(n), x(m))[0] * (m + 1),
            )
    for m in range(1, 21):
        for n in range(m):
            yield (
                f"vanishing criterion n={n} m={m}",
                lambda n=n, m=m: pfrak(x(n), x(m))[0].is_zero() == monomial_pfrak_vanishes(n, m),
            )
    rng = random.Random(SEED)
    for k in range(500):
        a = random_upoly(rng, 6, nonzero=True)
        b = random_upoly(rng, 12)
        eps = (Fraction(2), Fraction(-3), Fraction(1, 2))[k % 3]
        label = f"a={format_upoly(a)} b={format_upoly(b)}"

        def check(a=a, b=b, eps=eps):
            p, tr = pfrak(a, b)
            if not (p.degree < a.degree):
                return False
            if pfrak(a, b * eps)[0] != p * eps:
                return False
            if b.degree < a.degree and p != b:
                return False
            return replay_trace(tr)

        yield label, check


def pfrak_suite() -> SuiteResult:
    return _run("pfrak-properties", _pfrak_cases())


COEFFS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def _agreement_cases():
    for t1 in range(13):
        for t2 in range(t1):
            for c1, c2 in itertools.product(COEFFS, repeat=2):
                spec = BinomialDerivationSpec(0, t1, 0, t2, 1, c1, c2)

                def check(spec=spec):
                    v = decide(spec)
                    ok, _ = shamsuddin_simple(
                        UPoly.monomial(spec.t2, spec.c2), UPoly.monomial(spec.t1, spec.c1)
                    )
                    return v.simple == ok

                yield f"t1={t1} t2={t2} c1={format_rational(c1)} c2={format_rational(c2)}", check


def agreement_suite() -> SuiteResult:
    return _run("shamsuddin-agreement", _agreement_cases())


ALPHAS = (Fraction(2), Fraction(3), Fraction(1, 2))


def conjugation_instances():
    """(label, dbar, theta, alpha, d) with conjugate(dbar, theta) expected to be d / alpha."""
    for alpha in ALPHAS:
        for family in (MIXED, PURE):
            for u, t, s in itertools.product(range(3), range(1, 3), range(1, 4) if family == MIXED else range(2, 4)):
                other = Fraction(3, 2) if (u + t + s) % 2 else Fraction(1)
                spec = coefficients_for_alpha(family, u, t, s, alpha, other)
                rel = scaling_relation(spec)
                yield (
                    f"{family} u={u} t={t} s={s} alpha={format_rational(alpha)}",
                    spec.derivation(),
                    rel.scaling_for(alpha),
                    alpha,
                    rel.unit_derivation(),
                )
        for r, t, s in itertools.product(range(3), range(1, 3), range(1, 3)):
            c1 = 1 / alpha ** (t * (r + 1) + s)
            c2 = Fraction(-2)
            dy = BPoly.monomial(0, r)
            d = Derivation(dy, BPoly.monomial(t, s, c1) + c2)
            dbar = Derivation(dy, BPoly.monomial(t, s) + c2)
            yield (
                f"y-power r={r} t={t} s={s} alpha={format_rational(alpha)}",
                d,
                ScalingAut(alpha ** (r + 1), alpha),
                alpha,
                dbar,
            )


def _conjugation_cases():
    for label, d, theta, alpha, target in conjugation_instances():
        yield label, lambda d=d, theta=theta, alpha=alpha, target=target: (
            conjugate(d, theta) == target * (1 / alpha)
        )


def conjugation_suite() -> SuiteResult:
    return _run("conjugation-identities", _conjugation_cases())


WITNESS_COEFFS = (Fraction(0), Fraction(1), Fraction(-2))


def witness_grid(max_exp: int = 4, coeffs=WITNESS_COEFFS):
    for r, t1, s1, t2, s2 in itertools.product(range(max_exp + 1), repeat=5):
        for c1, c2 in itertools.product(coeffs, repeat=2):
            yield BinomialDerivationSpec(r, t1, s1, t2, s2, c1, c2)


def _witness_cases():
    for spec in witness_grid():
        v = decide(spec)
        if v.simple:
            continue
        yield (
            f"r={spec.r} t1={spec.t1} s1={spec.s1} t2={spec.t2} s2={spec.s2} "
            f"c1={format_rational(spec.c1)} c2={format_rational(spec.c2)}",
            lambda v=v: verify_witness(v.spec, v.witness),
        )


def witness_suite() -> SuiteResult:
    return _run("witness-verification", _witness_cases())


SUITES = (pfrak_suite, agreement_suite, conjugation_suite, witness_suite)


def run_all() -> List[SuiteResult]:
    return [suite() for suite in SUITES]
