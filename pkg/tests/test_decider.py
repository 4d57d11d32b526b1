import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplederiv.decider import (
    MIXED,
    PURE,
    NOT_SIMPLE,
    SIMPLE,
    BinomialDerivationSpec,
    CriterionOnly,
    DarbouxElement,
    StableIdealUY,
    StableIdealXY,
    classify,
    classify_degenerate,
    coefficients_for_alpha,
    decide,
    normalize,
    scaling_relation,
    shamsuddin_simple,
    verify_witness,
)
from simplederiv.deriv import conjugate
from simplederiv.exprio import parse_poly as P
from simplederiv.qpoly import UPoly, X, Y

F = Fraction


def spec(*args):
    return BinomialDerivationSpec(*args)


def test_classify_examples():
    assert decide(spec(1, 1, 1, 0, 0, 1, 1)).outcome == SIMPLE

    v = decide(spec(0, 2, 0, 0, 0, 1, 1))
    assert v.outcome == NOT_SIMPLE
    assert v.witness == DarbouxElement(P("x^3 + 3*x - 3*y"), P("0"))

    v = decide(spec(0, 3, 0, 1, 1, 1, 1))
    assert v.outcome == NOT_SIMPLE and isinstance(v.witness, CriterionOnly)
    assert v.witness.trace.result.is_zero()

    v = decide(spec(0, 2, 0, 1, 1, 1, 1))
    assert v.outcome == SIMPLE and v.rule == "simple:shamsuddin-criterion"

    # t1 = t2 here, so the first failing condition is distinct-x-exponents;
    # (x, y) is stable as well
    v = decide(spec(2, 1, 1, 1, 0, 1, 1))
    assert v.outcome == NOT_SIMPLE
    assert v.witness == DarbouxElement(P("y + 1"), P("x"))
    assert verify_witness(v.spec, StableIdealXY())

    v = decide(spec(0, 1, 1, 0, 0, 2, 3))
    assert v.outcome == SIMPLE and v.rule == "simple:x-power-mixed-family"


def test_stable_ideal_xy_example():
    # t1 = t2 is caught first, so use t2 < t1 with t2 > 0
    v = decide(spec(2, 2, 1, 1, 0, 1, 1))
    assert v.witness == StableIdealXY()
    assert v.rule == "r-positive-shape:t2>0"


def test_stable_ideal_uy_example():
    v = decide(spec(1, 2, 0, 0, 0, 1, 1))
    assert v.witness == StableIdealUY(UPoly({2: 1, 0: 1}))
    assert verify_witness(v.spec, v.witness)


@pytest.mark.parametrize(
    "params, rule",
    [
        ((0, 3, 0, 1, 2, 1, 1), "simple:x-power-pure-family"),
        ((0, 1, 0, 0, 2, 1, 1), "simple:x-power-pure-family"),
        ((0, 2, 1, 1, 0, 1, 1), "simple:x-power-mixed-family"),
        ((3, 2, 4, 0, 0, F(1, 2), -7), "simple:y-power-family"),
        ((0, 1, 1, 0, 1, 1, 1), "r-zero-shape:s1*s2!=0"),
        ((1, 1, 1, 0, 1, 1, 1), "r-positive-shape:s2>0"),
        ((0, 1, 1, 0, 0, 0, 1), "nonzero-coefficients:c1=0"),
        ((0, 1, 1, 0, 0, 1, 0), "nonzero-coefficients:c2=0"),
        ((0, 2, 3, 2, 1, 1, 1), "distinct-x-exponents:t1=t2"),
    ],
)
def test_rules(params, rule):
    v = decide(spec(*params))
    assert v.rule == rule
    assert v.rule_trace[-1].startswith(rule)
    if not v.simple:
        assert verify_witness(v.spec, v.witness)


def test_zero_coefficient_witnesses():
    v = decide(spec(0, 3, 1, 1, 2, 0, 5))
    assert v.witness == DarbouxElement(Y, P("5*x*y"))
    v = decide(spec(2, 3, 1, 1, 0, 0, 5))
    assert v.witness == DarbouxElement(P("2*y^3 - 15*x^2"), P("0"))
    # mirrored formulas for c2 = 0
    v = decide(spec(2, 3, 0, 1, 4, 5, 0))
    assert v.witness == DarbouxElement(P("4*y^3 - 15*x^4"), P("0"))
    assert verify_witness(v.spec, v.witness)


def test_normalize_examples():
    assert normalize(spec(0, 0, 0, 2, 0, 1, 1)) == spec(0, 2, 0, 0, 0, 1, 1)
    merged = normalize(spec(0, 1, 1, 1, 1, 1, -1))
    assert merged.degenerate and merged.c1 == 0
    s = spec(0, 2, 0, 0, 0, 1, 1)
    assert normalize(s) == s
    assert normalize(spec(0, 2, 0, 2, 3, 1, 4)) == spec(0, 2, 3, 2, 0, 4, 1)


def test_classify_requires_normalized():
    with pytest.raises(ValueError):
        classify(spec(0, 0, 0, 2, 0, 1, 1))


def test_classify_degenerate_examples():
    for r in range(3):
        v = classify_degenerate(r, 2, 3, 0)
        assert v.outcome == NOT_SIMPLE and v.witness == DarbouxElement(Y, P("0"))
    v = classify_degenerate(0, 1, 0, 1)
    assert v.witness == DarbouxElement(P("2*y - x^2"), P("0"))
    v = classify_degenerate(1, 0, 1, 1)
    assert v.witness == DarbouxElement(Y, P("1"))
    v = decide(spec(1, 0, 1, 0, 1, F(1, 2), F(1, 2)))
    assert v.rule == "degenerate" and verify_witness(v.spec, v.witness)


def test_shamsuddin_simple_examples():
    assert shamsuddin_simple(UPoly.monomial(1), UPoly.monomial(2))[0] is True
    assert shamsuddin_simple(UPoly.monomial(1), UPoly.monomial(3))[0] is False
    assert shamsuddin_simple(UPoly.const(1), UPoly([1, 2, 3]))[0] is False
    with pytest.raises(ValueError):
        shamsuddin_simple(UPoly(), UPoly.monomial(1))


COEFFS = [F(1), F(-1), F(2), F(1, 2)]


def test_agreement_on_overlap_family():
    for t1 in range(13):
        for t2 in range(t1):
            for c1, c2 in itertools.product(COEFFS, repeat=2):
                v = decide(spec(0, t1, 0, t2, 1, c1, c2))
                ok, _ = shamsuddin_simple(UPoly.monomial(t2, c2), UPoly.monomial(t1, c1))
                assert v.simple == ok
                assert v.simple == ((t1 - t2) % (t2 + 1) != 0)


exps = st.integers(0, 4)
coeffs = st.sampled_from([F(0), F(1), F(-2), F(3, 4)])


@settings(max_examples=400)
@given(exps, exps, exps, exps, exps, coeffs, coeffs)
def test_swap_invariance(r, t1, s1, t2, s2, c1, c2):
    a = decide(spec(r, t1, s1, t2, s2, c1, c2))
    b = decide(spec(r, t2, s2, t1, s1, c2, c1))
    assert a == b


@settings(max_examples=400)
@given(exps, exps, exps, exps, exps, coeffs, coeffs)
def test_normalize_idempotent_and_witness_sound(r, t1, s1, t2, s2, c1, c2):
    n = normalize(spec(r, t1, s1, t2, s2, c1, c2))
    assert normalize(n) == n
    v = classify(n)
    if not v.simple:
        assert v.witness is not None
        assert verify_witness(n, v.witness)


nz = st.sampled_from([F(1), F(-1), F(2), F(-3, 2), F(7, 5)])


@settings(max_examples=200)
@given(st.integers(0, 4), st.integers(1, 4), st.integers(1, 4), nz, nz)
def test_coefficient_independence(u, t, s, c1, c2):
    mixed = decide(spec(0, u + t, s, u, 0, c1, c2))
    assert mixed.simple and mixed.rule == decide(spec(0, u + t, s, u, 0, 1, 1)).rule
    if s >= 2:
        pure = decide(spec(0, u + t, 0, u, s, c1, c2))
        assert pure.simple and pure.rule == decide(spec(0, u + t, 0, u, s, 1, 1)).rule


def test_scaling_relation_examples():
    rel = scaling_relation(spec(0, 1, 1, 0, 0, F(1, 4), 1))
    assert (rel.family, rel.v, rel.target) == (MIXED, 2, 4)
    assert F(2) ** rel.v == rel.target
    rel = scaling_relation(spec(0, 1, 0, 0, 2, 1, 1))
    assert (rel.family, rel.v, rel.target) == (PURE, 3, 1)
    rel = scaling_relation(spec(0, 3, 3, 1, 0, 1, 1))
    assert (rel.u, rel.t, rel.s, rel.v, rel.target) == (1, 2, 3, 8, 1)
    with pytest.raises(ValueError):
        scaling_relation(spec(1, 1, 1, 0, 0, 1, 1))
    with pytest.raises(ValueError):
        scaling_relation(spec(0, 1, 0, 0, 1, 1, 1))


@settings(max_examples=150)
@given(
    st.sampled_from([MIXED, PURE]), st.integers(0, 3), st.integers(1, 3), st.integers(1, 4),
    st.sampled_from([F(2), F(3), F(1, 2), F(-2)]), nz,
)
def test_scaling_relation_conjugates_to_unit_coefficients(family, u, t, s, alpha, other):
    if family == PURE and s < 2:
        s += 1
    sp = coefficients_for_alpha(family, u, t, s, alpha, other)
    rel = scaling_relation(sp)
    assert alpha**rel.v == rel.target
    assert conjugate(sp.derivation(), rel.scaling_for(alpha)) == rel.unit_derivation() * (1 / alpha)


def test_scaling_for_rejects_wrong_alpha():
    rel = scaling_relation(spec(0, 1, 1, 0, 0, F(1, 4), 1))
    with pytest.raises(ValueError):
        rel.scaling_for(3)


def test_hunt_upgrades_criterion_witness():
    for t1 in range(1, 9):
        for t2 in range(t1):
            if (t1 - t2) % (t2 + 1):
                continue
            v = decide(spec(0, t1, 0, t2, 1, F(2), F(-1, 2)), hunt=True)
            assert isinstance(v.witness, DarbouxElement), (t1, t2)
            assert v.witness.lam == P(f"-1/2*x^{t2}")
            assert verify_witness(v.spec, v.witness)
            assert v.outcome == decide(spec(0, t1, 0, t2, 1, F(2), F(-1, 2))).outcome


def test_verdict_serialization():
    d = decide(spec(0, 2, 0, 0, 0, 1, 1)).to_dict()
    assert d["outcome"] == "NotSimple"
    assert d["witness"] == {"kind": "DarbouxElement", "f": "x^3 + 3*x - 3*y", "lambda": "0"}
    c = decide(spec(0, 3, 0, 1, 1, 1, 1)).to_dict()
    assert c["witness"]["kind"] == "CriterionOnly" and c["witness"]["p"] == "0"
    assert c["spec"]["c1"] == "1"


def test_verify_rejects_wrong_witnesses():
    s = normalize(spec(0, 2, 0, 0, 0, 1, 1))
    assert not verify_witness(s, DarbouxElement(X, P("0")))
    assert not verify_witness(s, StableIdealXY())
    assert not verify_witness(s, DarbouxElement(P("x^3 + 3*x - 3*y"), P("1")))
