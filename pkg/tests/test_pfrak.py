from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SX, to_sympy, upolys
from simplederiv.pfrak import injected_fault, monomial_pfrak_vanishes, pfrak, replay_trace
from simplederiv.qpoly import UPoly


def x(n, c=1):
    return UPoly.monomial(n, c)


def reference_pfrak(a: UPoly, b: UPoly):
    """Independent route through sympy's division and differentiation."""
    sa = to_sympy(a)
    q, r = sympy.div(to_sympy(b), sa, SX)
    total = r
    while q != 0:
        q, r = sympy.div(sympy.diff(q, SX), sa, SX)
        total += r
    return sympy.expand(total)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (x(2), x(1) + 1, x(1) + 1),
        (x(1), x(3), UPoly()),
        (x(1), x(2), UPoly.const(1)),
        (x(2), x(4), x(1, 2)),
        (UPoly.const(1), UPoly([3, -1, 0, 5]), UPoly()),
        (UPoly.const(Fraction(-2, 3)), x(7), UPoly()),
    ],
)
def test_examples(a, b, expected):
    p, trace = pfrak(a, b)
    assert p == expected
    assert sympy.expand(to_sympy(p) - reference_pfrak(a, b)) == 0
    assert replay_trace(trace)


def test_hand_trace_for_x_and_x_squared():
    _, trace = pfrak(x(1), x(2))
    assert trace.steps == ((x(1), UPoly()), (UPoly(), UPoly.const(1)))
    assert trace.termination_index == 1


def test_zero_a_rejected():
    with pytest.raises(ZeroDivisionError):
        pfrak(UPoly(), x(1))


@settings(max_examples=150)
@given(upolys(6, nonzero=True), upolys(12))
def test_matches_reference(a, b):
    p, _ = pfrak(a, b)
    assert sympy.expand(to_sympy(p) - reference_pfrak(a, b)) == 0


@settings(max_examples=500)
@given(upolys(6, nonzero=True), upolys(12))
def test_degree_below_a_and_trace_replays(a, b):
    p, trace = pfrak(a, b)
    assert p.degree < a.degree
    assert replay_trace(trace)


@settings(max_examples=200)
@given(upolys(6, nonzero=True), upolys(12), st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2)]))
def test_homogeneous_in_b(a, b, eps):
    assert pfrak(a, b * eps)[0] == pfrak(a, b)[0] * eps


@settings(max_examples=200)
@given(upolys(6, nonzero=True), upolys(6))
def test_identity_below_degree(a, b):
    if b.degree < a.degree:
        assert pfrak(a, b)[0] == b


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("m", range(9))
def test_shift_identity(n, m):
    assert pfrak(x(n), x(m + n + 1))[0] == pfrak(x(n), x(m))[0] * (m + 1)


def test_vanishing_criterion_exhaustive():
    for m in range(1, 21):
        for n in range(m):
            assert pfrak(x(n), x(m))[0].is_zero() == monomial_pfrak_vanishes(n, m), (n, m)


@pytest.mark.parametrize("n, m, expected", [(1, 3, True), (2, 4, False), (2, 5, True)])
def test_monomial_pfrak_vanishes_examples(n, m, expected):
    assert monomial_pfrak_vanishes(n, m) is expected


@pytest.mark.parametrize("n, m", [(2, 2), (3, 1), (-1, 2)])
def test_monomial_pfrak_vanishes_precondition(n, m):
    with pytest.raises(ValueError):
        monomial_pfrak_vanishes(n, m)


def test_replay_detects_tampering():
    _, trace = pfrak(x(1), x(3))
    from dataclasses import replace

    bad = replace(trace, result=UPoly.const(1))
    assert not replay_trace(bad)


def test_injected_fault_changes_results_and_is_scoped():
    clean = pfrak(x(1), x(2))[0]
    with injected_fault():
        assert pfrak(x(1), x(2))[0] == -clean
    assert pfrak(x(1), x(2))[0] == clean
