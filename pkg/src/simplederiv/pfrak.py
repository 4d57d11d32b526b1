"""The iterated-division polynomial p(a, b) for a, b in Q[x].

Divide ``b`` by ``a``; then keep dividing the derivative of the latest
quotient by ``a`` until a quotient vanishes.  p(a, b) is the sum of all
remainders produced along the way.  Its vanishing decides simplicity of the
derivation d/dx + (a*y + b) d/dy.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Tuple

from .qpoly import UPoly, upoly_divmod

__all__ = ["PfrakTrace", "pfrak", "monomial_pfrak_vanishes", "replay_trace", "injected_fault"]

# Set only by ``injected_fault``; lets the self-test prove it can fail.
_FAULT = False


@dataclass(frozen=True)
class PfrakTrace:
    """Every (quotient, remainder) row of the iteration, in order.

    ``steps[0]`` is (q_1, r_1) from dividing b; ``steps[-1]`` has the zero
    quotient that stopped the loop.
    """

    a: UPoly
    b: UPoly
    steps: Tuple[Tuple[UPoly, UPoly], ...]
    result: UPoly

    @property
    def termination_index(self) -> int:
        # number of nonzero quotients; the trace has termination_index + 1 rows
        return len(self.steps) - 1


def pfrak(a: UPoly, b: UPoly) -> Tuple[UPoly, PfrakTrace]:
    if a.is_zero():
        raise ZeroDivisionError("p(a, b) needs a nonzero a")
    steps = []
    q, r = upoly_divmod(b, a)
    steps.append((q, r))
    while not q.is_zero():
        q, r = upoly_divmod(q.derivative(), a)
        if _FAULT:
            r = -r
        steps.append((q, r))
    total = UPoly()
    for _, r in steps:
        total = total + r
    return total, PfrakTrace(a, b, tuple(steps), total)


def replay_trace(trace: PfrakTrace) -> bool:
    """Check a trace row by row against its own inputs."""
    a, steps = trace.a, trace.steps
    if a.is_zero() or not steps:
        return False
    if any(not (r.degree < a.degree) for _, r in steps):
        return False
    q1, r1 = steps[0]
    if q1 * a + r1 != trace.b:
        return False
    for (q, _), (qn, rn) in zip(steps, steps[1:]):
        if q.is_zero() or qn * a + rn != q.derivative():
            return False
    if not steps[-1][0].is_zero():
        return False
    total = UPoly()
    for _, r in steps:
        total = total + r
    return total == trace.result


def monomial_pfrak_vanishes(n: int, m: int) -> bool:
    """Closed form for p(x^n, x^m) == 0 when m > n: (n+1) divides (m-n)."""
    if n < 0 or m <= n:
        raise ValueError(f"need 0 <= n < m, got n={n}, m={m}")
    return (m - n) % (n + 1) == 0


@contextlib.contextmanager
def injected_fault():
    """Negate every remainder after the first while active (mutation testing)."""
    global _FAULT
    prev, _FAULT = _FAULT, True
    try:
        yield
    finally:
        _FAULT = prev
