"""Exact decision procedures for simple derivations of Q[x, y]."""

from .decider import (
    NOT_SIMPLE,
    SIMPLE,
    BinomialDerivationSpec,
    Verdict,
    classify,
    classify_degenerate,
    decide,
    normalize,
    scaling_relation,
    shamsuddin_simple,
    verify_witness,
)
from .deriv import (
    DarbouxCertificate,
    Derivation,
    ScalingAut,
    apply,
    conjugate,
    darboux_certificate,
    ideal_stable_uy,
    ideal_stable_xy,
)
from .exprio import PolyParseError, format_poly, parse_poly
from .oracle import SearchConfig, darboux_search, lambda_degree_bounds
from .pfrak import PfrakTrace, monomial_pfrak_vanishes, pfrak
from .qpoly import ONE, X, Y, ZERO, BPoly, Rat, UPoly, exact_div, partial_x, partial_y, substitute, upoly_divmod

__version__ = "0.1.0"
