"""Exact coefficient arithmetic: rationals, rational functions, jets, matrices."""

from fractions import Fraction as Rational

from .jet import Jet, jet_mul
from .linsolve import AffineSolution, LinearSystem, NotAffineError, solve_affine
from .matrix import Matrix
from .poly import Poly
from .symexpr import ONE, ZERO, ParseError, SymExpr, parse, symbols


def simplify(e) -> SymExpr:
    """Canonical form of ``e``; construction already canonicalizes."""
    return SymExpr.coerce(e)


__all__ = [
    "Rational",
    "Jet",
    "jet_mul",
    "AffineSolution",
    "LinearSystem",
    "NotAffineError",
    "solve_affine",
    "Matrix",
    "Poly",
    "ONE",
    "ZERO",
    "ParseError",
    "SymExpr",
    "parse",
    "simplify",
    "symbols",
]
