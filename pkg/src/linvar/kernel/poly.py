"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by the documented
symbol order; a polynomial maps monomials to nonzero :class:`Fraction`
coefficients.  Ring arithmetic is done here.  Multivariate gcd is delegated to
sympy's sparse polynomial rings, with monomial fast paths that cover most of
the expressions the engine produces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .symbols import sort_symbols, symbol_key

Monomial = tuple  # tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(((n, e) for n, e in exps.items() if e), key=lambda t: symbol_key(t[0])))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_div_sorted(b: Monomial, a: Monomial) -> Monomial:
    exps = dict(b)
    for n, e in a:
        exps[n] = exps.get(n, 0) - e
    return tuple(sorted(((n, e) for n, e in exps.items() if e), key=lambda t: symbol_key(t[0])))


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, c) -> "Poly":
        c = Fraction(c)
        return cls({ONE_MONO: c} if c else {})

    @classmethod
    def symbol(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "Poly":
        return cls({mono: Fraction(coeff)})

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(ONE_MONO, Fraction(0))

    def symbols(self) -> tuple[str, ...]:
        return sort_symbols(n for m in self.terms for n, _ in m)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    # ordering -------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing graded-lex order."""
        syms = self.symbols()

        def key(item):
            exps = dict(item[0])
            return (mono_degree(item[0]), tuple(exps.get(s, 0) for s in syms))

        return sorted(self.terms.items(), key=key, reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly()
        return Poly({m: v * c for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_monomial(self, mono: Monomial) -> "Poly":
        return Poly({_mono_div_sorted(m, mono): c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def coefficients_in(self, name: str) -> dict[int, "Poly"]:
        """Split as a polynomial in one variable: ``{power: coefficient}``."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = dict(m).get(name, 0)
            rest = tuple((n, x) for n, x in m if n != name)
            out.setdefault(e, {})[rest] = c
        return {e: Poly(t) for e, t in out.items()}


def monomial_gcd(monos: Iterable[Monomial]) -> Monomial:
    monos = list(monos)
    if not monos:
        return ONE_MONO
    common = dict(monos[0])
    for m in monos[1:]:
        em = dict(m)
        common = {n: min(e, em.get(n, 0)) for n, e in common.items()}
    return tuple(sorted(((n, e) for n, e in common.items() if e), key=lambda t: symbol_key(t[0])))


@lru_cache(maxsize=256)
def _ring(symbols: tuple[str, ...]):
    from sympy.polys.domains import QQ
    from sympy.polys.orderings import grlex
    from sympy.polys.rings import PolyRing

    return PolyRing(symbols, QQ, grlex)


def _to_sympy(p: Poly, ring, symbols):
    from sympy.polys.domains import QQ

    index = {s: i for i, s in enumerate(symbols)}
    data = {}
    for m, c in p.terms.items():
        exps = [0] * len(symbols)
        for n, e in m:
            exps[index[n]] = e
        data[tuple(exps)] = QQ(c.numerator, c.denominator)
    return ring.from_dict(data) if data else ring.zero


def _from_sympy(q, symbols) -> Poly:
    out = {}
    for exps, c in q.terms():
        mono = tuple((symbols[i], e) for i, e in enumerate(exps) if e)
        out[mono] = Fraction(int(c.numerator), int(c.denominator))
    return Poly(out)


def cofactors(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Return ``(p/g, q/g)`` for ``g = gcd(p, q)`` (up to a rational unit)."""
    if p.is_zero():
        return Poly(), Poly.constant(1)
    if p.is_constant() or q.is_constant():
        return p, q
    if p.is_monomial() or q.is_monomial():
        g = monomial_gcd(list(p.terms) + list(q.terms))
        if not g:
            return p, q
        return p.div_monomial(g), q.div_monomial(g)
    # pull out monomial content first; it keeps the sympy call small
    g = monomial_gcd(list(p.terms) + list(q.terms))
    if g:
        p, q = p.div_monomial(g), q.div_monomial(g)
    symbols = sort_symbols(p.symbols() + q.symbols())
    shared = set(p.symbols()) & set(q.symbols())
    if not shared:
        return p, q
    ring = _ring(symbols)
    _, cp, cq = _to_sympy(p, ring, symbols).cofactors(_to_sympy(q, ring, symbols))
    return _from_sympy(cp, symbols), _from_sympy(cq, symbols)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, names: Mapping[str, str] | None = None) -> str:
    names = names or {}
    parts = []
    for n, e in m:
        s = names.get(n, n)
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def format_poly(p: Poly, names: Mapping[str, str] | None = None) -> str:
    """Infix text, terms in decreasing graded-lex order, e.g. ``-a^3*a11 + 3*a*a21``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not m:
            body = _format_coeff(c)
        elif c == 1:
            body = format_monomial(m, names)
        else:
            body = f"{_format_coeff(c)}*{format_monomial(m, names)}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
