"""Rational functions over Q in named indeterminates.

``SymExpr`` is the coefficient domain of the whole engine.  Values are kept in
canonical form: numerator and denominator coprime, denominator monic for the
graded-lex order over the documented symbol order.  Equality is therefore
structural and decides equality of rational functions.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping

from .poly import Poly, cofactors, format_poly
from .symbols import LATEX_NAMES, SHORT_NAMES


class SymExpr:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, *, _canonical: bool = False):
        if den is None:
            den = Poly.constant(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c) -> "SymExpr":
        return cls(Poly.constant(c), _canonical=True)

    @classmethod
    def sym(cls, name: str) -> "SymExpr":
        return cls(Poly.symbol(name), _canonical=True)

    @classmethod
    def coerce(cls, x) -> "SymExpr":
        if isinstance(x, SymExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse(x)
        return NotImplemented

    # queries --------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def free_symbols(self) -> tuple[str, ...]:
        from .symbols import sort_symbols

        return sort_symbols(self.num.symbols() + self.den.symbols())

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = SymExpr.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return SymExpr(self.num + other.num, self.den)
        return SymExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return SymExpr(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = SymExpr.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return SymExpr.coerce(other) - self

    def __mul__(self, other):
        other = SymExpr.coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        # cross-cancel before multiplying keeps the operands small
        a, d = cofactors(self.num, other.den)
        c, b = cofactors(other.num, self.den)
        return SymExpr(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "SymExpr":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return SymExpr(self.den, self.num)

    def __truediv__(self, other):
        other = SymExpr.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return SymExpr.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return SymExpr(self.num ** n, self.den ** n, _canonical=True)

    def __eq__(self, other) -> bool:
        other = SymExpr.coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # substitution ---------------------------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "SymExpr":
        """Substitute symbols by SymExpr / rational values (simultaneously)."""
        values = {k: SymExpr.coerce(v) for k, v in mapping.items()}
        return _eval_poly(self.num, values) / _eval_poly(self.den, values)

    def coefficients_in(self, name: str) -> dict[int, "SymExpr"]:
        """Coefficients as a polynomial in ``name``; the denominator must be free of it."""
        if name in self.den.symbols():
            raise ValueError(f"{name} occurs in the denominator of {self}")
        den = SymExpr(self.den, _canonical=True)
        return {e: SymExpr(c) / den for e, c in self.num.coefficients_in(name).items()}

    # output ---------------------------------------------------------------
    def to_str(self, names: Mapping[str, str] | None = None) -> str:
        n = format_poly(self.num, names)
        if self.den.is_constant():
            return n
        d = format_poly(self.den, names)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or len(next(iter(self.den.terms))) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def short(self) -> str:
        return self.to_str(SHORT_NAMES)

    def latex(self) -> str:
        return to_latex(self)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"SymExpr({self.to_str()!r})"


def _canonicalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly.constant(1)
    num, den = cofactors(num, den)
    lc = den.leading_coefficient()
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return num, den


def _eval_poly(p: Poly, values: Mapping[str, SymExpr]) -> SymExpr:
    total = ZERO
    for mono, c in p.terms.items():
        term = SymExpr.const(c)
        rest = []
        for name, e in mono:
            if name in values:
                term = term * values[name] ** e
            else:
                rest.append((name, e))
        if rest:
            term = term * SymExpr(Poly.monomial(tuple(rest)), _canonical=True)
        total = total + term
    return total


ZERO = SymExpr(Poly(), _canonical=True)
ONE = SymExpr(Poly.constant(1), _canonical=True)


def symbols(spec: str) -> tuple[SymExpr, ...]:
    """``symbols("alpha_p Delta")`` -> tuple of SymExpr symbols."""
    return tuple(SymExpr.sym(s) for s in spec.replace(",", " ").split())


class ParseError(ValueError):
    pass


def parse(text: str, aliases: Mapping[str, str] | None = None) -> SymExpr:
    """Parse infix text (``+ - * / ^ **``, integers, names) into a SymExpr.

    ``aliases`` maps alternative names (e.g. the short output names) back to
    table symbols.
    """
    aliases = aliases or {}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc

    def walk(node) -> SymExpr:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return SymExpr.const(node.value)
        if isinstance(node, ast.Name):
            return SymExpr.sym(aliases.get(node.id, node.id))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = walk(node.right)
                if not exp.is_constant() or exp.constant_value().denominator != 1:
                    raise ParseError(f"non-integer exponent in {text!r}")
                return walk(node.left) ** int(exp.constant_value())
            a, b = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise ParseError(f"unsupported syntax in {text!r}")

    return walk(tree)


def _latex_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        factors = []
        for name, e in mono:
            base = LATEX_NAMES.get(name, name.replace("_", r"\_"))
            if e == 1:
                factors.append(base)
            elif "^" in base:
                factors.append(f"\\left({base}\\right)^{{{e}}}")
            else:
                factors.append(f"{base}^{{{e}}}")
        body = " ".join(factors)
        if c.denominator != 1:
            coeff = f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
        elif c != 1 or not body:
            coeff = str(c.numerator)
        else:
            coeff = ""
        term = f"{coeff} {body}".strip()
        out.append(("-" if sign == "-" else "") + term if i == 0 else f" {sign} {term}")
    return "".join(out)


def to_latex(e: SymExpr) -> str:
    if e.den.is_constant():
        return _latex_poly(e.num)
    return f"\\frac{{{_latex_poly(e.num)}}}{{{_latex_poly(e.den)}}}"
