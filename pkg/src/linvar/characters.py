"""Formal characters of the local Galois group near the base weight.

A character is ``chi_cyc^{c(s1, s2)} * psi`` with ``c`` affine in the weight
variables and ``psi`` unramified.  Only the value at the base point and the two
first partials are ever tracked, as a :class:`Jet`.

Normalizations: ``chi_cyc(Frob_p) = 1`` and ``chi_cyc(rec(u)) = u^{-1}``;
unramified characters are trivial on ``rec(u)`` (so their partials vanish
there).  Base point ``(s1, s2) = (2(k-2), k-2)`` with ``k`` symbolic, hence
``c(a, b) = c0 + (2*c1 + c2)*(k - 2)``.  The value ``u^{-c(a, b)}`` is written
with the symbol ``chi_u = u^{1-k}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .kernel import ONE, ZERO, Jet, LinearSystem, SymExpr

DELTA = SymExpr.sym("Delta")
LOG_U = SymExpr.sym("log_u")
U = SymExpr.sym("u")
CHI_U = SymExpr.sym("chi_u")
K = SymExpr.sym("k")


class EvaluationPoint(enum.Enum):
    FROBENIUS = "Frob_p"
    REC_UNIT = "rec(u)"


@dataclass(frozen=True)
class BasePoint:
    """Weight ``(a, b) = (2(k-2), k-2)``; ``a = 2b`` always."""

    k: SymExpr = K

    @property
    def a(self) -> SymExpr:
        return 2 * (self.k - 2)

    @property
    def b(self) -> SymExpr:
        return self.k - 2

    # tangent direction of the one-variable sub-family (2s, s)
    subfamily_direction: tuple[int, int] = field(default=(2, 1))


@dataclass(frozen=True)
class PadicCharacter:
    cyc_exponent: tuple[Fraction, Fraction, Fraction] = (Fraction(0), Fraction(0), Fraction(0))
    frob_value: SymExpr = ONE
    partials: tuple[SymExpr, SymExpr] = (ZERO, ZERO)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "cyc_exponent", tuple(Fraction(c) for c in self.cyc_exponent))
        object.__setattr__(self, "frob_value", SymExpr.coerce(self.frob_value))
        object.__setattr__(self, "partials", tuple(SymExpr.coerce(p) for p in self.partials))
        if self.frob_value.is_zero():
            raise ValueError("a character cannot take the value 0")

    @classmethod
    def cyclotomic(cls, c0=0, c1=0, c2=0, name: str = "") -> "PadicCharacter":
        return cls((c0, c1, c2), name=name)

    @classmethod
    def unramified(cls, frob_value, d1=0, d2=0, name: str = "") -> "PadicCharacter":
        return cls(frob_value=frob_value, partials=(d1, d2), name=name)

    def _unramified_jet(self) -> Jet:
        return Jet(self.frob_value, *self.partials)

    def __mul__(self, other: "PadicCharacter") -> "PadicCharacter":
        cyc = tuple(x + y for x, y in zip(self.cyc_exponent, other.cyc_exponent))
        ur = self._unramified_jet() * other._unramified_jet()
        return PadicCharacter(cyc, ur.value, (ur.d1, ur.d2), _join(self.name, other.name))

    def inverse(self) -> "PadicCharacter":
        ur = self._unramified_jet().inverse()
        return PadicCharacter(
            tuple(-c for c in self.cyc_exponent), ur.value, (ur.d1, ur.d2),
            f"{self.name}^-1" if self.name else "",
        )

    def __pow__(self, n: int) -> "PadicCharacter":
        ur = self._unramified_jet() ** n
        return PadicCharacter(
            tuple(n * c for c in self.cyc_exponent), ur.value, (ur.d1, ur.d2),
            f"{self.name}^{n}" if self.name else "",
        )

    def with_name(self, name: str) -> "PadicCharacter":
        return PadicCharacter(self.cyc_exponent, self.frob_value, self.partials, name)


def _join(a: str, b: str) -> str:
    return f"{a}*{b}" if a and b else a or b


def _cyclotomic_value_at_rec_u(cyc) -> SymExpr:
    c0, c1, c2 = cyc
    q = 2 * c1 + c2  # coefficient of (k - 1)
    p = c0 - q
    if p.denominator != 1 or q.denominator != 1:
        raise ValueError(f"cyclotomic exponent {cyc} is not integral at the base point")
    return U ** (-int(p)) * CHI_U ** int(q)


def evaluate(ch: PadicCharacter, at: EvaluationPoint) -> Jet:
    """Value and first partials of ``ch`` at ``Frob_p`` or ``rec(u)``."""
    if at is EvaluationPoint.FROBENIUS:
        # chi_cyc(Frob_p) = 1, so only the unramified part moves
        return ch._unramified_jet()
    if at is EvaluationPoint.REC_UNIT:
        value = _cyclotomic_value_at_rec_u(ch.cyc_exponent)
        _, c1, c2 = ch.cyc_exponent
        return Jet(value, -SymExpr.const(c1) * LOG_U * value, -SymExpr.const(c2) * LOG_U * value)
    raise ValueError(f"unknown evaluation point {at!r}")


def log_derivative(ch: PadicCharacter, at: EvaluationPoint, delta=DELTA) -> SymExpr:
    """``((1 - Delta) d1 + Delta d2) / value`` at the evaluation point."""
    jet = evaluate(ch, at)
    if jet.value == 0:
        raise ZeroDivisionError(f"{ch.name or ch} vanishes at {at.value}")
    return jet.along(SymExpr.coerce(delta)) / jet.value


@dataclass(frozen=True)
class OneVariableCharacter:
    """Unramified character of the GL(2) Hida family: Frobenius value and its s-derivative."""

    frob_value: SymExpr
    derivative: SymExpr

    def jet(self) -> Jet:
        return Jet(SymExpr.coerce(self.frob_value), SymExpr.coerce(self.derivative), ZERO)


def subfamily_constraint(ch: PadicCharacter, gl2: OneVariableCharacter, power: int,
                         base: BasePoint = BasePoint()) -> SymExpr:
    """Chain rule for ``ch(2s, s) = mu^power(s + 2)`` at ``Frob_p``, as ``lhs - rhs``."""
    u, v = base.subfamily_direction
    lhs = u * ch.partials[0] + v * ch.partials[1]
    rhs = (gl2.jet() ** power).d1
    return lhs - rhs


def chain_rule_constraints(preset=None) -> LinearSystem:
    """The two chain-rule relations among the partials of ``mu_1, mu_2``."""
    from .presets import load_preset

    preset = preset or load_preset()
    eqs = [
        subfamily_constraint(preset.mu1, preset.gl2_mu, preset.mu1_power),
        subfamily_constraint(preset.mu2, preset.gl2_mu, preset.mu2_power),
    ]
    unknowns = [str(p) for p in (*preset.mu1.partials, *preset.mu2.partials)]
    return LinearSystem(unknowns, eqs)
