"""First-order jets ``a + b1*e1 + b2*e2`` with ``e_i*e_j = 0``."""

from __future__ import annotations

from dataclasses import dataclass

from .symexpr import SymExpr


@dataclass(frozen=True)
class Jet:
    value: object
    d1: object = 0
    d2: object = 0

    def __post_init__(self):
        parts = (self.value, self.d1, self.d2)
        symbolic = any(isinstance(v, (SymExpr, str)) for v in parts)
        for f, v in zip(("value", "d1", "d2"), parts):
            if isinstance(v, str) or (symbolic and isinstance(v, int)):
                object.__setattr__(self, f, SymExpr.coerce(v))

    @classmethod
    def const(cls, x) -> "Jet":
        x = SymExpr.coerce(x) if isinstance(x, (int, str)) else x
        return cls(x, 0 * x, 0 * x)

    @staticmethod
    def _lift(x) -> "Jet":
        return x if isinstance(x, Jet) else Jet.const(x)

    def __add__(self, other):
        o = Jet._lift(other)
        return Jet(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.value, -self.d1, -self.d2)

    def __sub__(self, other):
        return self + (-Jet._lift(other))

    def __rsub__(self, other):
        return Jet._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Jet(self.value * other, self.d1 * other, self.d2 * other)
        return jet_mul(self, Jet._lift(other))

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        if self.value == 0:
            raise ZeroDivisionError("jet with zero value part is not invertible")
        inv = 1 / self.value
        sq = inv * inv
        return Jet(inv, -self.d1 * sq, -self.d2 * sq)

    def __truediv__(self, other):
        return self * Jet._lift(other).inverse()

    def __rtruediv__(self, other):
        return Jet._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        # (a + e*b)^n = a^n + n*a^(n-1)*e*b
        if n == 0:
            return Jet.const(self.value ** 0)
        lead = self.value ** (n - 1)
        return Jet(lead * self.value, n * lead * self.d1, n * lead * self.d2)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            other = Jet._lift(other)
        return (self.value, self.d1, self.d2) == (other.value, other.d1, other.d2)

    def __hash__(self):
        return hash((self.value, self.d1, self.d2))

    def along(self, delta) -> object:
        """Coefficient of ``e`` after ``e1 -> (1-delta)e, e2 -> delta*e``."""
        return (1 - delta) * self.d1 + delta * self.d2

    def __repr__(self):
        return f"Jet({self.value}, {self.d1}, {self.d2})"


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Product with all quadratic epsilon terms dropped."""
    return Jet(
        a.value * b.value,
        a.value * b.d1 + b.value * a.d1,
        a.value * b.d2 + b.value * a.d2,
    )
