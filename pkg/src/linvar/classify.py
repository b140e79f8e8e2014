"""Critical and exceptional Tate twists of symmetric powers of an ordinary form.

The ordinary filtration of ``(Sym^n rho_f)(r)`` has one-dimensional graded
pieces ``chi_cyc^{j(k-1)+r} * delta^{n-2j}`` for ``j = 0..n``.  ``delta`` is
treated as a non-trivial unramified character, so ``delta^e`` is trivial only
for ``e = 0``.  Complex conjugation acts on ``rho_f`` with eigenvalues
``+1, -1``; on the piece ``j`` of ``Sym^n`` by ``(-1)^(n-j)``, twisted by
``(-1)^r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class WType(enum.Enum):
    NONE = "none"
    TRIVIAL = "K"
    CYCLOTOMIC = "K(1)"


@dataclass(frozen=True)
class GradedPiece:
    hodge_tate: int
    delta_exponent: int
    sign: int


@dataclass(frozen=True)
class TwistDescriptor:
    n: int
    k: int
    r: int

    def pieces(self) -> list[GradedPiece]:
        n, k, r = self.n, self.k, self.r
        return [
            GradedPiece(j * (k - 1) + r, n - 2 * j, (-1) ** ((n - j + r) % 2))
            for j in range(n + 1)
        ]

    @property
    def hodge_tate_weights(self) -> list[int]:
        return [p.hodge_tate for p in self.pieces()]

    @property
    def conjugation_signs(self) -> list[int]:
        return [p.sign for p in self.pieces()]


@dataclass(frozen=True)
class FiltrationProfile:
    f1_dim: int  # dim F^1
    f0_quotient_dim: int  # dim V/F^1
    f00_over_f1: int  # pieces of weight 0 with trivial action
    f1_over_f11: int  # pieces of weight 1 acting through chi_cyc
    w_type: WType

    @property
    def w_dim(self) -> int:
        return self.f00_over_f1 + self.f1_over_f11


@dataclass(frozen=True)
class TwistClassification:
    descriptor: TwistDescriptor
    profile: FiltrationProfile
    minus_dim: int
    critical: bool
    exceptional: bool
    tate_dual_r: int

    def row(self) -> dict:
        d = self.descriptor
        return {
            "n": d.n,
            "k": d.k,
            "r": d.r,
            "critical": self.critical,
            "exceptional": self.exceptional,
            "W_type": self.profile.w_type.value,
        }


def tate_dual_twist(n: int, k: int, r: int) -> int:
    """``r'`` with ``((Sym^n rho_f)(r))^* = (Sym^n rho_f)(r')``, using det rho_f = chi^(k-1)."""
    return n * (1 - k) + 1 - r


def classify_twist(n: int, k: int, r: int) -> TwistClassification:
    if n < 0 or k < 2:
        raise ValueError("need n >= 0 and k >= 2")
    desc = TwistDescriptor(n, k, r)
    pieces = desc.pieces()
    f1 = sum(1 for p in pieces if p.hodge_tate >= 1)
    quotient = len(pieces) - f1
    minus = sum(1 for p in pieces if p.sign == -1)
    trivial = sum(1 for p in pieces if p.hodge_tate == 0 and p.delta_exponent == 0)
    cyclo = sum(1 for p in pieces if p.hodge_tate == 1 and p.delta_exponent == 0)
    if trivial:
        w = WType.TRIVIAL
    elif cyclo:
        w = WType.CYCLOTOMIC
    else:
        w = WType.NONE
    profile = FiltrationProfile(f1, quotient, trivial, cyclo, w)
    return TwistClassification(
        descriptor=desc,
        profile=profile,
        minus_dim=minus,
        critical=quotient == minus,
        exceptional=w is not WType.NONE,
        tate_dual_r=tate_dual_twist(n, k, r),
    )


def critical_range(n: int, k: int) -> range:
    """All ``r`` that can possibly be critical: ``V/F^1`` must be neither 0 nor everything."""
    return range(-n * (k - 1), 2)


def scan(n: int, k: int) -> list[TwistClassification]:
    return [classify_twist(n, k, r) for r in critical_range(n, k)]


CSV_COLUMNS = ("n", "k", "r", "critical", "exceptional", "W_type")
