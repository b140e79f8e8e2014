"""Affine systems over the rational-function field and their solution."""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrix import Matrix
from .poly import Poly
from .symexpr import SymExpr


class NotAffineError(ValueError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    """Equations ``e == 0``, each affine in ``unknowns``.

    The order of ``unknowns`` matters: elimination pivots on earlier unknowns
    first, so later unknowns become the free parameters of the solution.
    """

    unknowns: tuple[str, ...]
    equations: tuple[SymExpr, ...]

    def __init__(self, unknowns, equations):
        object.__setattr__(self, "unknowns", tuple(unknowns))
        object.__setattr__(self, "equations", tuple(SymExpr.coerce(e) for e in equations))
        for e in self.equations:
            affine_parts(e, self.unknowns)

    def residuals(self, values: dict[str, SymExpr]) -> list[SymExpr]:
        return [e.subs(values) for e in self.equations]


def affine_parts(eq: SymExpr, unknowns) -> tuple[list[SymExpr], SymExpr]:
    """Split ``eq`` as ``sum(coeffs[i] * unknowns[i]) + const``."""
    unknowns = tuple(unknowns)
    bad = set(unknowns) & set(eq.den.symbols())
    if bad:
        raise NotAffineError(f"unknowns {sorted(bad)} in a denominator: {eq}")
    coeffs: list[dict] = [dict() for _ in unknowns]
    const: dict = {}
    index = {u: i for i, u in enumerate(unknowns)}
    for mono, c in eq.num.terms.items():
        hit = [(n, e) for n, e in mono if n in index]
        if not hit:
            const[mono] = c
            continue
        if len(hit) > 1 or hit[0][1] > 1:
            raise NotAffineError(f"equation is not affine in {unknowns}: {eq}")
        rest = tuple((n, e) for n, e in mono if n not in index)
        coeffs[index[hit[0][0]]][rest] = c
    den = SymExpr(eq.den, _canonical=True)
    return [SymExpr(Poly(t)) / den for t in coeffs], SymExpr(Poly(const)) / den


@dataclass
class AffineSolution:
    status: str  # "unique" | "parametric" | "inconsistent"
    values: dict[str, SymExpr] = field(default_factory=dict)
    free: tuple[str, ...] = ()
    rank: int = 0
    inconsistency: SymExpr | None = None

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"


def solve_affine(system: LinearSystem) -> AffineSolution:
    """Gaussian elimination over the rational-function field.

    Pivot unknowns are expressed in terms of the free ones; an inconsistent
    system is reported through ``inconsistency`` (a nonzero expression that
    would have to vanish), never raised.
    """
    unknowns = system.unknowns
    if not system.equations:
        return AffineSolution("parametric" if unknowns else "unique", free=unknowns)
    rows = []
    for eq in system.equations:
        coeffs, const = affine_parts(eq, unknowns)
        rows.append(coeffs + [-const])
    R, pivots = Matrix(rows).rref()
    n = len(unknowns)
    if n in pivots:
        i = pivots.index(n)
        return AffineSolution("inconsistent", rank=len(pivots), inconsistency=R.rows[i][n])
    free = tuple(u for c, u in enumerate(unknowns) if c not in pivots)
    values: dict[str, SymExpr] = {}
    for i, c in enumerate(pivots):
        v = R.rows[i][n]
        for f in range(n):
            if f not in pivots and R.rows[i][f] != 0:
                v = v - R.rows[i][f] * SymExpr.sym(unknowns[f])
        values[unknowns[c]] = v
    status = "unique" if not free else "parametric"
    return AffineSolution(status, values, free, rank=len(pivots))


def check_solution(system: LinearSystem, solution: AffineSolution) -> list[SymExpr]:
    """Residuals after substituting the solution; all zero for a valid one."""
    return system.residuals(solution.values)

