"""Family local representation, its infinitesimal cocycle and canonical coordinates.

The family restricted to the decomposition group is upper triangular with
diagonal ``(theta1*theta2*mu1, theta2*mu2, theta1/mu2, 1/mu1)``.  Off-diagonal
entries are opaque: at each evaluation point ``xi_ij_<tag>`` is the base value
and ``xi_ij_<tag>_d1``, ``xi_ij_<tag>_d2`` its partials (tag ``F`` for
``Frob_p``, ``U`` for ``rec(u)``).

The cocycle in direction ``Delta`` is the epsilon-coefficient of
``rho(g)^-1 rho~(g)`` after ``e1 -> (1-Delta) e``, ``e2 -> Delta e``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import DELTA, LOG_U, CHI_U, EvaluationPoint, PadicCharacter, evaluate, log_derivative
from .gl2rep import isotypic_decompose, sym_power_matrix
from .kernel import ZERO, Jet, Matrix, SymExpr
from .presets import FamilyPreset, PresetError, load_preset

SIZE = 4


class Point(enum.Enum):
    FROBENIUS = "Frob_p"
    REC_UNIT = "rec(u)"
    # Frob_p * rec(u): a product element, used for triangularity and the cocycle rule
    PRODUCT = "Frob_p*rec(u)"


_TAGS = {Point.FROBENIUS: "F", Point.REC_UNIT: "U"}
_CHAR_POINTS = {Point.FROBENIUS: EvaluationPoint.FROBENIUS, Point.REC_UNIT: EvaluationPoint.REC_UNIT}


class ExceptionalDirectionError(ArithmeticError):
    """The first canonical coordinate vanishes identically; no slope exists."""


def xi_symbol(i: int, j: int, point: Point, part: str = "") -> str:
    suffix = f"_{part}" if part else ""
    return f"xi_{i}{j}_{_TAGS[point]}{suffix}"


def local_gl2_matrix(point: Point) -> Matrix:
    """``[[chi^{k-1}/delta, phi], [0, delta]]`` evaluated at ``point``."""
    alpha = SymExpr.sym("alpha_p")
    phi = SymExpr.sym(f"phi_{_TAGS[point]}")
    if point is Point.FROBENIUS:
        return Matrix([[1 / alpha, phi], [ZERO, alpha]])
    if point is Point.REC_UNIT:
        return Matrix([[CHI_U, phi], [ZERO, SymExpr.const(1)]])
    raise ValueError("the product point has no independent gl2 matrix")


@dataclass(frozen=True)
class FamilyLocalRep:
    preset: FamilyPreset
    diagonal: tuple[PadicCharacter, ...]

    @property
    def size(self) -> int:
        return len(self.diagonal)

    def jet_matrix(self, point: Point) -> Matrix:
        if point is Point.PRODUCT:
            return self.jet_matrix(Point.FROBENIUS) @ self.jet_matrix(Point.REC_UNIT)
        n = self.size
        at = _CHAR_POINTS[point]
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(evaluate(self.diagonal[i], at))
                elif j > i:
                    row.append(Jet(*(SymExpr.sym(xi_symbol(i + 1, j + 1, point, p)) for p in ("", "d1", "d2"))))
                else:
                    row.append(Jet(ZERO, ZERO, ZERO))
            rows.append(row)
        return Matrix(rows)

    def base_matrix(self, point: Point) -> Matrix:
        return self.jet_matrix(point).map(lambda t: t.value)

    def base_identification(self, point: Point) -> dict[str, SymExpr]:
        """``xi_ij`` base value -> entry of Sym^3 of the local gl2 matrix."""
        sym3 = sym_power_matrix(local_gl2_matrix(point), self.size - 1)
        return {
            xi_symbol(i + 1, j + 1, point): sym3[i, j]
            for i in range(self.size) for j in range(i + 1, self.size)
        }


def build_family(preset: FamilyPreset | None = None) -> FamilyLocalRep:
    """Diagonal ``(theta1 theta2 mu1, theta2 mu2, theta1 mu2^-1, mu1^-1)``.

    Raises PresetError unless the base values match the diagonal of the
    symmetric cube of the local gl2 matrix at both evaluation points.
    """
    preset = preset or load_preset()
    t1, t2, m1, m2 = preset.theta1, preset.theta2, preset.mu1, preset.mu2
    diagonal = (
        (t1 * t2 * m1).with_name("theta1*theta2*mu1"),
        (t2 * m2).with_name("theta2*mu2"),
        (t1 * m2.inverse()).with_name("theta1*mu2^-1"),
        m1.inverse().with_name("mu1^-1"),
    )
    fam = FamilyLocalRep(preset, diagonal)
    for point in (Point.FROBENIUS, Point.REC_UNIT):
        expected = sym_power_matrix(local_gl2_matrix(point), SIZE - 1).diagonal()
        got = fam.base_matrix(point).diagonal()
        if tuple(got) != tuple(expected):
            raise PresetError(
                f"preset diagonal at {point.value} is {[str(x) for x in got]}, "
                f"expected {[str(x) for x in expected]}"
            )
    return fam


@dataclass(frozen=True)
class Cocycle:
    values: dict  # Point -> Matrix over SymExpr
    delta: SymExpr

    def __getitem__(self, point: Point) -> Matrix:
        return self.values[point]


def extract_cocycle(fam: FamilyLocalRep, delta=DELTA) -> Cocycle:
    delta = SymExpr.coerce(delta)
    values = {}
    for point in Point:
        jets = fam.jet_matrix(point)
        base_inv = jets.map(lambda t: t.value).inverse()
        d1 = base_inv @ jets.map(lambda t: t.d1)
        d2 = base_inv @ jets.map(lambda t: t.d2)
        values[point] = d1 * (1 - delta) + d2 * delta
    return Cocycle(values, delta)


def diagonal_log_derivatives(preset: FamilyPreset, point: EvaluationPoint, delta=DELTA) -> dict[str, SymExpr]:
    """Directional log-derivatives ``a, b, m1, m2`` of theta1, theta2, mu1, mu2."""
    return {
        "a": log_derivative(preset.theta1, point, delta),
        "b": log_derivative(preset.theta2, point, delta),
        "m1": log_derivative(preset.mu1, point, delta),
        "m2": log_derivative(preset.mu2, point, delta),
    }


# Middle entries of the cocycle columns as printed for the Sym^6 (i = 3) and
# Sym^2 (i = 1) projections, as linear forms in the log-derivatives.
PRINTED_MIDDLE_ENTRY: dict[int, dict[str, int]] = {
    3: {"a": -2, "b": 1, "m1": -1, "m2": 3},
    1: {"a": -1, "b": -2, "m1": -3, "m2": -1},
}


def printed_entry(i: int, logs: dict[str, SymExpr]) -> SymExpr:
    return sum((c * logs[name] for name, c in PRINTED_MIDDLE_ENTRY[i].items()), ZERO)


@lru_cache(maxsize=None)
def printed_scalar(i: int) -> Fraction:
    """Constant ``lam`` with ladder weight-0 coordinate = ``lam`` * printed entry."""
    a, b, m1, m2 = (SymExpr.sym(s) for s in ("dlog_a", "dlog_b", "dlog_m1", "dlog_m2"))
    diag = [a + b + m1, b + m2, a - m2, -m1]
    x = Matrix([[diag[r] if r == c else ZERO for c in range(SIZE)] for r in range(SIZE)])
    coord = isotypic_decompose(SIZE - 1).project(x, i)[i]
    ratio = coord / printed_entry(i, {"a": a, "b": b, "m1": m1, "m2": m2})
    if not ratio.is_constant():
        raise ArithmeticError(f"summand {i} weight-0 coordinate is not proportional to the printed entry")
    return ratio.constant_value()


@dataclass(frozen=True)
class CoordinatePair:
    first: SymExpr
    second: SymExpr
    position: int = 0
    weight: int = 0

    def scaled(self, lam) -> "CoordinatePair":
        return CoordinatePair(self.first * lam, self.second * lam, self.position, self.weight)


def summand_coordinates(c: Cocycle, i: int) -> list[CoordinatePair]:
    """Per ladder position of summand ``i``: ``(-c(rec u)/log_u, c(Frob_p))``."""
    dec = isotypic_decompose(SIZE - 1)
    at_rec = dec.project(c[Point.REC_UNIT], i)
    at_frob = dec.project(c[Point.FROBENIUS], i)
    s = dec.summands[i]
    return [
        CoordinatePair(-r / LOG_U, f, t, s.weight(t))
        for t, (r, f) in enumerate(zip(at_rec, at_frob))
    ]


def weight_zero_pair(c: Cocycle, i: int) -> CoordinatePair:
    return summand_coordinates(c, i)[i]


def slope(pair: CoordinatePair) -> SymExpr:
    """Second coordinate over first; the L-invariant of the class."""
    if pair.first.is_zero():
        raise ExceptionalDirectionError("first coordinate vanishes identically")
    return pair.second / pair.first
