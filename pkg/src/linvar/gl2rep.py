"""Symmetric powers of 2x2 matrices and the sl2 decomposition of End(Sym^m).

Basis of Sym^m: ``v_j`` is the sum of all tensor words of length ``m`` in
``e1, e2`` with exactly ``j`` copies of ``e2`` (no normalization).  With this
convention the symmetric cube of ``[[A, phi], [0, D]]`` has the off-diagonal
constants 3, 3, 2, 1, 1, 1.

End(Sym^m) is identified with (m+1)x(m+1) matrices; the elementary matrix
``E[j][j']`` has weight ``2(j' - j)`` for the diagonal torus, so upper
triangular matrices only carry non-negative weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .kernel import Jet, Matrix, SymExpr

SL2_E = Matrix([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]])
SL2_F = Matrix([[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]])
SL2_H = Matrix([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]])


def sym_power_matrix(g: Matrix, m: int) -> Matrix:
    """Matrix of ``g`` on Sym^m in the symmetrized tensor-word basis.

    Column ``j'`` is ``g . v_j'``.  Its ``v_j`` coefficient is read off a single
    word with ``j`` copies of ``e2`` (the last ``j`` slots); ``s`` counts the
    ``e2`` letters of the source word that land in the first ``m - j`` slots.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if g.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    a, b = g.rows[0]
    c, d = g.rows[1]
    zero = a * 0
    one = zero + 1

    def power(x, e):
        return one if e == 0 else x ** e

    rows = []
    for j in range(m + 1):
        row = []
        for jp in range(m + 1):
            acc = zero
            for s in range(max(0, jp - j), min(m - j, jp) + 1):
                coeff = comb(m - j, s) * comb(j, jp - s)
                term = power(a, m - j - s) * power(b, s) * power(c, j - jp + s) * power(d, jp - s)
                acc = acc + term * coeff
            row.append(acc)
        rows.append(row)
    return Matrix(rows)


def lie_action(x: Matrix, m: int) -> Matrix:
    """Derivative of ``sym_power_matrix`` at the identity in direction ``x``."""
    one = x.rows[0][0] * 0 + 1
    zero = one * 0
    g = Matrix([[Jet(one if i == j else zero, x.rows[i][j], zero) for j in range(2)] for i in range(2)])
    out = sym_power_matrix(g, m).map(lambda t: t.d1 + zero)
    if isinstance(zero, Fraction):
        # jets promote to SymExpr; keep rational input rational
        out = out.map(lambda v: SymExpr.coerce(v).constant_value())
    return out


def end_weight(j: int, jp: int) -> int:
    return 2 * (jp - j)


def flatten(x: Matrix) -> list:
    return x.flatten()


def unflatten(vec, n: int) -> Matrix:
    return Matrix([vec[i * n:(i + 1) * n] for i in range(n)])


def adjoint(y: Matrix, x: Matrix) -> Matrix:
    return y @ x - x @ y


def _ad_operator(y: Matrix) -> Matrix:
    """``x -> [y, x]`` as a matrix on row-major flattened End."""
    n = y.shape[0]
    zero = y.rows[0][0] * 0
    cols = []
    for j in range(n):
        for jp in range(n):
            e = [[zero] * n for _ in range(n)]
            e[j][jp] = zero + 1
            cols.append(adjoint(y, Matrix(e)).flatten())
    return Matrix(cols).transpose()


def sl2_action_on_end(m: int) -> tuple[Matrix, Matrix, Matrix]:
    """(E, F, H) acting on End(Sym^m) by commutators, as (m+1)^2-square matrices."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return tuple(_ad_operator(lie_action(x, m)) for x in (SL2_E, SL2_F, SL2_H))


@dataclass(frozen=True)
class IsotypicSummand:
    """Lowering ladder of Sym^{2i} (x) det^{-i} inside End(Sym^m)."""

    m: int
    i: int
    basis: tuple[Matrix, ...]

    @property
    def dimension(self) -> int:
        return 2 * self.i + 1

    def weight(self, t: int) -> int:
        return 2 * self.i - 2 * t


@dataclass(frozen=True)
class ProjectorFamily:
    m: int
    projectors: tuple[Matrix, ...]


class Decomposition:
    """Isotypic decomposition of End(Sym^m) with exact coordinate maps."""

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("m must be non-negative")
        self.m = m
        self.n = m + 1
        n = self.n
        self.lower = lie_action(SL2_F, m)
        self.raise_ = lie_action(SL2_E, m)
        summands = []
        for i in range(m + 1):
            hw = self._highest_weight_vector(i)
            ladder = [hw]
            for _ in range(2 * i):
                ladder.append(adjoint(self.lower, ladder[-1]))
            if not adjoint(self.lower, ladder[-1]).is_zero():
                raise ArithmeticError(f"ladder {i} does not terminate")
            summands.append(IsotypicSummand(m, i, tuple(ladder)))
        self.summands = tuple(summands)
        # per-weight change of basis; weight 2w lives on the diagonal j' = j + w
        self._blocks = {}
        for w in range(-m, m + 1):
            cells = [(j, j + w) for j in range(n) if 0 <= j + w < n]
            members = [s.i for s in self.summands if s.i >= abs(w)]
            cols = [[self.summands[i].basis[i - w][c] for c in cells] for i in members]
            inv = Matrix(cols).transpose().inverse()
            self._blocks[w] = (cells, members, inv)

    def _highest_weight_vector(self, i: int) -> Matrix:
        n = self.n
        cells = [(j, j + i) for j in range(n - i)]
        images = []
        for j, jp in cells:
            e = [[Fraction(0)] * n for _ in range(n)]
            e[j][jp] = Fraction(1)
            images.append(adjoint(self.raise_, Matrix(e)).flatten())
        kernel = Matrix(images).transpose().nullspace()
        if len(kernel) != 1:
            raise ArithmeticError(f"highest-weight space for i={i} has dimension {len(kernel)}")
        vec = kernel[0]
        lead = next(x for x in vec if x != 0)
        out = [[Fraction(0)] * n for _ in range(n)]
        for (j, jp), x in zip(cells, vec):
            out[j][jp] = x / lead
        return Matrix(out)

    def dimensions(self) -> list[int]:
        return [s.dimension for s in self.summands]

    def project(self, x: Matrix, i: int) -> list:
        """Coordinates of the summand-``i`` component of ``x`` in its ladder basis."""
        if x.shape != (self.n, self.n):
            raise ValueError("element of the wrong size")
        coords = []
        zero = x.rows[0][0] * 0
        for t in range(2 * i + 1):
            w = i - t
            cells, members, inv = self._blocks[w]
            row = inv.rows[members.index(i)]
            acc = zero
            for coef, (j, jp) in zip(row, cells):
                if coef != 0:
                    acc = acc + x.rows[j][jp] * coef
            coords.append(acc)
        return coords

    def component(self, x: Matrix, i: int) -> Matrix:
        """Reassembled summand-``i`` component of ``x``."""
        coords = self.project(x, i)
        zero = x.rows[0][0] * 0
        out = [[zero] * self.n for _ in range(self.n)]
        for c, b in zip(coords, self.summands[i].basis):
            for j in range(self.n):
                for jp in range(self.n):
                    if b.rows[j][jp] != 0:
                        out[j][jp] = out[j][jp] + c * b.rows[j][jp]
        return Matrix(out)

    def projectors(self) -> ProjectorFamily:
        n2 = self.n * self.n
        mats = []
        for s in self.summands:
            p = [[Fraction(0)] * n2 for _ in range(n2)]
            for t in range(s.dimension):
                w = s.i - t
                cells, members, inv = self._blocks[w]
                row = inv.rows[members.index(s.i)]
                vec = s.basis[t]
                for j, jp in cells:
                    bj = vec.rows[j][jp]
                    if bj == 0:
                        continue
                    for coef, (a, b) in zip(row, cells):
                        if coef != 0:
                            p[j * self.n + jp][a * self.n + b] += bj * coef
            mats.append(Matrix(p))
        return ProjectorFamily(self.m, tuple(mats))

    def to_json(self, with_projectors: bool = True) -> dict:
        def enc(mat: Matrix) -> list[list[str]]:
            return [[str(SymExpr.coerce(x)) for x in r] for r in mat.rows]

        out = {
            "m": self.m,
            "dimensions": self.dimensions(),
            "summands": [
                {
                    "i": s.i,
                    "dimension": s.dimension,
                    "ladder": [
                        {"position": t, "weight": s.weight(t), "matrix": enc(b)}
                        for t, b in enumerate(s.basis)
                    ],
                }
                for s in self.summands
            ],
        }
        if with_projectors:
            out["projectors"] = [
                {"i": i, "matrix": enc(p)} for i, p in enumerate(self.projectors().projectors)
            ]
        return out


@lru_cache(maxsize=16)
def isotypic_decompose(m: int) -> Decomposition:
    return Decomposition(m)


def project(x: Matrix, i: int) -> list:
    """Ladder coordinates of the summand-``i`` part of ``x`` in End(Sym^m)."""
    return isotypic_decompose(x.shape[0] - 1).project(x, i)
