"""Small dense matrices over an exact commutative ring.

Entries may be ``Fraction``, :class:`SymExpr` or :class:`Jet`; anything with
``+ - *`` and ``== 0``.  Field operations (``inverse``, ``rref``,
``nullspace``) additionally need ``/``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence


def _is_zero(x) -> bool:
    return x == 0


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=None) -> "Matrix":
        zero = one * 0 if zero is None else zero
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def flatten(self) -> list:
        return [x for r in self.rows for x in r]

    def is_zero(self) -> bool:
        return all(_is_zero(x) for r in self.rows for x in r)

    def is_upper_triangular(self) -> bool:
        return all(_is_zero(self.rows[i][j]) for i in range(len(self.rows)) for j in range(min(i, len(self.rows[0]))))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.map(lambda x: x * c)

    def __rmul__(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.rows:
            acc = [None] * m
            for t, a in enumerate(row):
                if _is_zero(a):
                    continue
                brow = other.rows[t]
                for j in range(m):
                    b = brow[j]
                    if _is_zero(b):
                        continue
                    acc[j] = a * b if acc[j] is None else acc[j] + a * b
            zero = self.rows[0][0] * 0
            out.append([zero if x is None else x for x in acc])
        return Matrix(out)

    def apply(self, vec: Sequence) -> list:
        return [sum((a * x for a, x in zip(r, vec) if not _is_zero(a)), self.rows[0][0] * 0) for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # field operations -------------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        n, m = self.shape
        pivots: list[int] = []
        r = 0
        for c in range(m):
            p = next((i for i in range(r, n) if not _is_zero(rows[i][c])), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r][c]
            rows[r] = [x / piv for x in rows[r]]
            for i in range(n):
                if i != r and not _is_zero(rows[i][c]):
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        return Matrix(rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list]:
        """Basis of the right kernel, one vector per free column."""
        R, pivots = self.rref()
        n, m = self.shape
        zero, one = self.rows[0][0] * 0, self.rows[0][0] * 0 + 1
        basis = []
        for free in (c for c in range(m) if c not in pivots):
            v = [zero] * m
            v[free] = one
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][free]
            basis.append(v)
        return basis

    def inverse(self) -> "Matrix":
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        zero = self.rows[0][0] * 0
        one = zero + 1
        aug = Matrix([list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)])
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix([r[n:] for r in R.rows])
