from fractions import Fraction

import pytest
from hypothesis import strategies as st

from linvar.kernel import Matrix, SymExpr
from linvar.presets import load_preset

NAMES = ("alpha_p", "Delta", "x", "y")

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def polynomials(draw, max_terms=3):
    terms = draw(st.lists(
        st.tuples(small_fractions, st.sampled_from(NAMES), st.integers(0, 2)),
        min_size=0, max_size=max_terms,
    ))
    acc = SymExpr.const(draw(small_fractions))
    for c, name, e in terms:
        acc = acc + SymExpr.sym(name) ** e * c
    return acc


@st.composite
def rational_functions(draw):
    num = draw(polynomials())
    den = draw(polynomials().filter(lambda p: not p.is_zero()))
    return num / den


@st.composite
def rational_matrices(draw, n=2):
    return Matrix([[draw(small_fractions) for _ in range(n)] for _ in range(n)])


@pytest.fixture(scope="session")
def preset():
    return load_preset()


def frac(x) -> Fraction:
    return Fraction(x)
