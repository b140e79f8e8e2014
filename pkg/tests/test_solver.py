import pytest

from linvar.kernel import SymExpr, parse
from linvar.solver import (
    DERIVATIONS,
    derive_sym2_formula,
    derive_sym6_formula,
    derive_theorem_b,
    what_if_guess,
)

A = {"a": "alpha_p", "a11": "alpha_11", "a12": "alpha_12", "a21": "alpha_21", "a22": "alpha_22",
     "ap": "alpha_prime", "D": "Delta"}


def p(text):
    return parse(text, A)


@pytest.fixture(scope="module")
def sym6(preset):
    return derive_sym6_formula(preset)


@pytest.fixture(scope="module")
def sym2(preset):
    return derive_sym2_formula(preset)


@pytest.fixture(scope="module")
def thm_b(preset):
    return derive_theorem_b(preset)


@pytest.mark.parametrize("name", sorted(DERIVATIONS))
def test_residuals_vanish(preset, name):
    report = DERIVATIONS[name](preset)
    assert report.ok, report.first_failure()
    assert all(r.is_zero() for r in report.residuals)
    assert report.first_failure() is None


def test_sym6_formula(sym6):
    assert sym6.solution == p("-a^3*a11 + 3*a*a21")
    assert sym6.solution.short() == "-a^3*a11 + 3*a*a21"


def test_sym6_delta_one_expression(sym6):
    assert sym6.extras["delta_1_expression"] == p("1/2*a^3*a12 - 3/2*a*a22")


def test_sym6_witnesses(sym6):
    names = {w.name: w for w in sym6.witnesses}
    assert names["delta^1-equation-implied"].holds
    assert names["delta-independence"].holds
    assert names["delta1-agrees"].holds
    assert names["exceptional-direction"].holds


def test_sym2_formula(sym2):
    assert sym2.solution == p("3/2*a^3*a11 + 1/2*a*a21")
    names = {w.name: w for w in sym2.witnesses}
    assert names["degenerate-direction"].holds


def test_sym2_delta_dependence_is_recorded(sym2):
    names = {w.name: w for w in sym2.witnesses}
    # not an identity from the chain rule alone ...
    assert not names["delta-independence-from-chain-rule"].holds
    assert not names["delta-independence-from-chain-rule"].required
    # ... but imposing it pins L2 to the known value
    assert names["delta-independence-forces-known-value"].holds
    assert sym2.extras["delta_independent_value"] == p("-2*ap/a")


def test_theorem_b(thm_b):
    assert thm_b.solution == p("-10*a^3*a11 + 6*L2")
    assert thm_b.free == ("alpha_11", "L2")


def test_guess_gives_equality(thm_b):
    assert what_if_guess(thm_b.solution) == p("-2*ap/a")
    assert thm_b.extras["L6_under_guess"] == p("-2*ap/a")


def test_all_alpha_zero(sym6, sym2, thm_b):
    zero = {"alpha_11": 0, "alpha_21": 0, "L2": 0}
    assert sym6.solution.subs(zero) == 0
    assert sym2.solution.subs(zero) == 0
    assert thm_b.solution.subs(zero) == 0


def test_relation_consistent_with_formulas(sym6, sym2, thm_b):
    assert thm_b.solution.subs({"L2": sym2.solution}) == sym6.solution
