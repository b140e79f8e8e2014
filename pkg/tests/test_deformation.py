from fractions import Fraction

import pytest

from linvar.characters import DELTA, LOG_U, EvaluationPoint
from linvar.deformation import (
    CoordinatePair,
    ExceptionalDirectionError,
    Point,
    build_family,
    diagonal_log_derivatives,
    extract_cocycle,
    printed_entry,
    printed_scalar,
    slope,
    summand_coordinates,
    weight_zero_pair,
)
from linvar.gl2rep import isotypic_decompose
from linvar.kernel import Matrix, SymExpr, parse
from linvar.presets import PresetError, preset_from_dict
from linvar.solver import _chain_rule_substitution

A = {"a": "alpha_p", "a11": "alpha_11", "a12": "alpha_12", "a21": "alpha_21", "a22": "alpha_22",
     "ap": "alpha_prime", "D": "Delta"}
U_SYMBOLS = {"u", "chi_u", "log_u"}


def p(text):
    return parse(text, A)


@pytest.fixture(scope="module")
def family(preset):
    return build_family(preset)


@pytest.fixture(scope="module")
def cocycle(family):
    return extract_cocycle(family)


def test_base_matches_sym3_diagonal(family):
    for point in (Point.FROBENIUS, Point.REC_UNIT):
        ident = family.base_identification(point)
        assert len(ident) == 6
    assert family.base_matrix(Point.FROBENIUS).diagonal() == tuple(p(x) for x in ("a^-3", "a^-1", "a", "a^3"))


def test_wrong_diagonal_rejected():
    bad = {
        "theta1": {"cyc": [1, 0, 1]},
        "theta2": {"cyc": [2, 1, 0]},
        "mu1": {"frob": "alpha_p^3", "partials": ["alpha_11", "alpha_12"]},
        "mu2": {"frob": "alpha_p^-1", "partials": ["alpha_21", "alpha_22"]},
        "gl2_mu": {"frob": "alpha_p", "derivative": "alpha_prime"},
    }
    with pytest.raises(PresetError):
        build_family(preset_from_dict(bad))


@pytest.mark.parametrize("point", list(Point))
def test_cocycle_upper_triangular(cocycle, point):
    assert cocycle[point].is_upper_triangular()


@pytest.mark.parametrize("at,point", [(EvaluationPoint.FROBENIUS, Point.FROBENIUS),
                                      (EvaluationPoint.REC_UNIT, Point.REC_UNIT)])
def test_diagonal_identity(preset, cocycle, at, point):
    d = diagonal_log_derivatives(preset, at)
    expected = (d["a"] + d["b"] + d["m1"], d["b"] + d["m2"], d["a"] - d["m2"], -d["m1"])
    assert cocycle[point].diagonal() == expected


def test_cocycle_rule(family, cocycle):
    """c(gh) = Ad(rho(h)^-1) c(g) + c(h) with g = Frob_p, h = rec(u)."""
    h = family.base_matrix(Point.REC_UNIT)
    lhs = cocycle[Point.PRODUCT]
    rhs = h.inverse() @ cocycle[Point.FROBENIUS] @ h + cocycle[Point.REC_UNIT]
    assert lhs == rhs


@pytest.mark.parametrize("i", range(4))
def test_negative_weights_vanish(cocycle, i):
    for pair in summand_coordinates(cocycle, i):
        if pair.weight < 0:
            assert pair.first.is_zero() and pair.second.is_zero()


def test_symplectic_shape_of_weight_zero_parts(cocycle):
    # the Sym^4 piece is absent; the trace only sees the similitude, whose
    # Frobenius part is constant
    pair = weight_zero_pair(cocycle, 2)
    assert pair.first.is_zero() and pair.second.is_zero()
    trace = weight_zero_pair(cocycle, 0)
    assert trace.second.is_zero() and trace.first.is_constant()


@pytest.mark.parametrize("i", range(4))
def test_weight_nonpositive_coordinates_are_u_free(cocycle, i):
    for pair in summand_coordinates(cocycle, i):
        if pair.weight <= 0:
            syms = set(pair.first.free_symbols()) | set(pair.second.free_symbols())
            assert not syms & U_SYMBOLS


def test_coordinates_affine_in_delta(cocycle):
    for i in range(4):
        for pair in summand_coordinates(cocycle, i):
            for e in (pair.first, pair.second):
                assert e.num.degree_in("Delta") <= 1 and e.den.degree_in("Delta") == 0


def test_printed_scalars():
    assert printed_scalar(3) == Fraction(1, 60)
    assert printed_scalar(1) == Fraction(3, 10)


@pytest.mark.parametrize("i", [1, 3])
def test_weight_zero_proportional_to_printed_entry(preset, cocycle, i):
    d = diagonal_log_derivatives(preset, EvaluationPoint.FROBENIUS)
    assert weight_zero_pair(cocycle, i).second == printed_entry(i, d) * printed_scalar(i)


def test_sym6_coordinates(cocycle):
    pair = weight_zero_pair(cocycle, 3).scaled(1 / SymExpr.const(printed_scalar(3)))
    assert pair.first == p("1 - 3*D")
    assert pair.second == p("(1-D)*(-a^3*a11 + 3*a*a21) + D*(-a^3*a12 + 3*a*a22)")


def test_sym2_coordinates(cocycle):
    pair = weight_zero_pair(cocycle, 1).scaled(1 / SymExpr.const(printed_scalar(1)))
    assert pair.first == p("D - 2")
    assert pair.second == p("(1-D)*(-3*a^3*a11 - a*a21) + D*(-3*a^3*a12 - a*a22)")


def test_gl2_direction_matches_sym3_of_gl2_family(preset, family):
    # Delta = 1/3 is the tangent of (2s, s); there the diagonal is Sym^3 of the
    # GL2 family's diagonal log-derivatives, scaled by 1/3
    c = extract_cocycle(family, Fraction(1, 3))
    sub = _chain_rule_substitution(preset)
    frob = [x.subs(sub) for x in c[Point.FROBENIUS].diagonal()]
    r = p("ap/a")
    assert frob == [x / 3 for x in (-3 * r, -r, r, 3 * r)]
    rec = c[Point.REC_UNIT].diagonal()
    assert list(rec) == [x * LOG_U / 3 for x in (-3, -2, -1, 0)]


def test_exceptional_directions():
    fam = build_family()
    first6 = weight_zero_pair(extract_cocycle(fam, Fraction(1, 3)), 3).first
    first2 = weight_zero_pair(extract_cocycle(fam, 2), 1).first
    assert first6.is_zero() and first2.is_zero()
    with pytest.raises(ExceptionalDirectionError):
        slope(weight_zero_pair(extract_cocycle(fam, Fraction(1, 3)), 3))


def test_slope_scale_invariant(cocycle):
    pair = weight_zero_pair(cocycle, 3)
    base = slope(pair)
    for lam in (SymExpr.const(-7), p("a^2 + D"), p("1/(a11 - 3)")):
        assert slope(pair.scaled(lam)) == base


def test_sym6_slope_at_zero(cocycle):
    pair = weight_zero_pair(cocycle, 3)
    at0 = CoordinatePair(pair.first.subs({"Delta": 0}), pair.second.subs({"Delta": 0}))
    assert slope(at0) == p("-a^3*a11 + 3*a*a21")


def test_ladder_projection_matches_direct_component(cocycle):
    dec = isotypic_decompose(3)
    x = cocycle[Point.FROBENIUS]
    total = dec.component(x, 0)
    for i in range(1, 4):
        total = total + dec.component(x, i)
    assert total == x
