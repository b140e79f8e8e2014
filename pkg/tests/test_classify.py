from fractions import Fraction

import pytest

from linvar.classify import (
    CSV_COLUMNS,
    WType,
    classify_twist,
    critical_range,
    scan,
    tate_dual_twist,
)
from linvar.gl2rep import sym_power_matrix
from linvar.kernel import Matrix

CHI, DELTA = 2, 3  # chi_cyc and delta as coprime "values"; valuations decode exponents


def valuation(x: Fraction, prime: int) -> int:
    v, num, den = 0, x.numerator, x.denominator
    while num % prime == 0:
        num //= prime
        v += 1
    while den % prime == 0:
        den //= prime
        v -= 1
    return v


def oracle_pieces(n, k):
    """(Hodge-Tate weight, delta exponent, conj sign) of Sym^n of the graded pieces, untwisted."""
    frob = sym_power_matrix(Matrix([[Fraction(CHI ** (k - 1), DELTA), Fraction(0)],
                                    [Fraction(0), Fraction(DELTA)]]), n)
    conj = sym_power_matrix(Matrix([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]), n)
    return [(valuation(frob[j, j], CHI), valuation(frob[j, j], DELTA), int(conj[j, j])) for j in range(n + 1)]


def oracle(n, k, r, pieces):
    twisted = [(hw + r, e, s * (-1) ** (r % 2)) for hw, e, s in pieces]
    critical = sum(hw <= 0 for hw, _, _ in twisted) == sum(s == -1 for _, _, s in twisted)
    if any(hw == 0 and e == 0 for hw, e, _ in twisted):
        w = "K"
    elif any(hw == 1 and e == 0 for hw, e, _ in twisted):
        w = "K(1)"
    else:
        w = "none"
    return critical, w


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_agrees_with_oracle(n):
    for k in range(2, 21):
        pieces = oracle_pieces(n, k)
        # scan a little past the claimed critical range on both sides
        for r in range(-n * (k - 1) - 3, 5):
            c = classify_twist(n, k, r)
            crit, w = oracle(n, k, r, pieces)
            assert (c.critical, c.profile.w_type.value) == (crit, w), (n, k, r)
            if crit:
                assert r in critical_range(n, k)


def test_exceptional_critical_set():
    found = set()
    for n in range(2, 11, 2):
        for k in range(2, 21):
            for c in scan(n, k):
                if c.critical and c.exceptional:
                    found.add((n, k, c.descriptor.r, c.profile.w_type))
    expected = set()
    for n in (2, 6, 10):
        for k in range(2, 21, 2):
            r0 = (n // 2) * (1 - k)
            expected |= {(n, k, r0, WType.TRIVIAL), (n, k, r0 + 1, WType.CYCLOTOMIC)}
    assert found == expected


@pytest.mark.parametrize("k", [2, 4, 8, 12])
def test_sym6_examples(k):
    c = classify_twist(6, k, 3 * (1 - k))
    assert c.critical and c.exceptional and c.profile.w_type is WType.TRIVIAL
    c = classify_twist(6, k, 3 * (1 - k) + 1)
    assert c.critical and c.exceptional and c.profile.w_type is WType.CYCLOTOMIC


def test_sym4_not_both():
    for k in range(2, 21, 2):
        c = classify_twist(4, k, 2 * (1 - k))
        assert not (c.critical and c.exceptional)


def test_tate_dual():
    for n in (2, 6, 10):
        for k in (2, 4, 10):
            r0 = (n // 2) * (1 - k)
            assert tate_dual_twist(n, k, r0) == r0 + 1
            assert classify_twist(n, k, r0).tate_dual_r == r0 + 1


def test_profile_counts():
    c = classify_twist(6, 8, -21)
    assert len(c.descriptor.hodge_tate_weights) == 7
    assert c.profile.f1_dim + c.profile.f0_quotient_dim == 7
    assert c.profile.w_dim == 1


def test_row_shape():
    assert tuple(classify_twist(2, 4, -3).row()) == CSV_COLUMNS


def test_bad_weight():
    with pytest.raises(ValueError):
        classify_twist(2, 1, 0)
