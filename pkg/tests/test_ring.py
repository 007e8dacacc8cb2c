"""The two quotient rings and the truncated series calculus over them."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trisecant.ring import AmbientClass, ChernSeries, RingMismatchError, ThetaPoly

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
theta_polys = st.builds(ThetaPoly, small_fractions, small_fractions, small_fractions)


@st.composite
def ambient_triples(draw):
    """Three ambient classes sharing one context d."""
    d = draw(st.integers(8, 12))
    out = []
    for _ in range(3):
        terms = {}
        for _ in range(draw(st.integers(0, 5))):
            key = (draw(st.integers(0, 2)), draw(st.integers(0, d - 2)))
            terms[key] = draw(small_fractions)
        out.append(AmbientClass(d, terms))
    return tuple(out)


# ---------------------------------------------------------------- ThetaPoly


def test_theta_construction_and_coefficients():
    x = ThetaPoly(2, -1, Fraction(1, 3))
    assert x.coefficient(0) == 2
    assert x.coefficient(1) == -1
    assert x.coefficient(2) == Fraction(1, 3)
    with pytest.raises(IndexError):
        x.coefficient(3)


def test_theta_rejects_floats():
    with pytest.raises(TypeError):
        ThetaPoly(0.5)


def test_theta_cube_vanishes():
    theta = ThetaPoly.theta()
    assert (theta * theta * theta).is_zero()
    assert theta ** 3 == ThetaPoly.zero()


def test_theta_inverse_pair():
    # (1 + T)(1 - T + T^2) = 1 + T^3 = 1 in the quotient.
    assert ThetaPoly(1, 1) * ThetaPoly(1, -1, 1) == ThetaPoly.one()


def test_theta_scalar_lifting():
    theta = ThetaPoly.theta()
    assert 2 + theta == ThetaPoly(2, 1)
    assert 2 - theta == ThetaPoly(2, -1)
    assert theta * Fraction(1, 2) == ThetaPoly(0, Fraction(1, 2))
    assert ThetaPoly(5) == 5


def test_theta_power_requires_nonnegative_int():
    with pytest.raises(ValueError):
        ThetaPoly.theta() ** -1


def test_theta_str():
    assert str(ThetaPoly(2, -1)) == "2 - T"
    assert str(ThetaPoly(0, 0, Fraction(1, 2))) == "1/2*T^2"
    assert str(ThetaPoly.zero()) == "0"
    assert str(ThetaPoly(-1, 1)) == "-1 + T"


def test_theta_refuses_ambient_operands():
    theta = ThetaPoly.theta()
    ambient = AmbientClass.hyperplane(8)
    with pytest.raises(RingMismatchError):
        theta * ambient
    with pytest.raises(RingMismatchError):
        theta + ambient
    with pytest.raises(RingMismatchError):
        ambient + theta
    with pytest.raises(RingMismatchError):
        ambient * theta


@given(theta_polys, theta_polys, theta_polys)
def test_theta_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + ThetaPoly.zero() == a
    assert a * ThetaPoly.one() == a
    assert (a - b) + b == a


# ------------------------------------------------------------- AmbientClass


def test_ambient_frozen_product():
    # (2T + 4h)(9Th + 10h^2) = 18 T^2 h + 56 T h^2 + 40 h^3 at d = 8.
    x = AmbientClass(8, {(1, 0): 2, (0, 1): 4})
    y = AmbientClass(8, {(1, 1): 9, (0, 2): 10})
    expected = AmbientClass(8, {(2, 1): 18, (1, 2): 56, (0, 3): 40})
    assert x * y == expected


def test_ambient_truncation():
    h = AmbientClass.hyperplane(8)
    assert (h ** 7).is_zero()  # h^(d-1) = 0
    assert not (h ** 6).is_zero()
    assert (AmbientClass.theta(8) ** 3).is_zero()
    assert AmbientClass.monomial(8, 0, 7).is_zero()
    assert AmbientClass.monomial(8, 3, 0).is_zero()


def test_ambient_context_validation():
    with pytest.raises(ValueError):
        AmbientClass(7)
    with pytest.raises(ValueError):
        AmbientClass(8, {(-1, 0): 1})
    with pytest.raises(RingMismatchError):
        AmbientClass.hyperplane(8) + AmbientClass.hyperplane(9)
    with pytest.raises(RingMismatchError):
        AmbientClass.hyperplane(8) * AmbientClass.hyperplane(9)


def test_ambient_from_theta():
    x = AmbientClass.from_theta(ThetaPoly(2, -1, Fraction(1, 2)), 9)
    assert x.coefficient(0, 0) == 2
    assert x.coefficient(1, 0) == -1
    assert x.coefficient(2, 0) == Fraction(1, 2)
    assert x.coefficient(0, 1) == 0


def test_ambient_coefficient_is_range_checked():
    x = AmbientClass.one(8)
    with pytest.raises(IndexError):
        x.coefficient(3, 0)
    with pytest.raises(IndexError):
        x.coefficient(0, 7)


def test_ambient_homogeneity():
    x = AmbientClass(8, {(0, 3): 4, (1, 2): 9, (2, 1): 6})
    assert x.is_homogeneous(3)
    assert not x.is_homogeneous(2)
    assert not (x + AmbientClass.one(8)).is_homogeneous(3)


def test_ambient_str_goldens():
    x = AmbientClass(8, {(0, 3): 4, (1, 2): 9, (2, 1): 6})
    assert str(x) == "4h^3 + 9*T*h^2 + 6*T^2*h"
    assert str(AmbientClass.monomial(8, 0, 2, Fraction(25, 2))) == "25/2*h^2"
    assert str(-AmbientClass.hyperplane(8)) == "-h"
    assert str(AmbientClass.zero(9)) == "0"
    assert str(AmbientClass(8, {(1, 0): 2, (0, 1): 4})) == "4h + 2*T"


def test_ambient_scalar_ops():
    h = AmbientClass.hyperplane(8)
    assert 1 - h == AmbientClass(8, {(0, 0): 1, (0, 1): -1})
    assert h * 0 == AmbientClass.zero(8)
    assert (h * Fraction(3, 2)).coefficient(0, 1) == Fraction(3, 2)
    assert AmbientClass.one(8) == 1


def _naive_mul(x: AmbientClass, y: AmbientClass) -> AmbientClass:
    """Dense quadruple loop over every grid slot: the reference product."""
    d = x.d
    terms: dict[tuple[int, int], Fraction] = {}
    for a1 in range(3):
        for b1 in range(d - 1):
            c1 = x.coefficient(a1, b1)
            if not c1:
                continue
            for a2 in range(3):
                for b2 in range(d - 1):
                    c2 = y.coefficient(a2, b2)
                    if not c2:
                        continue
                    a, b = a1 + a2, b1 + b2
                    if a <= 2 and b <= d - 2:
                        terms[(a, b)] = terms.get((a, b), Fraction(0)) + c1 * c2
    return AmbientClass(d, terms)


@given(ambient_triples())
def test_ambient_mul_matches_naive(triple):
    x, y, _ = triple
    assert x * y == _naive_mul(x, y)


@given(ambient_triples())
def test_ambient_ring_axioms(triple):
    x, y, z = triple
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + x.zero_like() == x
    assert x * x.one_like() == x
    assert (x - y) + y == x
    # nilpotent multiples annihilate everything
    assert (x * (AmbientClass.theta(x.d) ** 3)).is_zero()
    assert (x * (AmbientClass.hyperplane(x.d) ** (x.d - 1))).is_zero()


# -------------------------------------------------------------- ChernSeries


def test_series_needs_a_constant():
    with pytest.raises(ValueError):
        ChernSeries([])


def test_series_coefficient_range():
    s = ChernSeries([ThetaPoly.one()], 3)
    assert s.coefficient(3) == ThetaPoly.zero()
    with pytest.raises(IndexError):
        s.coefficient(4)


def test_series_geometric_inverse():
    # 1 / (1 - h t) = sum_k h^k t^k.
    d, order = 8, 6
    one = AmbientClass.one(d)
    h = AmbientClass.hyperplane(d)
    series = ChernSeries([one, -h], order)
    inv = series.inverse()
    for k in range(order + 1):
        assert inv.coefficient(k) == h ** k
    assert series * inv == ChernSeries.constant(one, order)


def test_series_nilpotent_inverse():
    # 1 / (1 + T t) = 1 - T t + T^2 t^2, exactly, since T^3 = 0.
    theta = ThetaPoly.theta()
    series = ChernSeries([ThetaPoly.one(), theta], 4)
    expected = ChernSeries(
        [ThetaPoly.one(), -theta, theta * theta, ThetaPoly.zero()], 4
    )
    assert series.inverse() == expected


def test_series_inverse_requires_unit_constant():
    with pytest.raises(ValueError):
        ChernSeries([ThetaPoly(2)], 3).inverse()


def test_series_exp_of_nilpotent():
    theta = ThetaPoly.theta()
    series = ChernSeries([ThetaPoly.zero(), -theta], 5)
    result = series.exp()
    assert result.coefficient(0) == ThetaPoly.one()
    assert result.coefficient(1) == -theta
    assert result.coefficient(2) == theta * theta * Fraction(1, 2)
    assert result.coefficient(3) == ThetaPoly.zero()


def test_series_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        ChernSeries([ThetaPoly.one()], 3).exp()


def test_series_substitution_golden():
    # e^(-T t) with t -> t/(1 - h t): the t^2 coefficient is -T h + T^2/2.
    d, order = 8, 4
    one = AmbientClass.one(d)
    zero = AmbientClass.zero(d)
    h = AmbientClass.hyperplane(d)
    theta = AmbientClass.theta(d)
    outer = ChernSeries([one, -theta, theta * theta * Fraction(1, 2)], order)
    inner = ChernSeries([zero] + [h ** k for k in range(order)], order)
    composed = outer.compose(inner)
    assert composed.coefficient(0) == one
    assert composed.coefficient(1) == -theta
    assert composed.coefficient(2) == -(theta * h) + theta * theta * Fraction(1, 2)


def test_series_compose_requires_zero_inner_constant():
    s = ChernSeries([ThetaPoly.one(), ThetaPoly.theta()], 3)
    with pytest.raises(ValueError):
        s.compose(ChernSeries([ThetaPoly.one()], 3))
    with pytest.raises(TypeError):
        s.compose(7)


def test_series_telescoping_product():
    # (1 + h t)(1 - h t + h^2 t^2) = 1 + h^3 t^3.
    d, order = 9, 5
    one = AmbientClass.one(d)
    h = AmbientClass.hyperplane(d)
    left = ChernSeries([one, h], order)
    right = ChernSeries([one, -h, h * h], order)
    expected = ChernSeries([one, one * 0, one * 0, h ** 3], order)
    assert left * right == expected


def test_series_binary_ops_truncate_to_smaller_order():
    one = ThetaPoly.one()
    theta = ThetaPoly.theta()
    a = ChernSeries([one, theta], 5)
    b = ChernSeries([one, theta], 2)
    assert (a + b).order == 2
    assert (a * b).order == 2


def test_series_scaling_by_ring_element():
    theta = ThetaPoly.theta()
    s = ChernSeries([ThetaPoly.one(), theta], 2)
    scaled = s * theta
    assert scaled.coefficient(0) == theta
    assert scaled.coefficient(1) == theta * theta


@st.composite
def theta_series(draw, constant=None):
    coeffs = [draw(theta_polys) for _ in range(draw(st.integers(1, 4)))]
    if constant is not None:
        coeffs[0] = constant
    return ChernSeries(coeffs, 4)


@given(theta_series(constant=ThetaPoly.one()))
def test_series_inverse_contract(s):
    assert s * s.inverse() == ChernSeries.constant(ThetaPoly.one(), s.order)


@given(theta_series(constant=ThetaPoly.zero()), theta_series(constant=ThetaPoly.zero()))
def test_series_exp_group_law(a, b):
    assert a.exp() * b.exp() == (a + b).exp()


@given(theta_series())
def test_series_compose_identity(s):
    identity = ChernSeries([ThetaPoly.zero(), ThetaPoly.one()], s.order)
    assert s.compose(identity) == s


@given(theta_series(), theta_series(), theta_series(constant=ThetaPoly.zero()))
def test_series_compose_is_multiplicative(a, b, g):
    assert (a * b).compose(g) == a.compose(g) * b.compose(g)
