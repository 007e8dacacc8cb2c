"""The Chern-series pipeline and the three determinant routes.

The heavyweight oracle here is a Leibniz permutation-sum determinant: for
small d the banded matrix is evaluated as a literal signed sum over all
permutations, with no recurrence and no cofactor logic shared with the
production code."""

from fractions import Fraction
from itertools import permutations

import pytest

from trisecant.porteous import (
    METHODS,
    PorteousMatrix,
    TwistedBundle,
    chern_coefficient_formula,
    chern_coefficients,
    chern_series_from_character,
    determinant_cofactor,
    determinant_formula,
    determinant_recurrence,
    multiplication_map_bundles,
    porteous_class,
    recurrence_determinants,
    source_chern_series,
    target_chern_series,
    twist_by_hyperplane,
    virtual_chern_series,
    virtual_chern_series_closed_form,
    virtual_chern_series_expansion,
)
from trisecant.riemann_roch import bundle_characters
from trisecant.ring import AmbientClass, ChernSeries, ThetaPoly


def test_surface_bundle_chern_series_is_exponential():
    # A bundle with character r - T has total Chern series e^(-T t).
    d = 8
    sections, _ = bundle_characters(d)
    series = chern_series_from_character(sections, d)
    theta = AmbientClass.theta(d)
    assert series.coefficient(0) == AmbientClass.one(d)
    assert series.coefficient(1) == -theta
    assert series.coefficient(2) == theta * theta * Fraction(1, 2)
    assert series.coefficient(3) == AmbientClass.zero(d)


def test_dualizing_negates_only_the_odd_part():
    d = 8
    sections, _ = bundle_characters(d)
    plain = chern_series_from_character(sections, d)
    dual = chern_series_from_character(sections, d, dual=True)
    assert dual.coefficient(1) == -plain.coefficient(1)
    assert dual.coefficient(2) == plain.coefficient(2)


def test_twist_of_trivial_series_is_binomial():
    d, order = 8, 5
    one = AmbientClass.one(d)
    h = AmbientClass.hyperplane(d)
    trivial = ChernSeries.constant(one, order)
    twisted = twist_by_hyperplane(trivial, 3, 1)
    # (1 - h t)^3
    assert twisted.coefficient(0) == one
    assert twisted.coefficient(1) == h * (-3)
    assert twisted.coefficient(2) == h * h * 3
    assert twisted.coefficient(3) == h ** 3 * (-1)
    assert twisted.coefficient(4) == AmbientClass.zero(d)
    # the opposite sign twists by O(+1)
    up = twist_by_hyperplane(trivial, 2, -1)
    assert up.coefficient(1) == h * 2
    assert up.coefficient(2) == h * h


def test_twist_validation():
    d = 8
    one = AmbientClass.one(d)
    trivial = ChernSeries.constant(one, 4)
    assert twist_by_hyperplane(trivial, 3, 0) is trivial
    with pytest.raises(ValueError):
        twist_by_hyperplane(ChernSeries.constant(one * 2, 4), 3, 1)
    with pytest.raises(ValueError):
        twist_by_hyperplane(trivial, -1, 1)
    with pytest.raises(TypeError):
        twist_by_hyperplane(ChernSeries.constant(ThetaPoly.one(), 4), 3, 1)


def test_multiplication_map_bundles_shape():
    source, target = multiplication_map_bundles(9)
    assert isinstance(source, TwistedBundle)
    assert source.base.label == "residual"
    assert source.twist_power == 1
    assert not source.dual
    assert source.rank == 5
    assert target.base.label == "sections"
    assert target.twist_power == 0
    assert target.dual
    assert target.rank == 2


def test_source_and_target_series_constants():
    d = 10
    assert source_chern_series(d).coefficient(0) == AmbientClass.one(d)
    assert target_chern_series(d).coefficient(0) == AmbientClass.one(d)


@pytest.mark.parametrize("d", (8, 10, 13))
def test_twisted_series_exponential_forms(d):
    """Target is exp(T t); source is (1 - h t)^(d-4) exp(-T t / (1 - h t))."""
    order = d - 5
    one = AmbientClass.one(d)
    h = AmbientClass.hyperplane(d)
    theta = AmbientClass.theta(d)
    t_theta = ChernSeries([AmbientClass.zero(d), theta], order)
    assert target_chern_series(d) == t_theta.exp()
    one_minus = ChernSeries([one, -h], order)
    argument = -t_theta * one_minus.inverse()
    expected_source = (one_minus ** (d - 4)) * argument.exp()
    assert source_chern_series(d) == expected_source


@pytest.mark.parametrize("d", range(8, 15))
def test_virtual_series_three_forms_agree(d):
    division = virtual_chern_series(d)
    assert division == virtual_chern_series_closed_form(d)
    assert division == virtual_chern_series_expansion(d)


def test_virtual_series_agrees_beyond_default_order():
    d = 8
    order = 7
    division = virtual_chern_series(d, order)
    assert division == virtual_chern_series_closed_form(d, order)
    assert division == virtual_chern_series_expansion(d, order)


def test_order_below_matrix_size_is_refused():
    with pytest.raises(ValueError):
        virtual_chern_series(10, order=2)


def test_first_coefficients_golden_d8():
    c = chern_coefficients(8)
    assert c[0] == AmbientClass(8, {(0, 1): 4, (1, 0): 2})
    assert c[1] == AmbientClass(8, {(0, 2): 10, (1, 1): 9, (2, 0): 2})
    assert c[2] == AmbientClass(8, {(0, 3): 20, (1, 2): 25, (2, 1): 10})


def test_first_chern_coefficient_for_general_d():
    # c_1 = (d - 4) h + 2 T.
    for d in (8, 11, 14):
        assert chern_coefficient_formula(1, d) == AmbientClass(
            d, {(0, 1): d - 4, (1, 0): 2}
        )


def test_coefficient_formula_range():
    with pytest.raises(ValueError):
        chern_coefficient_formula(0, 8)
    with pytest.raises(ValueError):
        chern_coefficient_formula(4, 8)


def test_chern_coefficients_cross_check_runs():
    with_check = chern_coefficients(9)
    without = chern_coefficients(9, cross_check=False)
    assert with_check == without


def test_porteous_matrix_shape():
    matrix = PorteousMatrix.build(10)
    assert matrix.n == 5
    assert matrix.has_hessenberg_shape()
    one = AmbientClass.one(10)
    for i in range(4):
        assert matrix.entry(i + 1, i) == one
    assert matrix.entry(4, 0).is_zero()
    assert matrix.entry(0, 0) == chern_coefficient_formula(1, 10)
    assert matrix.entry(0, 4) == chern_coefficient_formula(5, 10)


def _leibniz_determinant(matrix: PorteousMatrix) -> AmbientClass:
    n = matrix.n
    total = matrix.entry(0, 0).zero_like()
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = matrix.entry(0, perm[0])
        for row in range(1, n):
            term = term * matrix.entry(row, perm[row])
        total = total + term if inversions % 2 == 0 else total - term
    return total


@pytest.mark.parametrize("d", (8, 9, 10))
def test_determinants_match_leibniz_sum(d):
    oracle = _leibniz_determinant(PorteousMatrix.build(d))
    assert determinant_cofactor(d).x1 == oracle
    assert determinant_recurrence(d).x1 == oracle
    assert determinant_formula(d - 5, d) == oracle


def test_small_recurrence_determinants():
    d = 10
    c = chern_coefficients(d)
    dets = recurrence_determinants(d)
    assert dets[0] == AmbientClass.one(d)
    assert dets[1] == c[0]
    assert dets[2] == c[0] * c[0] - c[1]


def test_secant_class_golden_d8():
    expected = AmbientClass(8, {(0, 3): 4, (1, 2): 9, (2, 1): 6})
    for method in METHODS:
        result = porteous_class(8, method=method)
        assert result.x1 == expected
        assert result.method == method
    assert str(expected) == "4h^3 + 9*T*h^2 + 6*T^2*h"


def test_secant_class_golden_d9():
    expected = AmbientClass(
        9, {(0, 4): 5, (1, 3): 14, (2, 2): Fraction(25, 2)}
    )
    assert porteous_class(9).x1 == expected


@pytest.mark.parametrize("d", range(8, 15))
def test_secant_class_is_homogeneous(d):
    for method in METHODS:
        x1 = porteous_class(d, method=method).x1
        assert x1.is_homogeneous(d - 5)
        # the theta-free part is always (d - 4) h^(d-5)
        assert x1.coefficient(0, d - 5) == d - 4


def test_determinant_formula_validation():
    with pytest.raises(ValueError):
        determinant_formula(2, 10)
    with pytest.raises(ValueError):
        determinant_formula(6, 10)


def test_porteous_class_validation():
    with pytest.raises(ValueError):
        porteous_class(7)
    with pytest.raises(ValueError):
        porteous_class(8, method="gaussian")


def test_closed_form_matches_recurrence_along_the_chain():
    for d in (11, 14):
        dets = recurrence_determinants(d)
        for n in range(3, d - 4):
            assert determinant_formula(n, d) == dets[n]
