"""Chern-class setup on (Picard surface) x P^(d-2) and the banded Porteous
determinant carrying the secant-variety class.

The secant locus is where the multiplication map

    (residual sections) (x) O(-1)  -->  (sections)* (x) O

drops rank, and Porteous' formula evaluates its class as the (d-5)-th
coefficient determinant of the virtual quotient series c_t(target - source).
Every stage below is computed along at least two independent routes
(series division against closed binomial formulas, and three different
determinant evaluations) and the routes are compared, never trusted singly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .degree import binomial
from .ring import AmbientClass, ChernSeries
from .riemann_roch import BundleData, bundle_characters

__all__ = [
    "METHODS",
    "TwistedBundle",
    "PorteousMatrix",
    "PorteousResult",
    "chern_series_from_character",
    "twist_by_hyperplane",
    "multiplication_map_bundles",
    "source_chern_series",
    "target_chern_series",
    "virtual_chern_series",
    "virtual_chern_series_closed_form",
    "virtual_chern_series_expansion",
    "chern_coefficient_formula",
    "chern_coefficients",
    "recurrence_determinants",
    "determinant_cofactor",
    "determinant_recurrence",
    "determinant_formula",
    "porteous_class",
]

METHODS = ("cofactor", "recurrence", "closed-form")


def _require_degree(d: int) -> None:
    if not isinstance(d, int) or d < 8:
        raise ValueError("the Porteous pipeline requires an integer d >= 8")


def _normalize_order(d: int, order: int | None) -> int:
    """Default truncation order is d - 5, the size of the determinant; deeper
    orders are allowed for cross-checks but shallower ones are refused."""
    _require_degree(d)
    if order is None:
        return d - 5
    if not isinstance(order, int) or order < d - 5:
        raise ValueError(f"truncation order must be an integer >= d - 5 = {d - 5}")
    return order


def chern_series_from_character(
    bundle: BundleData, d: int, order: int | None = None, dual: bool = False
) -> ChernSeries:
    """Total Chern series of a Picard-surface bundle, pulled back to the
    ambient product.

    On a surface the character determines the Chern classes exactly:
    c1 = ch_1 and c2 = ch_1^2 / 2 - ch_2.  Dualizing negates the odd part.
    """
    order = _normalize_order(d, order)
    ch = bundle.chern_character
    c1 = ch.c1
    c2 = c1 * c1 / 2 - ch.c2
    if dual:
        c1 = -c1
    coeffs = [
        AmbientClass.one(d),
        AmbientClass.monomial(d, 1, 0, c1),
        AmbientClass.monomial(d, 2, 0, c2),
    ]
    return ChernSeries(coeffs, order)


def twist_by_hyperplane(series: ChernSeries, rank: int, sign: int) -> ChernSeries:
    """Chern series of (bundle tensor O(-sign)) from the bundle's series.

    Every Chern root shifts by -sign*h, which on total Chern series reads

        c_t  |-->  (1 - sign*h*t)^rank * c_(t / (1 - sign*h*t)).
    """
    first = series.coeffs[0]
    if not isinstance(first, AmbientClass):
        raise TypeError("hyperplane twists need ambient coefficients")
    if first != first.one_like():
        raise ValueError("a total Chern series must start at 1")
    if not isinstance(rank, int) or rank < 0:
        raise ValueError("rank must be a non-negative integer")
    if sign == 0:
        return series
    d = first.d
    order = series.order
    step = AmbientClass.hyperplane(d) * sign
    one_minus = ChernSeries([AmbientClass.one(d), -step], order)
    reparam = _shift_t(one_minus.inverse())  # t / (1 - sign*h*t)
    return (one_minus ** rank) * series.compose(reparam)


def _shift_t(series: ChernSeries) -> ChernSeries:
    """Multiply by t, dropping the top coefficient (fixed truncation)."""
    zero = series.coeffs[0].zero_like()
    return ChernSeries((zero,) + series.coeffs[:-1], series.order)


@dataclass(frozen=True)
class TwistedBundle:
    """A pulled-back bundle together with a recorded (not yet expanded)
    hyperplane twist and optional dualization."""

    base: BundleData
    twist_power: int  # number of O(-1) factors tensored in: 0 or 1 here
    dual: bool

    @property
    def rank(self) -> int:
        return self.base.rank

    def chern_series(self, d: int, order: int | None = None) -> ChernSeries:
        series = chern_series_from_character(self.base, d, order, dual=self.dual)
        return twist_by_hyperplane(series, self.rank, self.twist_power)


def multiplication_map_bundles(d: int) -> tuple[TwistedBundle, TwistedBundle]:
    """Source and target of the multiplication map whose degeneracy locus is
    the secant variety: (residual (x) O(-1), dual sections)."""
    sections, residual = bundle_characters(d)
    source = TwistedBundle(base=residual, twist_power=1, dual=False)
    target = TwistedBundle(base=sections, twist_power=0, dual=True)
    return source, target


def source_chern_series(d: int, order: int | None = None) -> ChernSeries:
    return multiplication_map_bundles(d)[0].chern_series(d, order)


def target_chern_series(d: int, order: int | None = None) -> ChernSeries:
    return multiplication_map_bundles(d)[1].chern_series(d, order)


def virtual_chern_series(d: int, order: int | None = None) -> ChernSeries:
    """c_t(target - source) by honest series division."""
    return _virtual_cached(d, _normalize_order(d, order))


@lru_cache(maxsize=None)
def _virtual_cached(d: int, order: int) -> ChernSeries:
    return target_chern_series(d, order) * source_chern_series(d, order).inverse()


def virtual_chern_series_closed_form(d: int, order: int | None = None) -> ChernSeries:
    """The same quotient in closed exponential form,

        (1 - h*t)^(4-d) * exp((2*T*t - T*h*t^2) / (1 - h*t)),

    assembled from inversion, exponential and product only; no division by
    the source series is involved.
    """
    order = _normalize_order(d, order)
    one = AmbientClass.one(d)
    h = AmbientClass.hyperplane(d)
    theta = AmbientClass.theta(d)
    one_minus = ChernSeries([one, -h], order)
    numerator = ChernSeries([AmbientClass.zero(d), theta * 2, -(theta * h)], order)
    argument = numerator * one_minus.inverse()
    return (one_minus ** (d - 4)).inverse() * argument.exp()


def virtual_chern_series_expansion(d: int, order: int | None = None) -> ChernSeries:
    """Term-by-term binomial expansion of the virtual quotient.

    Grouping the three powers of (1 - h*t) over the common tail
    (1 - h*t)^(2-d) = sum_k binomial(d+k-3, k) h^k t^k leaves five shifted
    sums, evaluated here coefficient by coefficient.
    """
    order = _normalize_order(d, order)
    half = Fraction(1, 2)
    mono = AmbientClass.monomial
    coeffs = [AmbientClass.zero(d) for _ in range(order + 1)]
    for k in range(order + 1):
        b = Fraction(binomial(d + k - 3, k))
        coeffs[k] = coeffs[k] + mono(d, 0, k, b)
        if k + 1 <= order:
            coeffs[k + 1] = coeffs[k + 1] + mono(d, 1, k, 2 * b) + mono(d, 0, k + 1, -2 * b)
        if k + 2 <= order:
            coeffs[k + 2] = (
                coeffs[k + 2]
                + mono(d, 2, k, 2 * b)
                + mono(d, 1, k + 1, -3 * b)
                + mono(d, 0, k + 2, b)
            )
        if k + 3 <= order:
            coeffs[k + 3] = coeffs[k + 3] + mono(d, 1, k + 2, b) + mono(d, 2, k + 1, -2 * b)
        if k + 4 <= order:
            coeffs[k + 4] = coeffs[k + 4] + mono(d, 2, k + 2, half * b)
    return ChernSeries(coeffs, order)


def chern_coefficient_formula(i: int, d: int) -> AmbientClass:
    """Closed binomial formula for the i-th virtual Chern coefficient,
    valid on 1 <= i <= d - 5."""
    _require_degree(d)
    if not isinstance(i, int) or not 1 <= i <= d - 5:
        raise ValueError(f"coefficient index must lie in 1..{d - 5}, got {i}")
    half = Fraction(1, 2)
    value = AmbientClass.monomial(d, 0, i, binomial(d - 5 + i, i))
    value = value + AmbientClass.monomial(
        d, 1, i - 1, binomial(d - 5 + i, i - 1) + binomial(d - 6 + i, i - 1)
    )
    if i >= 2:
        value = value + AmbientClass.monomial(
            d, 2, i - 2, 2 * binomial(d - 6 + i, i - 2) + half * binomial(d - 7 + i, i - 4)
        )
    return value


def chern_coefficients(
    d: int, order: int | None = None, *, cross_check: bool = True
) -> tuple[AmbientClass, ...]:
    """Virtual Chern coefficients c_1..c_order from the series division.

    By default each coefficient in the formula's range is compared against
    the closed binomial form; a mismatch means the pipeline is broken and
    raises rather than letting a wrong class flow on.
    """
    order = _normalize_order(d, order)
    series = virtual_chern_series(d, order)
    coefficients = tuple(series.coefficient(i) for i in range(1, order + 1))
    if cross_check:
        for i in range(1, min(order, d - 5) + 1):
            formula = chern_coefficient_formula(i, d)
            if coefficients[i - 1] != formula:
                raise ArithmeticError(
                    f"virtual Chern coefficient mismatch at i={i}, d={d}: "
                    f"division gave {coefficients[i - 1]}, formula gave {formula}"
                )
    return coefficients


@dataclass(frozen=True)
class PorteousMatrix:
    """The (d-5) x (d-5) banded coefficient matrix: entry (r, c) holds
    c_(c-r+1), so the diagonal is c_1, the subdiagonal is 1 and everything
    below it vanishes."""

    n: int
    entries: tuple[tuple[AmbientClass, ...], ...]

    @classmethod
    def build(cls, d: int, coefficients: tuple[AmbientClass, ...] | None = None) -> PorteousMatrix:
        _require_degree(d)
        cis = chern_coefficients(d) if coefficients is None else tuple(coefficients)
        n = d - 5
        if len(cis) < n:
            raise ValueError(f"need at least {n} coefficients, got {len(cis)}")
        one = AmbientClass.one(d)
        zero = AmbientClass.zero(d)
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                k = c - r + 1
                row.append(zero if k < 0 else one if k == 0 else cis[k - 1])
            rows.append(tuple(row))
        return cls(n=n, entries=tuple(rows))

    def entry(self, r: int, c: int) -> AmbientClass:
        return self.entries[r][c]

    def has_hessenberg_shape(self) -> bool:
        one = self.entries[0][0].one_like()
        for r in range(self.n):
            for c in range(self.n):
                if c == r - 1 and self.entries[r][c] != one:
                    return False
                if c < r - 1 and not self.entries[r][c].is_zero():
                    return False
        return True


@dataclass(frozen=True)
class PorteousResult:
    """Outcome of one determinant route; the class is homogeneous of total
    degree d - 5 whenever the inputs are sound."""

    x1: AmbientClass
    method: str


def determinant_cofactor(
    d: int, coefficients: tuple[AmbientClass, ...] | None = None
) -> PorteousResult:
    """Determinant by first-column cofactor expansion on the explicit matrix.

    The ring has zero divisors, so elimination (which divides) is out; the
    banded shape keeps a division-free expansion at O(n^2) ring products.
    ``dets[s]`` is the determinant of the trailing s x s principal submatrix,
    whose first column has just two nonzero entries: c_1 on the diagonal and
    the subdiagonal 1.  Expanding there telescopes through minors whose own
    first columns again hold one coefficient over a 1.
    """
    _require_degree(d)
    matrix = PorteousMatrix.build(d, coefficients)
    n = matrix.n
    dets = [AmbientClass.one(d)]
    for size in range(1, n + 1):
        top = n - size
        if size == 1:
            dets.append(matrix.entry(top, top))
            continue
        minor = matrix.entry(top, n - 1)  # innermost 1x1 of the chain
        for k in range(size - 1, 1, -1):
            minor = matrix.entry(top, top + k - 1) * dets[size - k] - minor
        dets.append(matrix.entry(top, top) * dets[size - 1] - minor)
    return PorteousResult(x1=dets[n], method="cofactor")


def recurrence_determinants(
    d: int, coefficients: tuple[AmbientClass, ...] | None = None
) -> tuple[AmbientClass, ...]:
    """All banded determinants d_0..d_(d-5) through the alternating
    recurrence d_m = sum_i (-1)^(i-1) c_i d_(m-i).

    Unless overridden, the coefficients come from the closed binomial
    formula, making this route independent of the series division.
    """
    _require_degree(d)
    n = d - 5
    if coefficients is None:
        coefficients = tuple(chern_coefficient_formula(i, d) for i in range(1, n + 1))
    else:
        coefficients = tuple(coefficients)
    dets = [AmbientClass.one(d)]
    for m in range(1, n + 1):
        total = AmbientClass.zero(d)
        for i in range(1, m + 1):
            term = coefficients[i - 1] * dets[m - i]
            total = total + term if i % 2 else total - term
        dets.append(total)
    return tuple(dets)


def determinant_recurrence(
    d: int, coefficients: tuple[AmbientClass, ...] | None = None
) -> PorteousResult:
    dets = recurrence_determinants(d, coefficients)
    return PorteousResult(x1=dets[d - 5], method="recurrence")


def determinant_formula(n: int, d: int) -> AmbientClass:
    """Closed form of the n-th banded determinant,

        binomial(d-4, n) h^n
        + (binomial(d-3, n) - binomial(d-5, n)) T h^(n-1)
        + (binomial(d-2, n)/2 - binomial(d-4, n) + binomial(d-6, n)/2) T^2 h^(n-2),

    valid once n >= 3; smaller determinants carry extra terms and must go
    through the recurrence instead.
    """
    _require_degree(d)
    if not isinstance(n, int) or n < 3:
        raise ValueError("the closed determinant form starts at n = 3; use the recurrence below that")
    if n > d - 5:
        raise ValueError(f"determinant size must not exceed d - 5 = {d - 5}")
    half = Fraction(1, 2)
    return (
        AmbientClass.monomial(d, 0, n, binomial(d - 4, n))
        + AmbientClass.monomial(d, 1, n - 1, binomial(d - 3, n) - binomial(d - 5, n))
        + AmbientClass.monomial(
            d, 2, n - 2,
            half * binomial(d - 2, n) - binomial(d - 4, n) + half * binomial(d - 6, n),
        )
    )


def porteous_class(d: int, method: str = "cofactor") -> PorteousResult:
    """The degeneracy-locus class of the multiplication map, by the chosen
    determinant route."""
    _require_degree(d)
    if method == "cofactor":
        return determinant_cofactor(d)
    if method == "recurrence":
        return determinant_recurrence(d)
    if method == "closed-form":
        return PorteousResult(x1=determinant_formula(d - 5, d), method="closed-form")
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
