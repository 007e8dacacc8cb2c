"""Generalized binomial coefficients, the top-degree intersection pairing,
and the secant-variety degree with its classical cross-check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .ring import AmbientClass, Rational

__all__ = [
    "THETA_SELF_INTERSECTION",
    "binomial",
    "verify_binomial_identities",
    "degree_pairing",
    "secant3_degree",
    "berzolari",
    "DegreeReport",
    "degree_report",
]

# Self-intersection number of the theta divisor on the Picard surface of a
# genus-2 curve.  This is the one normalization the degree pairing takes as
# an axiom: the class T^2 * h^(d-2) integrates to 2.
THETA_SELF_INTERSECTION = 2


def binomial(n: int, k: int) -> int:
    """Binomial coefficient for any integer upper argument.

    Defined through the falling factorial n(n-1)...(n-k+1)/k!, so for n < 0
    it satisfies the upper-negation identity
    binomial(n, k) = (-1)^k * binomial(-n+k-1, k); for k < 0 it is zero.
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise TypeError("binomial arguments must be integers")
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    falling = 1
    for j in range(k):
        falling *= n - j
    return falling // factorial(k)


def verify_binomial_identities(sample_bound: int) -> bool:
    """Exhaustively check upper negation and Vandermonde convolution for all
    non-negative parameters up to ``sample_bound``.

    Meaningful because :func:`binomial` evaluates negative upper arguments
    through the falling factorial, not through either identity.
    """
    for r in range(sample_bound + 1):
        for m in range(sample_bound + 1):
            if binomial(-r, m) != (-1) ** m * binomial(r + m - 1, m):
                return False
    for m in range(sample_bound + 1):
        for s in range(sample_bound + 1):
            for r in range(sample_bound + 1):
                total = sum(binomial(m, k) * binomial(s, r - k) for k in range(r + 1))
                if total != binomial(m + s, r):
                    return False
    return True


def degree_pairing(value: AmbientClass) -> Rational:
    """Integrate a top-degree class over the product space.

    Reads off the coefficient of T^2 * h^(d-2) and scales by the theta
    self-intersection.  Deliberately a plain linear read-off: any stray
    lower-order terms in the input are a caller-side bug and are policed by
    a separate homogeneity assertion, not silently absorbed here.
    """
    top = value.coefficient(2, value.d - 2)
    return Fraction(THETA_SELF_INTERSECTION) * top


def secant3_degree(d: int, method: str = "cofactor") -> int:
    """Degree of the third secant variety of a genus-2 curve of degree d.

    Evaluates the degeneracy-locus class by the requested determinant route,
    cuts it down by five hyperplanes and integrates.  The result must come
    out a positive integer; anything else aborts loudly.
    """
    if not isinstance(d, int) or d < 8:
        raise ValueError(
            "d must be an integer >= 8: below that the third secant variety "
            "is not a proper subvariety of the ambient projective space"
        )
    # Imported here: the Porteous pipeline builds on the binomial toolkit above.
    from .porteous import porteous_class

    result = porteous_class(d, method)
    locus = result.x1
    if not locus.is_homogeneous(d - 5):
        raise ArithmeticError(
            f"degeneracy class for d={d} ({result.method}) is not homogeneous "
            f"of total degree {d - 5}: {locus}"
        )
    paired = degree_pairing(locus * AmbientClass.monomial(d, 0, 5))
    if paired.denominator != 1 or paired <= 0:
        raise ArithmeticError(
            f"secant degree for d={d} ({result.method}) should be a positive "
            f"integer, got {paired}"
        )
    return int(paired)


def berzolari(d: int, genus: int = 2) -> int:
    """Classical count of trisecant lines to a space curve, used as an
    independent oracle: binomial(d-2, 3) - genus*(d-4).

    The engine's subject is genus 2; other genus values are allowed for
    exploratory comparison only.
    """
    if not isinstance(d, int) or d < 8:
        raise ValueError("the trisecant count oracle is used for integer d >= 8")
    if not isinstance(genus, int) or genus < 0:
        raise ValueError("genus must be a non-negative integer")
    return binomial(d - 2, 3) - genus * (d - 4)


@dataclass(frozen=True)
class DegreeReport:
    """One row of the degree table: the independent routes side by side."""

    d: int
    degree_porteous: int
    degree_closed_form: int
    degree_berzolari: int
    methods_agree: bool


def degree_report(d: int) -> DegreeReport:
    via_matrix = secant3_degree(d, "cofactor")
    via_formula = secant3_degree(d, "closed-form")
    classical = berzolari(d)
    return DegreeReport(
        d=d,
        degree_porteous=via_matrix,
        degree_closed_form=via_formula,
        degree_berzolari=classical,
        methods_agree=via_matrix == via_formula == classical,
    )
