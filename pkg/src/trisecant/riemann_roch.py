"""Cohomology of the curve times its degree-3 Picard surface, Todd classes,
and the Riemann-Roch pushforward that produces the two section bundles.

For a genus-2 curve C embedded with degree d, the engine works over
C x Pic^3(C).  Rationally the cohomology it needs is a free rank-3 module
over the theta ring, with basis {1, f, gamma}: f is the class of a point
fiber {pt} x Pic^3, and gamma is the diagonal Kunneth component of the
first Chern class of a normalized Poincare line bundle.  The products

    f * f = 0,   f * gamma = 0,   gamma * gamma = -2 * f * T

are input data here (gamma^3 = 0 follows), as is the first Chern class
3f + gamma of the Poincare bundle itself.  Everything downstream of those
relations is computed, not quoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ring import Scalar, ThetaPoly, _as_fraction

__all__ = [
    "CurveClass",
    "UpstreamClass",
    "BundleData",
    "todd_from_chern",
    "pushforward_to_picard",
    "riemann_roch_pushforward",
    "line_bundle_character",
    "poincare_first_chern",
    "poincare_character",
    "bundle_characters",
]


class CurveClass:
    """Element ``c0 + c1*P`` of ``Q[P]/(P^2)``: cohomology of the curve
    itself, with P the class of a point (squares to zero on a curve)."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0: Scalar = 0, c1: Scalar = 0) -> None:
        self.c0 = _as_fraction(c0)
        self.c1 = _as_fraction(c1)

    @classmethod
    def zero(cls) -> CurveClass:
        return cls()

    @classmethod
    def one(cls) -> CurveClass:
        return cls(1)

    @classmethod
    def point(cls) -> CurveClass:
        return cls(0, 1)

    def zero_like(self) -> CurveClass:
        return CurveClass()

    def one_like(self) -> CurveClass:
        return CurveClass(1)

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1)

    def __add__(self, other: CurveClass | Scalar) -> CurveClass:
        if isinstance(other, (int, Fraction)):
            return CurveClass(self.c0 + other, self.c1)
        if not isinstance(other, CurveClass):
            return NotImplemented
        return CurveClass(self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self) -> CurveClass:
        return CurveClass(-self.c0, -self.c1)

    def __sub__(self, other: CurveClass | Scalar) -> CurveClass:
        if isinstance(other, (int, Fraction)):
            return CurveClass(self.c0 - other, self.c1)
        if not isinstance(other, CurveClass):
            return NotImplemented
        return CurveClass(self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other: Scalar) -> CurveClass:
        return (-self) + other

    def __mul__(self, other: CurveClass | Scalar) -> CurveClass:
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return CurveClass(self.c0 * q, self.c1 * q)
        if not isinstance(other, CurveClass):
            return NotImplemented
        return CurveClass(self.c0 * other.c0, self.c0 * other.c1 + self.c1 * other.c0)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CurveClass(other)
        if not isinstance(other, CurveClass):
            return NotImplemented
        return (self.c0, self.c1) == (other.c0, other.c1)

    def __hash__(self) -> int:
        return hash(("CurveClass", self.c0, self.c1))

    def __str__(self) -> str:
        from .ring import _join_terms

        parts = [(c, body) for c, body in ((self.c0, ""), (self.c1, "P")) if c]
        return _join_terms(parts)

    def __repr__(self) -> str:
        return f"CurveClass({self})"


class UpstreamClass:
    """Class on (curve) x (Picard surface): ``u1 + uf*f + ug*gamma`` with
    theta-ring coordinates.

    Multiplication applies the module relations listed at the top of this
    file; gamma never leaves this ring, because it dies both under the
    pushforward to the Picard side and under restriction to a fiber.
    """

    __slots__ = ("u1", "uf", "ug")

    def __init__(
        self,
        u1: ThetaPoly | Scalar = 0,
        uf: ThetaPoly | Scalar = 0,
        ug: ThetaPoly | Scalar = 0,
    ) -> None:
        self.u1 = u1 if isinstance(u1, ThetaPoly) else ThetaPoly(u1)
        self.uf = uf if isinstance(uf, ThetaPoly) else ThetaPoly(uf)
        self.ug = ug if isinstance(ug, ThetaPoly) else ThetaPoly(ug)

    @classmethod
    def zero(cls) -> UpstreamClass:
        return cls()

    @classmethod
    def one(cls) -> UpstreamClass:
        return cls(1)

    @classmethod
    def fiber(cls) -> UpstreamClass:
        """The class f of a point fiber over the curve factor."""
        return cls(0, 1)

    @classmethod
    def kunneth(cls) -> UpstreamClass:
        """The diagonal Kunneth component gamma."""
        return cls(0, 0, 1)

    @classmethod
    def theta(cls) -> UpstreamClass:
        """The theta class pulled back from the Picard factor."""
        return cls(ThetaPoly.theta())

    def zero_like(self) -> UpstreamClass:
        return UpstreamClass()

    def one_like(self) -> UpstreamClass:
        return UpstreamClass(1)

    def is_zero(self) -> bool:
        return self.u1.is_zero() and self.uf.is_zero() and self.ug.is_zero()

    def __add__(self, other: UpstreamClass | ThetaPoly | Scalar) -> UpstreamClass:
        if isinstance(other, (int, Fraction, ThetaPoly)):
            other = UpstreamClass(other)
        if not isinstance(other, UpstreamClass):
            return NotImplemented
        return UpstreamClass(self.u1 + other.u1, self.uf + other.uf, self.ug + other.ug)

    __radd__ = __add__

    def __neg__(self) -> UpstreamClass:
        return UpstreamClass(-self.u1, -self.uf, -self.ug)

    def __sub__(self, other: UpstreamClass | ThetaPoly | Scalar) -> UpstreamClass:
        if isinstance(other, (int, Fraction, ThetaPoly)):
            other = UpstreamClass(other)
        if not isinstance(other, UpstreamClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ThetaPoly | Scalar) -> UpstreamClass:
        return (-self) + other

    def __mul__(self, other: UpstreamClass | ThetaPoly | Scalar) -> UpstreamClass:
        if isinstance(other, (int, Fraction, ThetaPoly)):
            return UpstreamClass(self.u1 * other, self.uf * other, self.ug * other)
        if not isinstance(other, UpstreamClass):
            return NotImplemented
        theta = ThetaPoly.theta()
        # gamma^2 = -2 f T contributes to the fiber coordinate; f^2 and
        # f*gamma vanish outright.
        u1 = self.u1 * other.u1
        uf = (
            self.u1 * other.uf
            + self.uf * other.u1
            - self.ug * other.ug * theta * 2
        )
        ug = self.u1 * other.ug + self.ug * other.u1
        return UpstreamClass(u1, uf, ug)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UpstreamClass:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("ring powers need a non-negative integer exponent")
        result, base = UpstreamClass.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ThetaPoly)):
            other = UpstreamClass(other)
        if not isinstance(other, UpstreamClass):
            return NotImplemented
        return (self.u1, self.uf, self.ug) == (other.u1, other.uf, other.ug)

    def __hash__(self) -> int:
        return hash(("UpstreamClass", self.u1, self.uf, self.ug))

    def __str__(self) -> str:
        parts = []
        if not self.u1.is_zero():
            parts.append(f"({self.u1})")
        if not self.uf.is_zero():
            parts.append(f"({self.uf})*f")
        if not self.ug.is_zero():
            parts.append(f"({self.ug})*gamma")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"UpstreamClass({self})"


@dataclass(frozen=True)
class BundleData:
    """Rank and Chern character of one of the pushforward bundles."""

    rank: int
    chern_character: ThetaPoly
    label: str

    def __post_init__(self) -> None:
        if self.chern_character.c0 != self.rank:
            raise ValueError(
                f"rank {self.rank} disagrees with the degree-zero character part "
                f"{self.chern_character.c0}"
            )


def todd_from_chern(c1, c2):
    """Todd class ``1 + c1/2 + (c1^2 + c2)/12`` through complex dimension two.

    Works in any of the coefficient rings here: the inputs need addition,
    multiplication and rational scaling, nothing else.
    """
    one = c1.one_like()
    return one + c1 * Fraction(1, 2) + (c1 * c1 + c2) * Fraction(1, 12)


def pushforward_to_picard(value: UpstreamClass) -> ThetaPoly:
    """Proper pushforward along the projection to the Picard surface.

    Integration over the curve kills the fundamental class and the Kunneth
    component, sends the fiber class to 1, and is theta-linear by the
    projection formula; the result is simply the fiber coordinate.
    """
    return value.uf


def line_bundle_character(first_chern: UpstreamClass) -> UpstreamClass:
    """Chern character ``exp(c1)`` of a line bundle upstairs.

    The input must have no degree-zero part; it is then nilpotent, and the
    exponential terminates at the cube because the product space has
    dimension three.  The bound is enforced, never probed.
    """
    if first_chern.u1.c0 != 0:
        raise ValueError("a first Chern class cannot have a degree-zero part")
    total = UpstreamClass.one()
    power = UpstreamClass.one()
    for j in range(1, 4):
        power = power * first_chern
        total = total + power * Fraction(1, factorial(j))
    return total


def poincare_first_chern() -> UpstreamClass:
    """First Chern class 3f + gamma of the normalized degree-3 Poincare
    bundle; input data for the whole pipeline."""
    return UpstreamClass(0, 3, 1)


def poincare_character() -> UpstreamClass:
    """Chern character of the Poincare bundle, computed from its first
    Chern class.  Equals 1 + 3f + gamma - f*T: the square of 3f + gamma is
    already -2*f*T and the cube vanishes."""
    return line_bundle_character(poincare_first_chern())


def _product_space_todd() -> UpstreamClass:
    """Todd class of (curve) x (Picard surface).

    The tangent bundle splits; the genus-2 curve contributes first Chern
    class -2f (canonical degree 2) and the abelian surface contributes
    nothing, so c1 = -2f and c2 = 0 upstairs.
    """
    return todd_from_chern(UpstreamClass.fiber() * (-2), UpstreamClass.zero())


def riemann_roch_pushforward(character: UpstreamClass) -> ThetaPoly:
    """Chern character of the derived pushforward to the Picard surface.

    Grothendieck-Riemann-Roch:  ch(q_* E) * td(base) = q_*(ch(E) * td(total)).
    The base is an abelian surface, so its Todd class is 1; that identity is
    recomputed on every call rather than assumed.
    """
    td_base = todd_from_chern(ThetaPoly.zero(), ThetaPoly.zero())
    if td_base != ThetaPoly.one():
        raise ArithmeticError("Todd class of the abelian base failed to be 1")
    return pushforward_to_picard(character * _product_space_todd())


@lru_cache(maxsize=None)
def bundle_characters(d: int) -> tuple[BundleData, BundleData]:
    """Ranks and characters of the two section bundles on the Picard surface.

    For each degree-3 divisor class the fibers are the sections of that
    divisor ("sections", rank 2 by Riemann-Roch in genus 2) and the sections
    of the hyperplane divisor minus it ("residual", rank d - 4).  Both
    characters come out of the pushforward machinery; nothing is hard-coded.
    """
    if not isinstance(d, int) or d < 8:
        raise ValueError("bundle characters require an integer d >= 8")
    c1 = poincare_first_chern()
    sections_ch = riemann_roch_pushforward(line_bundle_character(c1))
    # The hyperplane bundle restricted to the curve has degree d, hence
    # character exp(d*f) upstairs; twist by the inverse Poincare bundle.
    hyperplane_ch = line_bundle_character(UpstreamClass.fiber() * d)
    residual_ch = riemann_roch_pushforward(hyperplane_ch * line_bundle_character(-c1))
    return (
        BundleData(_integer_rank(sections_ch), sections_ch, "sections"),
        BundleData(_integer_rank(residual_ch), residual_ch, "residual"),
    )


def _integer_rank(character: ThetaPoly) -> int:
    rank = character.c0
    if rank.denominator != 1:
        raise ArithmeticError(f"non-integer rank {rank} out of the pushforward")
    return int(rank)
