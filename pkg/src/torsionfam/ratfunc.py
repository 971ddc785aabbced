"""Rational functions of one parameter over Q(i), and their local germs.

A :class:`RatFunc` is a reduced fraction num/den of polynomials in t
with the denominator monic; that normal form is canonical, so equality
is structural.  Localizing at a parameter value t0 gives the ring of
germs regular at t0 -- a discrete valuation ring whose maximal ideal
is generated by (t - t0).  :func:`valuation` and :func:`normalize_at`
implement the valuation and the exact uniformizer decomposition
f = (t - t0)^nu * u with u(t0) != 0.

The unit-modulus building block :func:`cayley` returns
z(t) = (1 + i s t)/(1 - i s t), which satisfies z * conj_family(z) = 1
identically, hence has unit modulus at every real parameter value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, format_poly, parse_poly, poly_gcd
from .scalars import GaussRat

__all__ = [
    "RatFunc",
    "LocalGerm",
    "valuation",
    "normalize_at",
    "cayley",
    "conj_family",
    "uniformizer",
    "format_ratfunc",
    "parse_ratfunc",
]


class RatFunc:
    """Element of Q(i)(t) in reduced, monic-denominator form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly.coerce(num)
        den = Poly.one() if den is None else Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.leading()
            if not (lead == GaussRat.one()):
                num = num * (GaussRat.one() / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFunc":
        # trusted constructor: num/den already in canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls._reduced(Poly.zero(), Poly.one())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls._reduced(Poly.one(), Poly.one())

    @classmethod
    def var(cls) -> "RatFunc":
        """The coordinate function ``t``."""
        return cls._reduced(Poly.var(), Poly.one())

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        out = cls._try_coerce(x)
        if out is None:
            raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")
        return out

    @classmethod
    def _try_coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, GaussRat, Poly)):
            return cls(Poly.coerce(x))
        return None

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def __mul__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of the zero function")
            return (RatFunc.one() / self) ** (-n)
        result = RatFunc.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "RatFunc":
        """Coefficientwise Gaussian conjugation, t fixed; an involution."""
        # den is monic and stays monic under conjugation, and the
        # fraction stays reduced, so no renormalization is needed.
        return RatFunc._reduced(self.num.conj(), self.den.conj())

    # -- evaluation and local structure --------------------------------

    def evaluate(self, t0) -> GaussRat:
        t0 = GaussRat.coerce(t0)
        d = self.den.evaluate(t0)
        if d.is_zero():
            raise ZeroDivisionError(f"pole at t = {t0!r}")
        return self.num.evaluate(t0) / d

    def valuation(self, t0) -> int:
        """Order of zero (positive) or pole (negative) at t0."""
        if self.is_zero():
            raise ValueError("valuation of zero undefined")
        t0 = GaussRat.coerce(t0)
        return self.num.valuation_at(t0) - self.den.valuation_at(t0)

    def is_regular_at(self, t0) -> bool:
        """True when the reduced denominator does not vanish at t0."""
        return not self.den.evaluate(t0).is_zero()

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        other = RatFunc._try_coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return format_ratfunc(self)


def valuation(f: RatFunc, t0) -> int:
    """(t - t0)-adic valuation of a nonzero rational function."""
    return RatFunc.coerce(f).valuation(t0)


def uniformizer(t0) -> RatFunc:
    """The generator (t - t0) of the maximal ideal at t0."""
    t0 = GaussRat.coerce(t0)
    return RatFunc(Poly([-t0, GaussRat.one()]))


def normalize_at(f: RatFunc, t0) -> tuple[int, RatFunc]:
    """Exact decomposition f = (t - t0)^nu * u with u(t0) != 0.

    Returns (nu, u); multiplying back reproduces f bit-exactly.
    """
    f = RatFunc.coerce(f)
    if f.is_zero():
        raise ValueError("valuation of zero undefined")
    t0 = GaussRat.coerce(t0)
    linear = Poly([-t0, GaussRat.one()])
    a = f.num.valuation_at(t0)
    b = f.den.valuation_at(t0)
    num = f.num // linear**a if a else f.num
    den = f.den // linear**b if b else f.den
    return a - b, RatFunc(num, den)


def conj_family(f: RatFunc) -> RatFunc:
    """Coefficientwise conjugation of a family value (t treated as real)."""
    return RatFunc.coerce(f).conj()


def cayley(speed=1) -> RatFunc:
    """Unit-modulus monodromy value z(t) = (1 + i s t)/(1 - i s t).

    For every real rational t the value has modulus one exactly:
    z * conj_family(z) = 1 as an identity in Q(i)(t).  ``speed``
    rescales the parameter (z of s*t), which is how independent
    circle factors of a family are detuned from each other.
    """
    s = GaussRat.coerce(speed)
    ii = GaussRat.i()
    num = Poly([GaussRat.one(), ii * s])
    den = Poly([GaussRat.one(), -ii * s])
    return RatFunc(num, den)


@dataclass(frozen=True)
class LocalGerm:
    """A rational function together with a center where it is regular.

    Membership in the local ring at ``center`` is validated: the
    reduced denominator must not vanish there.
    """

    value: RatFunc
    center: GaussRat

    def __post_init__(self):
        object.__setattr__(self, "value", RatFunc.coerce(self.value))
        object.__setattr__(self, "center", GaussRat.coerce(self.center))
        if not self.value.is_regular_at(self.center):
            raise ValueError(
                f"not a germ at t = {self.center!r}: denominator vanishes"
            )

    def valuation(self) -> int:
        """Order of vanishing at the center (non-negative)."""
        if self.value.is_zero():
            raise ValueError("valuation of zero undefined")
        return self.value.valuation(self.center)

    def evaluate(self) -> GaussRat:
        return self.value.evaluate(self.center)

    def decompose(self) -> tuple[int, RatFunc]:
        """Uniformizer-power decomposition at the center."""
        return normalize_at(self.value, self.center)


def format_ratfunc(f: RatFunc) -> str:
    """Canonical text ``num/den``, with ``/den`` omitted when den == 1."""
    if f.den == Poly.one():
        return format_poly(f.num)
    return f"{format_poly(f.num)}/{format_poly(f.den)}"


def parse_ratfunc(text: str) -> RatFunc:
    """Inverse of :func:`format_ratfunc`; tolerates interior spaces."""
    s = text.strip()
    if "/" in s:
        # the only '/' outside brackets separates num from den
        depth = 0
        split = None
        for k, ch in enumerate(s):
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = k
                break
        if split is not None:
            return RatFunc(parse_poly(s[:split]), parse_poly(s[split + 1 :]))
    return RatFunc(parse_poly(s))
