"""Exact Gaussian-rational scalars.

Every computation in this package happens over Q(i), represented as a
pair of ``fractions.Fraction`` values (real and imaginary part).
Fraction keeps each part in lowest terms with a positive denominator,
so equality is structural and values are hashable.

Text form: plain rationals are written ``p/q`` (``p`` when q == 1);
Gaussian rationals are written ``p/q+r/si`` with a trailing ``i`` on
the imaginary part, e.g. ``1/2-3/4i``, ``i``, ``-2i``, ``5/3``.
Spaces are tolerated anywhere; :func:`parse_gauss` and
:func:`format_gauss` round-trip exactly.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "GaussRat",
    "parse_rational",
    "format_rational",
    "parse_gauss",
    "format_gauss",
    "sign_of_real",
]

RatLike = "int | Fraction"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussRat:
    """An element of Q(i).  Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "GaussRat":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "GaussRat":
        return cls(1, 0)

    @classmethod
    def i(cls) -> "GaussRat":
        return cls(0, 1)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        out = cls._try_coerce(x)
        if out is None:
            raise TypeError(f"cannot coerce {type(x).__name__} to GaussRat")
        return out

    @classmethod
    def _try_coerce(cls, x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        return None

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        n2 = other.re * other.re + other.im * other.im
        if not n2:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n2,
            (self.im * other.re - self.re * other.im) / n2,
        )

    def __rtruediv__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return GaussRat.one() / self ** (-n)
        result = GaussRat.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussRat":
        """Complex conjugate; an involution."""
        return GaussRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus re^2 + im^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        other = GaussRat._try_coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return format_gauss(self)


def format_rational(x: Fraction) -> str:
    """Canonical text for a rational: ``p/q``, or ``p`` when q == 1."""
    x = _as_fraction(x)
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or ``p``).  Spaces are tolerated."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty rational literal")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def format_gauss(x: GaussRat) -> str:
    """Canonical text for a Gaussian rational (see module docstring)."""
    if not x.im:
        return format_rational(x.re)
    im = x.im
    body = "" if abs(im) == 1 else format_rational(abs(im))
    imag = f"{body}i"
    if not x.re:
        return ("-" if im < 0 else "") + imag
    sign = "+" if im > 0 else "-"
    return f"{format_rational(x.re)}{sign}{imag}"


def parse_gauss(text: str) -> GaussRat:
    """Parse a Gaussian rational; inverse of :func:`format_gauss`."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    if not s.endswith("i"):
        return GaussRat(parse_rational(s), 0)
    body = s[:-1]
    # Split off a real part, if any: find an interior sign that does not
    # follow '/' (digits and '/' are the only other characters allowed).
    split = None
    for k in range(1, len(body)):
        if body[k] in "+-" and body[k - 1] not in "/+-":
            split = k
    if split is None:
        re_part, im_part = "", body
    else:
        re_part, im_part = body[:split], body[split:]
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = parse_rational(im_part)
    re = parse_rational(re_part) if re_part else Fraction(0)
    return GaussRat(re, im)


def sign_of_real(x: GaussRat) -> int:
    """Sign (+1 or -1) of a nonzero real Gaussian rational.

    Raises if the value has a nonzero imaginary part or is zero; sign
    questions only make sense on the real line.
    """
    if x.im:
        raise ValueError(f"sign undefined: {x!r} is not real")
    if not x.re:
        raise ValueError("sign undefined: value is zero")
    return 1 if x.re > 0 else -1
