"""Exact scalar helpers: rational strings and complex numbers with rational parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p", or a plain decimal string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RationalComplex:
    """A complex number with exact rational real and imaginary parts.

    Used wherever pole-lattice membership must be decided exactly.
    """

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    @classmethod
    def from_value(cls, value) -> "RationalComplex":
        if isinstance(value, RationalComplex):
            return value
        if isinstance(value, str):
            return parse_rational_complex(value)
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), Fraction(0))
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, float):
            return cls(Fraction(value), Fraction(0))
        raise TypeError(f"cannot make a RationalComplex from {type(value).__name__}")

    def __post_init__(self):
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    def __add__(self, other):
        other = RationalComplex.from_value(other)
        return RationalComplex(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalComplex.from_value(other))

    def __rsub__(self, other):
        return RationalComplex.from_value(other) + (-self)

    def __neg__(self):
        return RationalComplex(-self.real, -self.imag)

    def __mul__(self, other):
        other = RationalComplex.from_value(other)
        return RationalComplex(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "RationalComplex":
        return RationalComplex(self.real, -self.imag)

    def is_real(self) -> bool:
        return self.imag == 0

    def is_integer(self) -> bool:
        return self.imag == 0 and self.real.denominator == 1

    def to_complex(self) -> complex:
        return complex(self.real, self.imag)

    def __complex__(self) -> complex:
        return self.to_complex()

    def __str__(self) -> str:
        if self.imag == 0:
            return format_rational(self.real)
        if self.imag == 1:
            imag = "i"
        elif self.imag == -1:
            imag = "-i"
        else:
            imag = format_rational(self.imag) + "i"
        if self.real == 0:
            return imag
        sign = "+" if self.imag > 0 else "-"
        mag = abs(self.imag)
        tail = "i" if mag == 1 else format_rational(mag) + "i"
        return f"{format_rational(self.real)}{sign}{tail}"


def parse_rational_complex(text: str) -> RationalComplex:
    """Parse strings like "1+0i", "0+0.2i", "-1/3-2i", "i", "0.5" exactly."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if not s.endswith(("i", "I", "j", "J")):
        return RationalComplex(parse_rational(s), Fraction(0))
    body = s[:-1]
    split = 0
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] != "/":
            split = k
            break
    re_part, im_part = body[:split], body[split:]
    if im_part in ("", "+"):
        imag = Fraction(1)
    elif im_part == "-":
        imag = Fraction(-1)
    else:
        imag = parse_rational(im_part)
    real = parse_rational(re_part) if re_part else Fraction(0)
    return RationalComplex(real, imag)
