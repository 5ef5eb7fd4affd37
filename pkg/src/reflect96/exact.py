"""Exact arithmetic in the cyclotomic field Q(zeta_8).

An element is stored as four integer numerators over one shared positive
denominator, in the power basis 1, z, z^2, z^3 with z^4 = -1.  The shared
denominator is kept reduced so that equal field elements have equal keys.
Rational coefficients are exposed as ``fractions.Fraction``.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from math import gcd
from typing import Union

Rat = Fraction

Scalar = Union[int, Fraction, "Cyc8"]


class CyclotomicArithmeticError(ArithmeticError):
    pass


def _canonical(nums: tuple[int, int, int, int], den: int) -> tuple[tuple[int, int, int, int], int]:
    if den == 0:
        raise CyclotomicArithmeticError("zero denominator")
    if den < 0:
        nums = tuple(-n for n in nums)  # type: ignore[assignment]
        den = -den
    g = den
    for n in nums:
        g = gcd(g, n)
    if g > 1:
        nums = tuple(n // g for n in nums)  # type: ignore[assignment]
        den //= g
    if not any(nums):
        den = 1
    return nums, den


class Cyc8:
    """Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_8), z = exp(2*pi*i/8)."""

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        coeffs = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(int(c * den) for c in coeffs)
        self._nums, self._den = _canonical(nums, den)  # type: ignore[arg-type]
        self._hash = None

    @classmethod
    def _raw(cls, nums, den) -> Cyc8:
        obj = object.__new__(cls)
        obj._nums, obj._den = _canonical(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> Cyc8:
        if isinstance(value, Cyc8):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Cyc8")

    @classmethod
    def zeta_power(cls, k: int) -> Cyc8:
        """z**k for any integer k."""
        k %= 8
        sign = 1
        if k >= 4:
            k -= 4
            sign = -1
        nums = [0, 0, 0, 0]
        nums[k] = sign
        return cls._raw(tuple(nums), 1)

    # coefficient access

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._den) for n in self._nums)  # type: ignore[return-value]

    @property
    def c0(self) -> Fraction:
        return Fraction(self._nums[0], self._den)

    @property
    def c1(self) -> Fraction:
        return Fraction(self._nums[1], self._den)

    @property
    def c2(self) -> Fraction:
        return Fraction(self._nums[2], self._den)

    @property
    def c3(self) -> Fraction:
        return Fraction(self._nums[3], self._den)

    def key(self) -> tuple:
        return (self._nums, self._den)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        n = self._nums
        return n[1] == 0 and n[2] == 0 and n[3] == 0

    def is_integer(self) -> bool:
        return self.is_rational() and self._den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self._nums[0]

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / 8)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    # arithmetic

    def __add__(self, other):
        try:
            other = Cyc8.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, other._den
        return Cyc8._raw(tuple(a * d2 + b * d1 for a, b in zip(self._nums, other._nums)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyc8._raw(tuple(-a for a in self._nums), self._den)

    def __sub__(self, other):
        try:
            other = Cyc8.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = Cyc8.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyc8._raw(
                tuple(a * other.numerator for a in self._nums), self._den * other.denominator
            )
        if not isinstance(other, Cyc8):
            return NotImplemented
        a0, a1, a2, a3 = self._nums
        b0, b1, b2, b3 = other._nums
        # z^4 = -1 folds degrees 4..6 back with a sign flip
        c0 = a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
        c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
        c2 = a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        return Cyc8._raw((c0, c1, c2, c3), self._den * other._den)

    __rmul__ = __mul__

    def galois(self, j: int) -> Cyc8:
        """Apply the automorphism z -> z**j (j odd)."""
        if j % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) need odd j")
        out = [0, 0, 0, 0]
        for k, n in enumerate(self._nums):
            if n:
                p = (j * k) % 8
                if p >= 4:
                    out[p - 4] -= n
                else:
                    out[p] += n
        return Cyc8._raw(tuple(out), self._den)

    def conj(self) -> Cyc8:
        return self.galois(7)

    def abs_sq(self) -> Cyc8:
        return self * self.conj()

    def norm(self) -> Fraction:
        """Field norm down to Q: product of all four Galois conjugates."""
        return (self * self.galois(3) * self.galois(5) * self.galois(7)).to_fraction()

    def inverse(self) -> Cyc8:
        if self.is_zero():
            raise CyclotomicArithmeticError("division by zero in Q(zeta_8)")
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        n = (self * cofactor).to_fraction()
        return cofactor * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CyclotomicArithmeticError("division by zero in Q(zeta_8)")
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = Cyc8.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c0 == other
        if not isinstance(other, Cyc8):
            return NotImplemented
        return self._nums == other._nums and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.c0)
            else:
                self._hash = hash((self._nums, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # rendering

    def __str__(self) -> str:
        return format_cyc8(self)

    def __repr__(self) -> str:
        return f"Cyc8({', '.join(str(c) for c in self.coeffs)})"


ZERO = Cyc8(0)
ONE = Cyc8(1)
ZETA = Cyc8.zeta_power(1)
I = Cyc8.zeta_power(2)
SQRT2 = ZETA - Cyc8.zeta_power(3)


def format_cyc8(a: Cyc8) -> str:
    c0, c1, c2, c3 = a.coeffs
    return f"{c0} + {c1}*z + {c2}*z^2 + {c3}*z^3"


_TERM = re.compile(r"^\s*([+-]?\s*(?:\d+(?:/\d+)?)?)\s*(\*?\s*z(?:\s*\^\s*(\d+))?)?\s*$")


def parse_cyc8(text: str) -> Cyc8:
    """Parse the canonical rendering, and looser sums such as ``1 - 3/2*z^3``.

    Terms are separated by ``+``; a leading ``-`` on a term negates it.
    """
    src = text.strip()
    if not src:
        raise ValueError("empty Cyc8 string")
    # turn binary minus into "+ -" while keeping a leading sign intact
    src = re.sub(r"(?<=[\dz])\s*-\s*", " + -", src)
    total = ZERO
    for raw in src.split("+"):
        if not raw.strip():
            raise ValueError(f"malformed Cyc8 string: {text!r}")
        m = _TERM.match(raw)
        if m is None:
            raise ValueError(f"malformed Cyc8 term {raw!r} in {text!r}")
        coef_txt = m.group(1).replace(" ", "")
        if m.group(2) is None and not coef_txt.lstrip("+-"):
            raise ValueError(f"malformed Cyc8 term {raw!r} in {text!r}")
        if coef_txt in ("", "+", "-"):
            coef_txt += "1"
        coef = Fraction(coef_txt)
        if m.group(2) is None:
            power = 0
        else:
            power = int(m.group(3)) if m.group(3) else 1
        total = total + Cyc8.zeta_power(power) * coef
    return total
