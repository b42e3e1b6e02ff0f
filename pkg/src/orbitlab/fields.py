"""Scalar coefficient fields: exact rationals and prime fields.

Rational scalars are plain fractions.Fraction values.  Prime-field
scalars wrap an integer residue together with its modulus so that
mixed-modulus arithmetic fails loudly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonInvertibleFactorial

__all__ = ["PrimeField", "FpElement", "as_scalar", "scalar_zero", "scalar_is_zero"]


class PrimeField:
    """The field of integers modulo a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, min(p, 1 + int(p**0.5)) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, value) -> "FpElement":
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError(f"element of F_{value.p} used in F_{self.p}")
            return value
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise NonInvertibleFactorial(
                    f"denominator {value.denominator} vanishes mod {self.p}"
                )
            return FpElement(num * pow(den, -1, self.p) % self.p, self.p)
        return FpElement(int(value) % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class FpElement:
    """A residue in F_p; arithmetic rejects mismatched moduli."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            return PrimeField(self.p)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.val - self.val, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise NonInvertibleFactorial(f"division by zero in F_{self.p}")
        return FpElement(self.val * pow(other.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __pow__(self, k: int):
        return FpElement(pow(self.val, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"FpElement({self.val}, {self.p})"


def as_scalar(value):
    """Normalize ints to Fraction; pass fractions and F_p elements through."""
    if isinstance(value, (FpElement, Fraction)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"unsupported scalar {value!r}")


def scalar_zero(sample):
    """Zero of the field that sample belongs to."""
    if isinstance(sample, FpElement):
        return FpElement(0, sample.p)
    return Fraction(0)


def scalar_is_zero(value) -> bool:
    if isinstance(value, FpElement):
        return value.val == 0
    return value == 0
