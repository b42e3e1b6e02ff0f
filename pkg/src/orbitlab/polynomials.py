"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in the variables a_0, .., a_d is a dict mapping exponent
tuples to nonzero Fraction coefficients.  This is all the polynomial
arithmetic the covariant calculus needs; there is no division and no
Groebner machinery.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["Poly"]


class Poly:
    """Immutable sparse polynomial over the rationals.

    Terms map exponent tuples of fixed length nvars to coefficients;
    zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                if len(expo) != nvars:
                    raise ValueError(f"exponent {expo} has wrong arity for {nvars} variables")
                clean[tuple(expo)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly instances are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) + coeff
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) - coeff
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return Poly(self.nvars, {e: c * scalar for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        return self * (1 / Fraction(scalar))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ------------------------------------------------------

    def total_degree(self) -> int:
        """Largest term degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None if inhomogeneous or zero."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def evaluate(self, values):
        """Substitute field elements for the variables.

        Works over any field whose elements support + and * with
        Fraction coefficients (rationals, F_p elements).
        """
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = None
        for expo, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, expo):
                for _ in range(e):
                    term = term * v
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def monomials_grlex(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted by total degree, then lexicographically (a_0 > a_1 > ..)."""
        def key(expo):
            return (-sum(expo), tuple(-e for e in expo))

        return [(e, self.terms[e]) for e in sorted(self.terms, key=key)]

    def __str__(self) -> str:
        return self.format()

    def format(self, names: str = "a") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for expo, coeff in self.monomials_grlex():
            factors = [
                f"{names}{i}" if e == 1 else f"{names}{i}^{e}"
                for i, e in enumerate(expo)
                if e
            ]
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms!r})"
