"""Exact binary forms, transvectants, and covariants of the generic form.

A binary form of order n is stored through the coefficients a_i of

    sum_i  binom(n, i) * a_i * x1^(n-i) * x2^i,

so a_i is the stored coefficient and binom(n,i)*a_i the raw monomial
coefficient.  Covariants of the generic form carry polynomial
coefficients in the indeterminates a_0 .. a_d; evaluation at a concrete
form substitutes its coefficients.  All arithmetic is exact, over the
rationals or over a prime field F_p with p larger than every order
involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from .errors import (
    DegenerateForm,
    DimensionMismatch,
    NonInvertibleFactorial,
    NotUnimodular,
    OrderTooSmall,
)
from .fields import FpElement, as_scalar, scalar_is_zero
from .polynomials import Poly

__all__ = [
    "BinaryForm",
    "PolyForm",
    "GenericForm",
    "Transvect",
    "Product",
    "Power",
    "GENERIC_FORM",
    "generic_form",
    "transvectant",
    "form_product",
    "form_power",
    "evaluate_covariant",
    "substitute_coefficients",
    "sl2_substitute",
    "quartic_defining_equation",
    "quintic_generators",
]


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


class BinaryForm:
    """A binary form of order n with exact scalar coefficients.

    Coefficients are the a_i of the binomial writing; they live either
    in the rationals (Fraction) or in one prime field (FpElement).
    """

    __slots__ = ("order", "a_coeffs")

    def __init__(self, order: int, a_coeffs: Sequence, field=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(a_coeffs) != order + 1:
            raise DimensionMismatch(
                f"order {order} needs {order + 1} coefficients, got {len(a_coeffs)}"
            )
        coeffs = [field(c) if field is not None else as_scalar(c) for c in a_coeffs]
        ps = {c.p for c in coeffs if isinstance(c, FpElement)}
        if len(ps) > 1:
            raise ValueError(f"coefficients from different prime fields {sorted(ps)}")
        if ps and any(not isinstance(c, FpElement) for c in coeffs):
            raise ValueError("cannot mix rational and prime-field coefficients")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "a_coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm instances are immutable")

    @property
    def char(self) -> int:
        """Field characteristic: 0 for rationals, p for F_p."""
        for c in self.a_coeffs:
            if isinstance(c, FpElement):
                return c.p
        return 0

    def raw_coeffs(self) -> tuple:
        """Monomial coefficients binom(n,i) * a_i."""
        n = self.order
        return tuple(c * comb(n, i) for i, c in enumerate(self.a_coeffs))

    @classmethod
    def from_raw(cls, order: int, raw: Sequence, char: int = 0) -> "BinaryForm":
        coeffs = []
        for i, c in enumerate(raw):
            b = comb(order, i)
            if char:
                if b % char == 0:
                    raise NonInvertibleFactorial(
                        f"binom({order},{i}) vanishes mod {char}"
                    )
                val = c if isinstance(c, FpElement) else FpElement(int(c), char)
                coeffs.append(val / b)
            else:
                coeffs.append(Fraction(c) / b)
        return cls(order, coeffs)

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.a_coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.order == other.order and self.a_coeffs == other.a_coeffs

    def __hash__(self):
        return hash((self.order, self.a_coeffs))

    def __repr__(self):
        return f"BinaryForm({self.order}, {list(self.a_coeffs)!r})"


class PolyForm:
    """A form of order q whose coefficients are polynomials in a_0 .. a_d.

    Stored in the same binomial convention as BinaryForm.  All nonzero
    coefficient polynomials must be homogeneous of one common degree,
    the degree of the covariant.
    """

    __slots__ = ("order", "nvars", "a_coeffs")

    def __init__(self, order: int, nvars: int, a_coeffs: Sequence[Poly]):
        if len(a_coeffs) != order + 1:
            raise DimensionMismatch(
                f"order {order} needs {order + 1} coefficients, got {len(a_coeffs)}"
            )
        degrees = set()
        for c in a_coeffs:
            if not isinstance(c, Poly) or c.nvars != nvars:
                raise ValueError("coefficients must be Poly instances over the same variables")
            if c:
                deg = c.homogeneous_degree()
                if deg is None:
                    raise ValueError("coefficient polynomials must be homogeneous")
                degrees.add(deg)
        if len(degrees) > 1:
            raise ValueError(f"coefficients of mixed degrees {sorted(degrees)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "a_coeffs", tuple(a_coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyForm instances are immutable")

    @property
    def degree(self) -> int | None:
        """Common degree in the a variables, or None for the zero form."""
        for c in self.a_coeffs:
            if c:
                return c.homogeneous_degree()
        return None

    def raw_coeffs(self) -> tuple[Poly, ...]:
        n = self.order
        return tuple(c * comb(n, i) for i, c in enumerate(self.a_coeffs))

    def is_zero(self) -> bool:
        return not any(self.a_coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (
            self.order == other.order
            and self.nvars == other.nvars
            and self.a_coeffs == other.a_coeffs
        )

    def __repr__(self):
        return f"PolyForm(order={self.order}, nvars={self.nvars}, degree={self.degree})"


def generic_form(d: int) -> PolyForm:
    """The generic form of order d: stored coefficients are a_0 .. a_d."""
    nvars = d + 1
    return PolyForm(d, nvars, [Poly.variable(nvars, i) for i in range(nvars)])


# ---------------------------------------------------------------------------
# covariant expression trees


@dataclass(frozen=True)
class GenericForm:
    """Leaf standing for the generic form of the ambient order."""


@dataclass(frozen=True)
class Transvect:
    left: "CovariantExpr"
    right: "CovariantExpr"
    r: int


@dataclass(frozen=True)
class Product:
    left: "CovariantExpr"
    right: "CovariantExpr"


@dataclass(frozen=True)
class Power:
    base: "CovariantExpr"
    k: int


CovariantExpr = Union[GenericForm, Transvect, Product, Power]

GENERIC_FORM = GenericForm()


# ---------------------------------------------------------------------------
# raw-coefficient engine, generic over scalar or polynomial entries


def _raw_of(form):
    if isinstance(form, (BinaryForm, PolyForm)):
        return list(form.raw_coeffs())
    raise TypeError(f"not a form: {form!r}")


def _mul_int(entry, k: int):
    return entry * k


def _div_int(entry, k: int):
    if isinstance(entry, FpElement):
        return entry / k
    if isinstance(entry, Poly):
        return entry * Fraction(1, k)
    return entry * Fraction(1, k)


def _deriv_raw(raw, order, u, v):
    """Raw coefficients of d^u/dx1^u d^v/dx2^v applied to the form."""
    out_order = order - u - v
    out = []
    for j in range(out_order + 1):
        t = j + v
        factor = _falling(order - t, u) * _falling(t, v)
        out.append(_mul_int(raw[t], factor))
    return out


def _conv_raw(ra, rb, zero):
    out = [zero] * (len(ra) + len(rb) - 1)
    for i, x in enumerate(ra):
        for j, y in enumerate(rb):
            out[i + j] = out[i + j] + x * y
    return out


def _zero_like(form):
    if isinstance(form, PolyForm):
        return Poly.zero(form.nvars)
    char = form.char
    if char:
        return FpElement(0, char)
    return Fraction(0)


def _rebuild(template_a, template_b, order, raw):
    """Package raw coefficients back into binomial storage."""
    char = 0
    if isinstance(template_a, BinaryForm):
        char = template_a.char or template_b.char
        coeffs = []
        for j, c in enumerate(raw):
            b = comb(order, j)
            if char and b % char == 0:
                raise NonInvertibleFactorial(
                    f"binom({order},{j}) vanishes mod {char}; "
                    "order too large for this prime field"
                )
            coeffs.append(_div_int(c, b))
        return BinaryForm(order, coeffs)
    coeffs = [_div_int(c, comb(order, j)) for j, c in enumerate(raw)]
    return PolyForm(order, template_a.nvars, coeffs)


def _compatible(a, b):
    if isinstance(a, BinaryForm) and isinstance(b, BinaryForm):
        if a.char != b.char and a.char and b.char:
            raise ValueError("forms over different prime fields")
        if (a.char == 0) != (b.char == 0) and not (a.is_zero() or b.is_zero()):
            raise ValueError("cannot mix rational and prime-field forms")
        return
    if isinstance(a, PolyForm) and isinstance(b, PolyForm):
        if a.nvars != b.nvars:
            raise DimensionMismatch("covariants over different variable counts")
        return
    raise TypeError("operands must both be BinaryForm or both PolyForm")


def transvectant(a, b, r: int):
    """The r-th transvectant (a, b)_r.

    Computed by the exact differential formula with the rational
    prefactor (p-r)!(q-r)!/(p!q!) kept as is; the result has order
    order(a) + order(b) - 2r and, for polynomial coefficients, degree
    equal to the sum of the operand degrees.
    """
    _compatible(a, b)
    p, q = a.order, b.order
    if r < 0:
        raise ValueError("transvectant index must be nonnegative")
    if r > p or r > q:
        raise OrderTooSmall(f"index {r} exceeds operand orders ({p}, {q})")
    char = a.char if isinstance(a, BinaryForm) else 0
    if isinstance(b, BinaryForm):
        char = char or b.char
    if char and char <= max(p, q):
        raise NonInvertibleFactorial(
            f"characteristic {char} not above operand orders ({p}, {q})"
        )

    ra, rb = _raw_of(a), _raw_of(b)
    zero = _zero_like(a)
    out_order = p + q - 2 * r
    acc = [zero] * (out_order + 1)
    for i in range(r + 1):
        da = _deriv_raw(ra, p, r - i, i)
        db = _deriv_raw(rb, q, i, r - i)
        term = _conv_raw(da, db, zero)
        sign = (-1) ** i * comb(r, i)
        for j in range(out_order + 1):
            acc[j] = acc[j] + _mul_int(term[j], sign)

    denom = _falling(p, r) * _falling(q, r)
    raw = [_div_int(c, denom) for c in acc]
    return _rebuild(a, b, out_order, raw)


def form_product(a, b):
    """Plain product of two forms, the zeroth transvectant."""
    _compatible(a, b)
    zero = _zero_like(a)
    raw = _conv_raw(_raw_of(a), _raw_of(b), zero)
    return _rebuild(a, b, a.order + b.order, raw)


def form_power(a, k: int):
    if k < 1:
        raise ValueError("form powers need a positive exponent")
    out = a
    for _ in range(k - 1):
        out = form_product(out, a)
    return out


def evaluate_covariant(expr: CovariantExpr, d: int) -> PolyForm:
    """Evaluate a covariant expression at the generic form of order d."""
    if isinstance(expr, GenericForm):
        return generic_form(d)
    if isinstance(expr, Transvect):
        return transvectant(
            evaluate_covariant(expr.left, d), evaluate_covariant(expr.right, d), expr.r
        )
    if isinstance(expr, Product):
        return form_product(
            evaluate_covariant(expr.left, d), evaluate_covariant(expr.right, d)
        )
    if isinstance(expr, Power):
        return form_power(evaluate_covariant(expr.base, d), expr.k)
    raise TypeError(f"not a covariant expression: {expr!r}")


def substitute_coefficients(P: PolyForm, E: BinaryForm) -> BinaryForm:
    """Evaluate a covariant at a concrete form (the map theta).

    Substitutes E's stored coefficients for the a variables in every
    coefficient polynomial of P.
    """
    if P.nvars != E.order + 1:
        raise DimensionMismatch(
            f"covariant over {P.nvars} variables, form of order {E.order}"
        )
    values = E.a_coeffs
    char = E.char
    out = []
    for c in P.a_coeffs:
        val = c.evaluate(values)
        if char and not isinstance(val, FpElement):
            val = FpElement(0, char) + val
        out.append(val)
    return BinaryForm(P.order, out)


def sl2_substitute(form, g):
    """Apply the substitution x1 -> p x1 + q x2, x2 -> r x1 + s x2.

    g is a 2x2 matrix with exact entries and determinant one; the
    result is re-read in the binomial convention.
    """
    (gp, gq), (gr, gs) = (list(row) for row in g)
    if isinstance(form, BinaryForm) and form.char:
        field_p = form.char
        gp, gq, gr, gs = (
            x if isinstance(x, FpElement) else FpElement(int(x), field_p)
            for x in (gp, gq, gr, gs)
        )
    else:
        gp, gq, gr, gs = (as_scalar(x) for x in (gp, gq, gr, gs))
    det = gp * gs - gq * gr
    if det != 1:
        raise NotUnimodular(f"determinant {det} is not 1")

    n = form.order
    raw = _raw_of(form)
    zero = _zero_like(form)
    scalar_zero = gp * 0
    scalar_one = scalar_zero + 1

    def lin_powers(u, v):
        # pw[k] = raw coefficients of (u x1 + v x2)^k
        pw = [[scalar_one]]
        for k in range(1, n + 1):
            prev = pw[-1]
            cur = []
            for t in range(k + 1):
                val = scalar_zero
                if t <= k - 1:
                    val = val + prev[t] * u
                if t >= 1:
                    val = val + prev[t - 1] * v
                cur.append(val)
            pw.append(cur)
        return pw

    pw1 = lin_powers(gp, gq)
    pw2 = lin_powers(gr, gs)
    out = [zero] * (n + 1)
    for t in range(n + 1):
        entry = raw[t]
        if (not entry) if isinstance(entry, Poly) else scalar_is_zero(entry):
            continue
        piece = _conv_raw(pw1[n - t], pw2[t], scalar_zero)
        for j in range(n + 1):
            out[j] = out[j] + entry * piece[j]
    return _rebuild(form, form, n, out)


# ---------------------------------------------------------------------------
# explicit low-order generators


@lru_cache(maxsize=None)
def _quartic_invariants():
    g2 = evaluate_covariant(Transvect(GENERIC_FORM, GENERIC_FORM, 4), 4)
    g3 = evaluate_covariant(
        Transvect(GENERIC_FORM, Transvect(GENERIC_FORM, GENERIC_FORM, 2), 4), 4
    )
    return g2.a_coeffs[0], g3.a_coeffs[0]


def quartic_defining_equation(E: BinaryForm) -> Poly:
    """Degree-6 equation of the orbit closure of a general quartic.

    Built from the degree 2 and 3 invariants i2, i3 of the generic
    quartic as theta(i3)^2 * i2^3 - theta(i2)^3 * i3^2.
    """
    if E.order != 4:
        raise DimensionMismatch("expected a quartic")
    p2, p3 = _quartic_invariants()
    c2 = p2.evaluate(E.a_coeffs)
    c3 = p3.evaluate(E.a_coeffs)
    if c2 == 0 and c3 == 0:
        raise DegenerateForm("both invariants vanish; the quartic is not general")
    result = (p2**3) * (c3 * c3) - (p3**2) * (c2**3)
    if not result:
        raise DegenerateForm("defining equation degenerates for this quartic")
    return result


@lru_cache(maxsize=None)
def _quintic_invariants():
    F = GENERIC_FORM
    i4 = Transvect(F, F, 4)
    hess = Transvect(F, F, 2)
    inv4 = Transvect(i4, i4, 2)
    inv8 = Transvect(Power(i4, 3), hess, 6)
    inv12 = Transvect(Power(i4, 5), Power(F, 2), 10)
    pA = evaluate_covariant(inv4, 5).a_coeffs[0]
    pB = evaluate_covariant(inv8, 5).a_coeffs[0]
    pC = evaluate_covariant(inv12, 5).a_coeffs[0]
    return pA, pB, pC


def quintic_generators(E: BinaryForm) -> tuple[Poly, Poly]:
    """The degree 8 and degree 12 ideal generators for a general quintic.

    With the classical invariants A (degree 4), B (degree 8) and C
    (degree 12) of the quintic, returns

        Z8  = theta(B) A^2 - theta(A)^2 B
        Z12 = theta(A B) C - theta(C) A B

    Z12 is a new generator precisely because it is independent of
    A * Z8 for general E.
    """
    if E.order != 5:
        raise DimensionMismatch("expected a quintic")
    pA, pB, pC = _quintic_invariants()
    tA = pA.evaluate(E.a_coeffs)
    if tA == 0:
        raise DegenerateForm("degree-4 invariant vanishes; the quintic is not general")
    tB = pB.evaluate(E.a_coeffs)
    tC = pC.evaluate(E.a_coeffs)
    z8 = (pA**2) * tB - pB * (tA * tA)
    z12 = (pA * pB) * (-tC) + pC * (tA * tB)
    if not z8 or not z12:
        raise DegenerateForm("generators degenerate for this quintic")
    return z8, z12
