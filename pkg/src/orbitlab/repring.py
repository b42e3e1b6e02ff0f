"""Exact arithmetic in the representation ring of SL2.

Elements are integer combinations of the irreducible characters s_q
(q >= 0), where s_q stands for the (q+1)-dimensional space of binary
forms of order q.  Products follow the Clebsch-Gordan rule and
symmetric powers the Cayley-Sylvester rule; both are exact integer
computations.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .errors import NegativeMultiplicity, NonRepresentationWeights

__all__ = [
    "Character",
    "partition_count",
    "linear_combine",
    "clebsch_gordan",
    "symmetric_power",
    "sup_and_compare",
    "character_from_weights",
    "expand_to_weights",
    "require_effective",
]


@lru_cache(maxsize=None)
def partition_count(a: int, b: int, c: int) -> int:
    """Number of partitions of a into at most b parts, each part <= c.

    Returns 0 for a < 0 and 1 for a = 0 (the empty partition).
    """
    if a < 0:
        return 0
    if a == 0:
        return 1
    if b <= 0 or c <= 0:
        return 0
    if a > b * c:
        return 0
    # split off: partitions with fewer than b parts, or exactly b parts
    # (subtract 1 from every part in the second case)
    return partition_count(a, b - 1, c) + partition_count(a - b, b, c - 1)


class Character:
    """Finitely supported integer combination of the irreducibles s_q.

    Multiplicities may be negative (the representation ring is a ring);
    zero multiplicities are never stored.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for q, mult in coeffs.items():
                if not isinstance(q, int) or q < 0:
                    raise ValueError(f"invalid irreducible label {q!r}")
                if not isinstance(mult, int):
                    raise ValueError(f"multiplicity of s_{q} must be an integer")
                if mult != 0:
                    clean[q] = mult
        self._coeffs = clean

    @classmethod
    def s(cls, q: int, mult: int = 1) -> "Character":
        return cls({q: mult})

    @classmethod
    def zero(cls) -> "Character":
        return cls()

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def multiplicity(self, q: int) -> int:
        return self._coeffs.get(q, 0)

    def support(self) -> list[int]:
        return sorted(self._coeffs, reverse=True)

    def dimension(self) -> int:
        return sum(mult * (q + 1) for q, mult in self._coeffs.items())

    def is_effective(self) -> bool:
        return all(mult >= 0 for mult in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._coeffs)
        for q, mult in other._coeffs.items():
            out[q] = out.get(q, 0) + mult
        return Character(out)

    def __sub__(self, other: "Character") -> "Character":
        out = dict(self._coeffs)
        for q, mult in other._coeffs.items():
            out[q] = out.get(q, 0) - mult
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({q: -mult for q, mult in self._coeffs.items()})

    def __rmul__(self, scalar: int) -> "Character":
        if not isinstance(scalar, int):
            return NotImplemented
        return Character({q: scalar * mult for q, mult in self._coeffs.items()})

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return other * self
        if not isinstance(other, Character):
            return NotImplemented
        out: dict[int, int] = {}
        for p, mp in self._coeffs.items():
            for q, mq in other._coeffs.items():
                m = mp * mq
                for r in range(min(p, q) + 1):
                    key = p + q - 2 * r
                    out[key] = out.get(key, 0) + m
        return Character(out)

    def __ge__(self, other: "Character") -> bool:
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self.multiplicity(q) >= other.multiplicity(q) for q in keys)

    def __le__(self, other: "Character") -> bool:
        return other.__ge__(self)

    def sup(self, other: "Character") -> "Character":
        keys = set(self._coeffs) | set(other._coeffs)
        return Character({q: max(self.multiplicity(q), other.multiplicity(q)) for q in keys})

    def to_pairs(self) -> list[list[int]]:
        """[[q, mult], ...] with q strictly decreasing; the JSON wire form."""
        return [[q, self._coeffs[q]] for q in sorted(self._coeffs, reverse=True)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "Character":
        out: dict[int, int] = {}
        for q, mult in pairs:
            out[int(q)] = out.get(int(q), 0) + int(mult)
        return cls(out)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for q in sorted(self._coeffs, reverse=True):
            mult = self._coeffs[q]
            term = f"s{q}" if abs(mult) == 1 else f"{abs(mult)}*s{q}"
            if not parts:
                parts.append(term if mult > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if mult > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Character({self._coeffs!r})"


def linear_combine(terms: Iterable[tuple[int, Character]]) -> Character:
    """Integer linear combination of characters; zero entries are dropped."""
    out: dict[int, int] = {}
    for coeff, ch in terms:
        for q, mult in ch._coeffs.items():
            out[q] = out.get(q, 0) + coeff * mult
    return Character(out)


def clebsch_gordan(p: int, q: int) -> Character:
    """Decomposition of the tensor product s_p * s_q into irreducibles."""
    return Character.s(p) * Character.s(q)


def symmetric_power(p: int, q: int) -> Character:
    """Character of the p-th symmetric power of the order-q irreducible.

    Computed by the Cayley-Sylvester rule: the multiplicity of
    s_{pq-2r} is partition_count(r,p,q) - partition_count(r-1,p,q).
    """
    if p < 0 or q < 0:
        raise ValueError("symmetric_power expects nonnegative arguments")
    out = {}
    for r in range(p * q // 2 + 1):
        mult = partition_count(r, p, q) - partition_count(r - 1, p, q)
        if mult < 0:
            raise AssertionError(f"negative multiplicity in Sym^{p}(S_{q}) at r={r}")
        if mult:
            out[p * q - 2 * r] = mult
    return Character(out)


def sup_and_compare(a: Character, b: Character) -> tuple[Character, bool]:
    """Componentwise maximum of a and b, plus whether a >= b throughout."""
    return a.sup(b), a >= b


def expand_to_weights(ch: Character) -> dict[int, int]:
    """Torus weight multiplicities of an effective character.

    Each s_q contributes the weights q, q-2, ..., -q once per copy.
    """
    if not ch.is_effective():
        raise NegativeMultiplicity(f"cannot expand virtual character {ch}")
    weights: dict[int, int] = {}
    for q, mult in ch.coeffs.items():
        for w in range(-q, q + 1, 2):
            weights[w] = weights.get(w, 0) + mult
    return weights


def character_from_weights(weights: Mapping[int, int]) -> Character:
    """Reconstruct a character from torus weight multiplicities.

    The input must be symmetric under w <-> -w, supported on a single
    parity, and consistent with a genuine representation: the derived
    multiplicity of s_q is weights[q] - weights[q+2] and must be
    nonnegative.  Violations raise NonRepresentationWeights, which in
    practice signals a corrupted kernel computation upstream.
    """
    support = {w for w, mult in weights.items() if mult != 0}
    if not support:
        return Character.zero()

    parities = {abs(w) % 2 for w in support}
    if len(parities) > 1:
        raise NonRepresentationWeights(f"mixed weight parities in {sorted(support)}")
    for w in support:
        if weights.get(w, 0) < 0:
            raise NonRepresentationWeights(f"negative multiplicity at weight {w}")
        if weights.get(-w, 0) != weights.get(w, 0):
            raise NonRepresentationWeights(
                f"asymmetric multiplicities at weights {w} and {-w}"
            )

    out = {}
    top = max(support)
    for q in range(top, -1, -2):
        mult = weights.get(q, 0) - weights.get(q + 2, 0)
        if mult < 0:
            raise NonRepresentationWeights(
                f"weight profile drops by {-mult} between {q + 2} and {q}"
            )
        if mult:
            out[q] = mult
    return Character(out)


def require_effective(ch: Character, context: str) -> Character:
    """Assert that every multiplicity is nonnegative; report offenders."""
    bad = sorted(q for q, mult in ch.coeffs.items() if mult < 0)
    if bad:
        raise NegativeMultiplicity(
            f"{context}: negative multiplicity at s_{', s_'.join(map(str, bad))}"
        )
    return ch
