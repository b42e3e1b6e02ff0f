"""Representation-ring arithmetic against brute-force oracles."""

import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitlab.errors import NegativeMultiplicity, NonRepresentationWeights
from orbitlab.repring import (
    Character,
    character_from_weights,
    clebsch_gordan,
    expand_to_weights,
    linear_combine,
    partition_count,
    require_effective,
    sup_and_compare,
    symmetric_power,
)


# ---------------------------------------------------------------------------
# independent oracles


def brute_partitions(a, b, c):
    """Enumerate partitions of a into at most b parts, each <= c."""
    if a < 0:
        return []
    found = []

    def rec(remaining, max_part, parts):
        if remaining == 0:
            found.append(tuple(parts))
            return
        if len(parts) == b:
            return
        for part in range(min(remaining, max_part), 0, -1):
            parts.append(part)
            rec(remaining - part, part, parts)
            parts.pop()

    rec(a, c, [])
    return found


def char_by_weight_enumeration(weights):
    """Turn a multiset of torus weights into a character, top weight first."""
    tally = {}
    for w in weights:
        tally[w] = tally.get(w, 0) + 1
    out = {}
    while any(tally.values()):
        top = max(w for w, m in tally.items() if m > 0)
        out[top] = out.get(top, 0) + 1
        for w in range(-top, top + 1, 2):
            tally[w] -= 1
    return Character(out)


def brute_tensor(p, q):
    """Tensor product character via weight enumeration."""
    weights = [
        wp + wq for wp in range(-p, p + 1, 2) for wq in range(-q, q + 1, 2)
    ]
    return char_by_weight_enumeration(weights)


def brute_sym_power(p, q):
    """Symmetric power character by enumerating degree-p monomials."""
    var_weights = list(range(q, -q - 1, -2))
    weights = [
        sum(mono)
        for mono in itertools.combinations_with_replacement(var_weights, p)
    ]
    return char_by_weight_enumeration(weights)


characters = st.dictionaries(
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=-4, max_value=4),
    max_size=6,
).map(Character)

# weight reconstruction requires a single parity, matching the parity
# purity of any graded piece Sym^m(S_d)
effective_single_parity = st.tuples(
    st.sampled_from([0, 1]),
    st.dictionaries(
        st.integers(min_value=0, max_value=15),
        st.integers(min_value=1, max_value=3),
        max_size=6,
    ),
).map(lambda t: Character({2 * q + t[0]: m for q, m in t[1].items()}))


# ---------------------------------------------------------------------------
# partition counting


def test_partition_count_negative_total():
    assert partition_count(-1, 3, 5) == 0


def test_partition_count_empty_partition():
    assert partition_count(0, 4, 2) == 1
    assert partition_count(0, 0, 0) == 1


def test_partition_count_small_case():
    assert brute_partitions(2, 2, 4) == [(2,), (1, 1)]
    assert partition_count(2, 2, 4) == 2


@given(
    st.integers(min_value=0, max_value=18),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)
@settings(max_examples=200)
def test_partition_count_matches_enumeration(a, b, c):
    assert partition_count(a, b, c) == len(brute_partitions(a, b, c))


def test_partition_count_box_symmetry():
    # partitions in a b x c box biject with their transposes in a c x b box
    for a in range(0, 25):
        assert partition_count(a, 5, 7) == partition_count(a, 7, 5)


# ---------------------------------------------------------------------------
# linear structure


def test_linear_combine_merges_terms():
    s4 = Character.s(4)
    assert linear_combine([(1, s4), (1, s4)]) == Character({4: 2})
    assert linear_combine([(1, Character({4: 1, 2: 1})), (-1, Character.s(2))]) == s4
    assert linear_combine([]) == Character.zero()


def test_character_drops_zero_entries():
    assert Character({4: 0, 2: 1}).coeffs == {2: 1}
    assert not Character.zero()


def test_character_equality_and_hash():
    a = Character({4: 1, 2: -2})
    b = Character({2: -2, 4: 1})
    assert a == b
    assert hash(a) == hash(b)
    assert a != Character({4: 1})


def test_virtual_characters_are_legal():
    diff = Character.s(2) - Character.s(4)
    assert diff.multiplicity(4) == -1
    assert not diff.is_effective()
    with pytest.raises(NegativeMultiplicity):
        require_effective(diff, "test")


# ---------------------------------------------------------------------------
# Clebsch-Gordan products


def test_product_golden_5_3():
    expected = Character({8: 1, 6: 1, 4: 1, 2: 1})
    assert Character.s(5) * Character.s(3) == expected


def test_product_with_trivial():
    for p in range(8):
        assert Character.s(p) * Character.s(0) == Character.s(p)


def test_product_1_1_by_weight_enumeration():
    assert brute_tensor(1, 1) == Character({2: 1, 0: 1})
    assert Character.s(1) * Character.s(1) == Character({2: 1, 0: 1})


@given(
    st.integers(min_value=0, max_value=9),
    st.integers(min_value=0, max_value=9),
)
@settings(max_examples=200)
def test_product_matches_weight_enumeration(p, q):
    assert clebsch_gordan(p, q) == brute_tensor(p, q)


@given(
    st.integers(min_value=0, max_value=12),
    st.integers(min_value=0, max_value=12),
)
@settings(max_examples=200)
def test_product_dimension(p, q):
    assert clebsch_gordan(p, q).dimension() == (p + 1) * (q + 1)


@given(characters, characters)
@settings(max_examples=200)
def test_product_commutative(a, b):
    assert a * b == b * a


@given(characters, characters, characters)
@settings(max_examples=100)
def test_product_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


# ---------------------------------------------------------------------------
# symmetric powers


def test_sym_power_golden_4_7():
    expected = Character(
        {
            28: 1,
            24: 1,
            22: 1,
            20: 2,
            18: 1,
            16: 3,
            14: 2,
            12: 3,
            10: 2,
            8: 3,
            6: 1,
            4: 3,
            0: 1,
        }
    )
    assert symmetric_power(4, 7) == expected


def test_sym_power_identity_cases():
    for d in range(11):
        assert symmetric_power(1, d) == Character.s(d)


def test_sym_power_2_2_by_weight_enumeration():
    assert brute_sym_power(2, 2) == Character({4: 1, 0: 1})
    assert symmetric_power(2, 2) == Character({4: 1, 0: 1})


def test_sym_power_dimensions():
    for p in range(13):
        for q in range(13):
            assert symmetric_power(p, q).dimension() == comb(p + q, q)


@given(
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=0, max_value=8),
)
@settings(max_examples=200, deadline=None)
def test_sym_power_matches_weight_enumeration(p, q):
    assert symmetric_power(p, q) == brute_sym_power(p, q)


# ---------------------------------------------------------------------------
# componentwise order and sup


def test_sup_and_compare_basic():
    a = Character({4: 1, 2: 1})
    b = Character.s(2)
    sup, geq = sup_and_compare(a, b)
    assert sup == a and geq

    sup, geq = sup_and_compare(Character.s(4), Character.s(2))
    assert sup == Character({4: 1, 2: 1}) and not geq


@given(characters, characters)
@settings(max_examples=200)
def test_sup_dominates_both(a, b):
    sup = a.sup(b)
    assert sup >= a and sup >= b
    assert (sup == b) == (a <= b)


# ---------------------------------------------------------------------------
# weight expansion and reconstruction


def test_character_from_weights_basic():
    assert character_from_weights({1: 1, -1: 1}) == Character.s(1)
    assert character_from_weights({2: 1, 0: 2, -2: 1}) == Character({2: 1, 0: 1})
    assert character_from_weights({}) == Character.zero()


def test_character_from_weights_rejects_bad_profiles():
    with pytest.raises(NonRepresentationWeights):
        character_from_weights({2: 1, 0: 0, -2: 1})
    with pytest.raises(NonRepresentationWeights):
        character_from_weights({2: 1, -2: 2})
    with pytest.raises(NonRepresentationWeights):
        character_from_weights({2: 1, 1: 1, -1: 1, -2: 1})
    with pytest.raises(NonRepresentationWeights):
        character_from_weights({0: -1})


@given(effective_single_parity)
@settings(max_examples=200)
def test_weights_roundtrip(ch):
    assert character_from_weights(expand_to_weights(ch)) == ch


# ---------------------------------------------------------------------------
# serialization


def test_pairs_roundtrip_descending():
    ch = Character({18: 1, 14: 2, 10: 1})
    assert ch.to_pairs() == [[18, 1], [14, 2], [10, 1]]
    assert Character.from_pairs(ch.to_pairs()) == ch


def test_str_display():
    assert str(Character({18: 1, 14: 2, 10: 1})) == "s18 + 2*s14 + s10"
    assert str(Character.zero()) == "0"
    assert str(Character.s(4) - Character.s(2)) == "s4 - s2"


def test_dimension_golden():
    assert Character.s(9).dimension() == 10
    assert Character({18: 1, 14: 2, 10: 1}).dimension() == 60
