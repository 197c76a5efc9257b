"""Tests for the free Lie algebra machinery."""

import random
from fractions import Fraction

import pytest

from mbch.assoc import bch_log_oracle
from mbch.freelie import (
    Derivation,
    LieElement,
    LieSeries,
    apply_derivation,
    bracket,
    chain_tree,
    from_lyndon_coords,
    ideal_membership,
    ideal_spanning_elements,
    in_span,
    is_lyndon,
    long_commutator,
    lyndon_coords_of_assoc,
    lyndon_words,
    render_tree,
    right_normed,
    span_rank,
    standard_bracketing,
    standard_factorization,
    to_assoc,
    to_lyndon_coords,
    tree_word,
)

F = Fraction
X = LieElement.generator("X")
Y = LieElement.generator("Y")


# ---------------------------------------------------------------------------
# Independent oracle: count Lyndon words by Moebius/necklace counting.
# ---------------------------------------------------------------------------

def _moebius(n):
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def _necklace_count(d):
    return sum(_moebius(e) * 2 ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


def _random_tree(rng, max_depth):
    if max_depth == 0 or rng.random() < 0.35:
        return rng.choice("XY")
    return (_random_tree(rng, max_depth - 1), _random_tree(rng, max_depth - 1))


def _random_element(rng, max_depth=3, nterms=3):
    terms = {}
    for _ in range(nterms):
        t = _random_tree(rng, max_depth)
        terms[t] = F(rng.randint(-4, 4), rng.randint(1, 4))
    return LieElement(terms)


# ---------------------------------------------------------------------------
# Trees, brackets, long commutators
# ---------------------------------------------------------------------------

def test_long_commutator_examples():
    assert long_commutator("XY").term_dict() == {("X", "Y"): 1}
    assert long_commutator("XXY").term_dict() == {("X", ("X", "Y")): 1}
    assert long_commutator("XX").is_zero()
    assert long_commutator("XYY").is_zero()
    with pytest.raises(ValueError):
        long_commutator("XZ")


def test_bracket_drops_syntactically_equal_pairs():
    assert bracket(X, X).is_zero()
    a = bracket(X, Y) + Y
    assert to_lyndon_coords(bracket(a, a)) == {}


def test_render_and_tree_word():
    t = chain_tree("XXY")
    assert tree_word(t) == "XXY"
    assert render_tree(t) == "[X^2Y]"
    nested = (("X", "Y"), "Y")
    assert tree_word(nested) is None
    assert render_tree(nested) == "[[XY],Y]"


def test_expansion_of_double_bracket():
    nc = to_assoc(long_commutator("XXY"), 3)
    assert nc.coefficient("XXY") == 1
    assert nc.coefficient("XYX") == -2
    assert nc.coefficient("YXX") == 1


def test_to_assoc_is_a_homomorphism():
    rng = random.Random(7)
    for _ in range(25):
        a = _random_element(rng)
        b = _random_element(rng)
        n = 10
        lhs = to_assoc(bracket(a, b), n)
        ea, eb = to_assoc(a, n), to_assoc(b, n)
        assert lhs == ea * eb - eb * ea


def test_jacobi_identity():
    rng = random.Random(11)
    for _ in range(20):
        a, b, c = (_random_element(rng, 2, 2) for _ in range(3))
        j = (
            bracket(a, bracket(b, c))
            + bracket(b, bracket(c, a))
            + bracket(c, bracket(a, b))
        )
        assert to_lyndon_coords(j) == {}


# ---------------------------------------------------------------------------
# Lyndon machinery
# ---------------------------------------------------------------------------

def test_lyndon_words_low_degree():
    assert lyndon_words(1) == ["X", "Y"]
    assert lyndon_words(2) == ["XY"]
    assert lyndon_words(4) == ["XXXY", "XXYY", "XYYY"]


def test_lyndon_counts_match_necklace_oracle():
    for d in range(1, 13):
        words = lyndon_words(d)
        assert len(words) == _necklace_count(d)
        assert words == sorted(words)
        assert all(is_lyndon(w) for w in words)


def test_is_lyndon():
    assert is_lyndon("XY")
    assert not is_lyndon("YX")
    assert not is_lyndon("XYXY")
    assert not is_lyndon("")


def test_standard_factorization():
    assert standard_factorization("XY") == ("X", "Y")
    assert standard_factorization("XXYY") == ("X", "XYY")
    assert standard_factorization("XYXYY") == ("XY", "XYY")
    assert standard_bracketing("XXYY") == ("X", (("X", "Y"), "Y"))
    with pytest.raises(ValueError):
        standard_factorization("YX")


def test_to_lyndon_coords_examples():
    assert to_lyndon_coords(bracket(Y, bracket(X, Y))) == {"XYY": F(-1)}
    assert to_lyndon_coords(X + 2 * Y) == {"X": 1, "Y": 2}


def test_lyndon_roundtrip_random():
    rng = random.Random(23)
    for _ in range(30):
        e = _random_element(rng)
        coords = to_lyndon_coords(e)
        back = from_lyndon_coords(coords)
        n = max(8, e.max_degree())
        assert to_assoc(back, n) == to_assoc(e, n)
        assert to_lyndon_coords(back) == coords


def test_lyndon_coords_of_assoc_rejects_non_lie():
    x = to_assoc(X, 4)
    with pytest.raises(ValueError, match="not a Lie element"):
        lyndon_coords_of_assoc(x * x)


def test_friedrichs_on_oracle_components():
    h = bch_log_oracle(8)
    for d in range(1, 9):
        part = h.degree_part(d)
        coords = lyndon_coords_of_assoc(part)
        assert to_assoc(from_lyndon_coords(coords), 8) == part


# ---------------------------------------------------------------------------
# Right-normed rewriting
# ---------------------------------------------------------------------------

def test_right_normed_preserves_coordinates():
    rng = random.Random(31)
    for _ in range(30):
        e = _random_element(rng)
        r = right_normed(e)
        assert to_lyndon_coords(r) == to_lyndon_coords(e)
        assert all(tree_word(t) is not None for t, _ in r.terms())


def test_right_normed_on_left_nested():
    e = LieElement({(("X", "Y"), "Y"): 1})  # [[X,Y],Y]
    r = right_normed(e)
    assert r.term_dict() == {chain_tree("YXY"): -1}


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

def test_apply_derivation_kills_equal_pair():
    out = apply_derivation((None, X), bracket(X, Y), 6)
    assert to_lyndon_coords(out) == {}


def test_apply_derivation_simple_image():
    # D(X) = 0, D(Y) = [X,Y] on [X,Y] gives [X,[X,Y]].
    out = apply_derivation((None, long_commutator("XY")), bracket(X, Y), 6)
    assert to_lyndon_coords(out) == to_lyndon_coords(long_commutator("XXY"))


def test_derivation_leibniz_property():
    rng = random.Random(41)
    d = Derivation(long_commutator("XY"), X, 12)
    for _ in range(20):
        a = _random_element(rng, 2, 2)
        b = _random_element(rng, 2, 2)
        lhs = d(bracket(a, b))
        rhs = bracket(d(a), b) + bracket(a, d(b))
        assert to_lyndon_coords(lhs) == to_lyndon_coords(rhs)


def test_derivation_respects_truncation():
    d = Derivation(None, long_commutator("XY"), 2)
    assert d(bracket(X, Y)).is_zero()  # image would be degree 3


# ---------------------------------------------------------------------------
# Span helpers and ideal membership
# ---------------------------------------------------------------------------

def test_span_helpers():
    v1 = {"a": F(1), "b": F(2)}
    v2 = {"b": F(1)}
    assert span_rank([v1, v2, {"a": F(2), "b": F(5)}]) == 2
    assert in_span([v1, v2], {"a": F(3), "b": F(1)})
    assert not in_span([v1], {"b": F(1)})


def test_ideal_membership_metabelian():
    e = bracket(long_commutator("XY"), long_commutator("XXY"))
    assert ideal_membership(e, "metabelian")
    assert not ideal_membership(long_commutator("XXY"), "metabelian")
    assert not ideal_membership(e, "deeper")  # degree 5 < 6


def test_ideal_membership_deeper():
    inner = bracket(long_commutator("XY"), long_commutator("XXY"))
    e = bracket(long_commutator("XY"), inner)
    assert ideal_membership(e, "deeper")
    assert ideal_membership(e, "metabelian")
    with pytest.raises(ValueError):
        ideal_membership(e, "solvable")


def test_ideal_spanning_degrees():
    # Degree 4 only offers [u, u] with u = [XY], which vanishes; the first
    # nonzero component of [[L,L],[L,L]] lives in degree 5.
    assert not ideal_spanning_elements("metabelian", 4)
    assert ideal_spanning_elements("metabelian", 5)
    assert not ideal_spanning_elements("metabelian", 3)
    # Same story one level down: degree 6 forces v = w = [XY] inside
    # [u, [v, w]], so the deeper ideal first shows up in degree 7.
    assert not ideal_spanning_elements("deeper", 6)
    assert ideal_spanning_elements("deeper", 7)
    assert not ideal_spanning_elements("deeper", 5)


# ---------------------------------------------------------------------------
# LieSeries
# ---------------------------------------------------------------------------

def test_series_enforces_homogeneity():
    with pytest.raises(ValueError, match="homogeneous"):
        LieSeries(4, {2: X + bracket(X, Y)})


def test_series_roundtrip_json():
    s = LieSeries.from_element(X + Y + F(1, 2) * bracket(X, Y), 4)
    d = s.to_json_dict()
    assert d["basis"] == "lyndon"
    assert [t["word"] for t in d["terms"]] == ["X", "Y", "XY"]
    assert LieSeries.from_json_dict(d) == s


def test_series_str():
    s = LieSeries.from_element(X + F(1, 2) * bracket(X, Y), 3)
    assert str(s) == "X + 1/2 [XY]"


def test_series_algebra_and_parts():
    s = LieSeries.from_element(X + bracket(X, Y), 3)
    t = LieSeries.from_element(Y, 3)
    u = s + t
    assert to_lyndon_coords(u.part(1)) == {"X": 1, "Y": 1}
    assert to_lyndon_coords((2 * s).part(2)) == {"XY": 2}
    assert s.truncate(1).part(1) == X
