"""Tests for the exact bivariate series kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbch.series import BiSeries, InexactDivision, bernoulli

F = Fraction


# ---------------------------------------------------------------------------
# Independent oracle: Bernoulli numbers by long division of t/(e^t - 1).
# ---------------------------------------------------------------------------

def _bernoulli_by_long_division(n_max):
    """B_n = n! * [t^n] (t / (e^t - 1)), inverting sum t^k/(k+1)! directly."""
    fact = [1]
    for k in range(1, n_max + 2):
        fact.append(fact[-1] * k)
    a = [F(1, fact[k + 1]) for k in range(n_max + 1)]  # (e^t - 1)/t
    inv = [F(0)] * (n_max + 1)
    inv[0] = F(1)
    for m in range(1, n_max + 1):
        inv[m] = -sum(a[k] * inv[m - k] for k in range(1, m + 1))
    return [fact[n] * inv[n] for n in range(n_max + 1)]


def test_bernoulli_against_long_division_oracle():
    oracle = _bernoulli_by_long_division(16)
    for n in range(17):
        assert bernoulli(n) == oracle[n]


def test_bernoulli_frozen_values():
    # Values frozen from the long-division oracle / classical tables.
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(4) == F(-1, 30)
    assert bernoulli(12) == F(-691, 2730)
    for n in range(3, 30, 2):
        assert bernoulli(n) == 0
    with pytest.raises(ValueError):
        bernoulli(-1)


# ---------------------------------------------------------------------------
# Construction, inspection, named series
# ---------------------------------------------------------------------------

def test_named_expm1_over_t_univariate():
    s = BiSeries.named("expm1_over_t", "x", 5)
    # (e^x - 1)/x = sum x^n/(n+1)!
    assert s.coefficient(0, 0) == 1
    assert s.coefficient(1, 0) == F(1, 2)
    assert s.coefficient(2, 0) == F(1, 6)
    assert s.coefficient(3, 0) == F(1, 24)
    assert all(s.coefficient(i, j) == 0 for i in range(5) for j in range(1, 5 - i))


def test_named_at_linear_forms_binomial_expansion():
    s = BiSeries.named("exp", "x+y", 4)
    # e^(x+y) coefficient of x^i y^j is 1/(i! j!) = C(i+j, i)/(i+j)!
    fact = [1, 1, 2, 6, 24]
    for i in range(5):
        for j in range(5 - i):
            assert s.coefficient(i, j) == F(1, fact[i] * fact[j])
    t = BiSeries.named("expm1", "-y", 3)
    assert t.coefficient(0, 0) == 0
    assert t.coefficient(0, 1) == -1
    assert t.coefficient(0, 2) == F(1, 2)
    assert t.coefficient(0, 3) == F(-1, 6)


def test_named_product_pairs_are_one():
    one = BiSeries.one(8)
    for form in ("x", "y", "-x", "-y", "x+y", "-x-y"):
        prod = BiSeries.named("t_over_expm1", form, 8) * BiSeries.named(
            "expm1_over_t", form, 8
        )
        assert prod == one


def test_exp_times_exp_in_two_variables():
    prod = BiSeries.named("exp", "x", 6) * BiSeries.named("exp", "y", 6)
    assert prod == BiSeries.named("exp", "x+y", 6)


def test_named_rejects_unknown_inputs():
    with pytest.raises(ValueError):
        BiSeries.named("sinh", "x", 4)
    with pytest.raises(ValueError):
        BiSeries.named("exp", "x+2y", 4)


def test_coefficient_beyond_truncation_raises():
    s = BiSeries.one(3)
    with pytest.raises(ValueError):
        s.coefficient(2, 2)


# ---------------------------------------------------------------------------
# Inverse and exact division
# ---------------------------------------------------------------------------

def test_inverse_of_expm1_over_t_gives_bernoulli_stream():
    # (x+y)/(e^(x+y) - 1) starts 1 - (x+y)/2 + ...
    inv = BiSeries.named("expm1_over_t", "x+y", 6).inverse()
    assert inv.coefficient(0, 0) == 1
    assert inv.coefficient(1, 0) == F(-1, 2)
    assert inv.coefficient(0, 1) == F(-1, 2)
    assert inv == BiSeries.named("t_over_expm1", "x+y", 6)


def test_inverse_requires_unit():
    with pytest.raises(ValueError, match="non-unit series"):
        BiSeries.monomial(1, 0, 4).inverse()


def test_divide_exact_simple():
    y = BiSeries.monomial(0, 1, 5)
    num = BiSeries(5, {(1, 1): 1, (0, 2): 1})  # x*y + y^2
    q = num.divide_exact(y)
    assert q == BiSeries(4, {(1, 0): 1, (0, 1): 1})


def test_divide_exact_rejects_remainder():
    y = BiSeries.monomial(0, 1, 5)
    with pytest.raises(InexactDivision, match="inexact division"):
        (BiSeries.one(5) + BiSeries.monomial(1, 0, 5)).divide_exact(y)
    # x^2 / (x*y) is not a polynomial even though the univariate division works
    with pytest.raises(InexactDivision):
        BiSeries.monomial(2, 0, 5).divide_exact(BiSeries.monomial(1, 1, 5))


def test_divide_exact_by_zero():
    with pytest.raises(ZeroDivisionError):
        BiSeries.one(4).divide_exact(BiSeries.zero(4))


def test_divide_exact_difference_of_exponentials():
    # (e^x - e^y) / (x - y) is a unit with constant term 1.
    num = BiSeries.named("expm1", "x", 9) - BiSeries.named("expm1", "y", 9)
    den = BiSeries.monomial(1, 0, 9) - BiSeries.monomial(0, 1, 9)
    unit = num.divide_exact(den)
    assert unit.coefficient(0, 0) == 1
    assert unit * den.truncate(8) == num.truncate(8)


# ---------------------------------------------------------------------------
# Substitutions, parity, shift
# ---------------------------------------------------------------------------

def test_subst_negswap_example():
    s = BiSeries(4, {(1, 0): 1, (0, 1): 2, (2, 1): F(1, 3)})
    t = s.subst_negswap()
    assert t.coefficient(0, 1) == -1
    assert t.coefficient(1, 0) == -2
    assert t.coefficient(1, 2) == F(-1, 3)


def test_parity_split_recombines():
    s = BiSeries.named("t_over_expm1", "x+y", 7)
    even, odd = s.parity_split()
    assert even + odd == s
    assert all((i + j) % 2 == 0 for i, j, _ in even.terms())
    assert all((i + j) % 2 == 1 for i, j, _ in odd.terms())


def test_shift_roundtrip():
    s = BiSeries.named("exp", "x", 5)
    y = BiSeries.monomial(0, 1, 6)
    assert s.shift(0, 1).divide_exact(y) == s
    assert s.shift(2, 1).truncation == 8


# ---------------------------------------------------------------------------
# Alternating-sum identities for the double sums over P^r Q^s
# ---------------------------------------------------------------------------

def _power_table(mono, n):
    out = [BiSeries.one(n)]
    for _ in range(n):
        out.append(out[-1] * mono)
    return out


def test_alternating_double_sum_identity_a():
    # sum_{m>=2} ((-1)^(m-1)/m) sum_{r+s=m, r,s>=1} P^r Q^s
    #   == (Q ln(1+P) - P ln(1+Q)) / (P - Q)   with P = x, Q = y.
    n = 12
    xp = _power_table(BiSeries.monomial(1, 0, n), n)
    yp = _power_table(BiSeries.monomial(0, 1, n), n)
    lhs = BiSeries.zero(n)
    for m in range(2, n + 1):
        inner = BiSeries.zero(n)
        for r in range(1, m):
            inner = inner + xp[r] * yp[m - r]
        lhs = lhs + F((-1) ** (m - 1), m) * inner
    lnx = BiSeries.named("log1p", "x", n + 1)
    lny = BiSeries.named("log1p", "y", n + 1)
    num = BiSeries.monomial(0, 1, n + 1) * lnx - BiSeries.monomial(1, 0, n + 1) * lny
    den = BiSeries.monomial(1, 0, n + 1) - BiSeries.monomial(0, 1, n + 1)
    assert lhs == num.divide_exact(den)


def test_alternating_double_sum_identity_b():
    # sum_{m>=1} ((-1)^(m-1)/m) sum_{r+s=m+1, r,s>=1} P^r Q^s
    #   == (PQ/(P-Q)) ln((1+P)/(1+Q))          with P = x, Q = y.
    n = 12
    xp = _power_table(BiSeries.monomial(1, 0, n), n)
    yp = _power_table(BiSeries.monomial(0, 1, n), n)
    lhs = BiSeries.zero(n)
    for m in range(1, n):
        inner = BiSeries.zero(n)
        for r in range(1, m + 1):
            inner = inner + xp[r] * yp[m + 1 - r]
        lhs = lhs + F((-1) ** (m - 1), m) * inner
    lnratio = BiSeries.named("log1p", "x", n - 1) - BiSeries.named("log1p", "y", n - 1)
    den = BiSeries.monomial(1, 0, n + 1) - BiSeries.monomial(0, 1, n + 1)
    rhs = lnratio.shift(1, 1).divide_exact(den)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# Serialization and text
# ---------------------------------------------------------------------------

def test_json_roundtrip_and_order():
    s = BiSeries(4, {(0, 1): F(-1, 12), (1, 0): F(1, 12), (0, 0): F(1, 2)})
    d = s.to_json_dict()
    assert d["truncation"] == 4
    assert [(t["i"], t["j"]) for t in d["terms"]] == [(0, 0), (0, 1), (1, 0)]
    assert d["terms"][1]["c"] == "-1/12"
    assert BiSeries.from_json_dict(d) == s


def test_str_forms():
    assert str(BiSeries.zero(3)) == "0"
    s = BiSeries(4, {(0, 0): F(1, 2), (1, 1): F(-1, 24), (2, 0): 1})
    assert str(s) == "1/2 - 1/24 x y + x^2"


def test_truncate_and_padded():
    s = BiSeries.named("exp", "x", 6)
    t = s.truncate(2)
    assert t.truncation == 2
    with pytest.raises(ValueError):
        t.truncate(5)
    p = t.padded(4)
    assert p.truncation == 4 and p.coefficient(3, 0) == 0


# ---------------------------------------------------------------------------
# Ring laws (property-based)
# ---------------------------------------------------------------------------

_frac = st.fractions(min_value=-3, max_value=3, max_denominator=8)
_key = st.tuples(st.integers(0, 5), st.integers(0, 5))
_series = st.dictionaries(_key, _frac, max_size=6).map(lambda d: BiSeries(6, d))


@settings(max_examples=120, deadline=None)
@given(_series, _series, _series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=80, deadline=None)
@given(_series)
def test_negswap_is_an_involution_and_multiplicative(a):
    assert a.subst_negswap().subst_negswap() == a
    b = BiSeries.named("exp", "x", 6)
    assert (a * b).subst_negswap() == a.subst_negswap() * b.subst_negswap()


@settings(max_examples=60, deadline=None)
@given(_series, _frac)
def test_inverse_on_units(a, c0):
    unit = a + BiSeries.constant(c0 + 7, 6)  # force nonzero constant term
    assert unit * unit.inverse() == BiSeries.one(6)


@settings(max_examples=60, deadline=None)
@given(_series)
def test_exact_division_roundtrip(q):
    for d in (
        BiSeries.monomial(0, 1, 6),
        BiSeries.monomial(1, 0, 6) - BiSeries.monomial(0, 1, 6),
        BiSeries.monomial(1, 0, 6, 2),
        BiSeries.monomial(1, 0, 6) + BiSeries.monomial(0, 1, 6),
    ):
        v = d.min_degree()
        assert (q * d).divide_exact(d) == q.truncate(6 - v)
