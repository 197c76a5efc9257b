"""Classical constructions of log(e^X e^Y) in the free Lie algebra.

Two independent routes are provided.  ``bch_recursive`` runs the
derivation recursion: with D the derivation sending X to 0 and Y to the
series ``hausdorff_h1``, the pieces H_0 = Y, H_m = D(H_{m-1})/m sum to
the full series, and H_m collects exactly the terms of degree m in X.
``bch_dynkin`` evaluates the explicit double sum over tuples of block
exponents.  Both agree, word for word, with the noncommutative oracle
``assoc.bch_log_oracle``; the test suite checks all three against each
other.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial
from typing import Iterator

from .series import bernoulli
from .freelie import (
    Derivation,
    LieElement,
    LieSeries,
    long_commutator,
    right_normed,
)

__all__ = ["hausdorff_h1", "bch_recursive", "bch_recursive_steps", "bch_dynkin"]


def hausdorff_h1(truncation: int) -> LieSeries:
    """First derivation image: X + sum of (B_n / n!) [Y^n X], n >= 1.

    Terms are kept through total degree ``truncation``; the degree n + 1
    chain [Y^n X] therefore appears for n up to truncation - 1.  Odd
    Bernoulli numbers beyond B_1 vanish, so only n = 1 and even n
    contribute.
    """
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    acc = LieElement.generator("X")
    for n in range(1, truncation):
        b = bernoulli(n)
        if b:
            acc = acc + (b / factorial(n)) * long_commutator("Y" * n + "X")
    return LieSeries.from_element(acc, truncation)


def bch_recursive_steps(truncation: int) -> Iterator[LieElement]:
    """Yield H_0, H_1, ... of the derivation recursion, cut at the truncation.

    H_m is homogeneous of degree m in X (each substitution of the image
    of Y consumes one Y and introduces exactly one X).  Every yielded
    element is rewritten into right-nested chain form between steps,
    which keeps the term count bounded by the number of words of each
    degree instead of growing with the Leibniz expansion tree.
    """
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    d = Derivation(None, hausdorff_h1(truncation), truncation)
    h = LieElement.generator("Y")
    yield h
    for m in range(1, truncation + 1):
        h = Fraction(1, m) * right_normed(d(h))
        if h.is_zero():
            return
        yield h


_RECURSIVE_LOCK = threading.Lock()
_RECURSIVE_CACHE: dict[int, LieSeries] = {}


def bch_recursive(truncation: int) -> LieSeries:
    """log(e^X e^Y) through the given degree, by the derivation recursion."""
    with _RECURSIVE_LOCK:
        cached = _RECURSIVE_CACHE.get(truncation)
    if cached is not None:
        return cached
    total = LieElement.zero()
    for h in bch_recursive_steps(truncation):
        total = total + h
    out = LieSeries.from_element(total, truncation)
    with _RECURSIVE_LOCK:
        _RECURSIVE_CACHE[truncation] = out
    return out


def bch_dynkin(truncation: int) -> LieSeries:
    """log(e^X e^Y) through the given degree, by the explicit tuple sum.

    Enumerates every tuple (p_1, q_1, ..., p_m, q_m) with p_i + q_i > 0
    and total degree d = sum(p_i + q_i) at most the truncation, and
    accumulates

        (-1)^(m-1) / m * [X^{p_1} Y^{q_1} ... X^{p_m} Y^{q_m}]
            / (d * p_1! q_1! ... p_m! q_m!)

    No tuple is filtered out in advance; words whose long commutator
    vanishes (trailing repeated letter) simply contribute zero.
    """
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    totals: dict[str, Fraction] = {}

    def extend(word: str, degree: int, m: int, denom: int) -> None:
        if m:
            sign = 1 if m % 2 else -1
            c = Fraction(sign, m * degree * denom)
            totals[word] = totals.get(word, Fraction(0)) + c
        for size in range(1, truncation - degree + 1):
            for p in range(size + 1):
                q = size - p
                extend(
                    word + "X" * p + "Y" * q,
                    degree + size,
                    m + 1,
                    denom * factorial(p) * factorial(q),
                )

    extend("", 0, 0, 1)

    terms: dict = {}
    for word, c in totals.items():
        if not c:
            continue
        for t, tc in long_commutator(word).term_dict().items():
            v = terms.get(t, Fraction(0)) + c * tc
            if v:
                terms[t] = v
            else:
                terms.pop(t, None)
    return LieSeries.from_element(LieElement(terms), truncation)
