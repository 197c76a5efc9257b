"""Exact truncated power series in two commuting variables x, y.

All coefficients are ``fractions.Fraction``; nothing is ever floated.  A
``BiSeries`` knows its coefficients for every total degree <= ``truncation``
and nothing beyond, so binary operations truncate at the smaller bound.
Division is *exact* division: if the divisor does not divide the dividend
term-for-term the operation raises ``InexactDivision`` instead of silently
producing a Laurent-style object (negative powers never exist here).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

__all__ = [
    "Rational",
    "InexactDivision",
    "bernoulli",
    "BiSeries",
    "format_rational",
    "parse_rational",
]

Rational = Fraction


class InexactDivision(ArithmeticError):
    """Raised when an exact series division leaves a remainder."""


def format_rational(c: Fraction) -> str:
    """Render a rational as ``p/q`` (q > 0, gcd 1; ``/1`` omitted)."""
    return str(Fraction(c))


def parse_rational(s: str | int) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n in the B_1 = -1/2 convention.

    Computed from sum_{k=1}^{m} C(m+1, k) B_k = -1 (m >= 1) and cached.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n >= len(_BERNOULLI):
        with _BERNOULLI_LOCK:
            while len(_BERNOULLI) <= n:
                m = len(_BERNOULLI)
                acc = Fraction(-1)
                for k in range(1, m):
                    acc -= comb(m + 1, k) * _BERNOULLI[k]
                _BERNOULLI.append(acc / (m + 1))
    return _BERNOULLI[n]


# ---------------------------------------------------------------------------
# Named univariate coefficient streams, composed at a linear form
# ---------------------------------------------------------------------------

def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _named_coefficient(kind: str, n: int) -> Fraction:
    if kind == "exp":
        return Fraction(1, _factorial(n))
    if kind == "expm1":
        return Fraction(0) if n == 0 else Fraction(1, _factorial(n))
    if kind == "expm1_over_t":
        return Fraction(1, _factorial(n + 1))
    if kind == "t_over_expm1":
        return bernoulli(n) / _factorial(n)
    if kind == "log1p":
        return Fraction(0) if n == 0 else Fraction((-1) ** (n - 1), n)
    raise ValueError(f"unknown named series {kind!r}")


_LINEAR_FORMS = {
    "x": (1, 0),
    "y": (0, 1),
    "-x": (-1, 0),
    "-y": (0, -1),
    "x+y": (1, 1),
    "-x-y": (-1, -1),
}


def _parse_linear_form(arg: str | tuple[int, int]) -> tuple[int, int]:
    if isinstance(arg, str):
        try:
            return _LINEAR_FORMS[arg.replace(" ", "")]
        except KeyError:
            raise ValueError(f"unknown linear form {arg!r}") from None
    a, b = arg
    return int(a), int(b)


# ---------------------------------------------------------------------------
# BiSeries
# ---------------------------------------------------------------------------

def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


class BiSeries:
    """Commutative power series in x, y truncated at a total degree."""

    __slots__ = ("truncation", "_coeffs")

    def __init__(self, truncation: int, coeffs: dict | None = None):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        object.__setattr__(self, "truncation", int(truncation))
        clean: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("exponents must be nonnegative")
                if i + j > truncation:
                    continue
                c = _as_fraction(v)
                if c:
                    clean[(i, j)] = c
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, truncation: int) -> "BiSeries":
        return cls(truncation)

    @classmethod
    def constant(cls, c, truncation: int) -> "BiSeries":
        return cls(truncation, {(0, 0): _as_fraction(c)})

    @classmethod
    def one(cls, truncation: int) -> "BiSeries":
        return cls.constant(1, truncation)

    @classmethod
    def monomial(cls, i: int, j: int, truncation: int, c=1) -> "BiSeries":
        return cls(truncation, {(i, j): _as_fraction(c)})

    @classmethod
    def named(cls, kind: str, arg, truncation: int) -> "BiSeries":
        """A named univariate series evaluated at a linear form in x, y.

        ``kind`` is one of ``exp``, ``expm1``, ``expm1_over_t``
        (coefficients 1/(n+1)!), ``t_over_expm1`` (coefficients B_n/n!)
        or ``log1p``; ``arg`` names the linear form, e.g. ``"x+y"`` or a
        coefficient pair ``(1, -1)``.
        """
        alpha, beta = _parse_linear_form(arg)
        coeffs: dict[tuple[int, int], Fraction] = {}
        for n in range(truncation + 1):
            a_n = _named_coefficient(kind, n)
            if not a_n:
                continue
            for i in range(n + 1):
                c = a_n * comb(n, i) * alpha**i * beta ** (n - i)
                if c:
                    key = (i, n - i)
                    coeffs[key] = coeffs.get(key, Fraction(0)) + c
        return cls(truncation, coeffs)

    # -- inspection --------------------------------------------------------

    def coefficient(self, i: int, j: int) -> Fraction:
        if i + j > self.truncation:
            raise ValueError("coefficient beyond truncation")
        return self._coeffs.get((i, j), Fraction(0))

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """Nonzero terms sorted by (total degree, x-exponent)."""
        for (i, j) in sorted(self._coeffs, key=lambda k: (k[0] + k[1], k[0])):
            yield i, j, self._coeffs[(i, j)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> int | None:
        if not self._coeffs:
            return None
        return min(i + j for i, j in self._coeffs)

    def homogeneous_part(self, d: int) -> dict[tuple[int, int], Fraction]:
        return {k: v for k, v in self._coeffs.items() if k[0] + k[1] == d}

    # -- ring operations ---------------------------------------------------

    def _binary_truncation(self, other: "BiSeries") -> int:
        return min(self.truncation, other.truncation)

    def __add__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            other = BiSeries.constant(_as_fraction(other), self.truncation)
        n = self._binary_truncation(other)
        out = {k: v for k, v in self._coeffs.items() if k[0] + k[1] <= n}
        for k, v in other._coeffs.items():
            if k[0] + k[1] <= n:
                out[k] = out.get(k, Fraction(0)) + v
        return BiSeries(n, out)

    __radd__ = __add__

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.truncation, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            other = BiSeries.constant(_as_fraction(other), self.truncation)
        return self + (-other)

    def __rsub__(self, other) -> "BiSeries":
        return (-self) + other

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            c = _as_fraction(other)
            return BiSeries(self.truncation, {k: c * v for k, v in self._coeffs.items()})
        n = self._binary_truncation(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            d1 = i1 + j1
            if d1 > n:
                continue
            for (i2, j2), c2 in other._coeffs.items():
                if d1 + i2 + j2 > n:
                    continue
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiSeries(n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.truncation == other.truncation
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def agrees_with(self, other: "BiSeries", through: int | None = None) -> bool:
        """Coefficientwise equality up to min truncation (or ``through``)."""
        n = self._binary_truncation(other)
        if through is not None:
            n = min(n, through)
        for k in set(self._coeffs) | set(other._coeffs):
            if k[0] + k[1] <= n and self._coeffs.get(k, 0) != other._coeffs.get(k, 0):
                return False
        return True

    # -- truncation management ---------------------------------------------

    def truncate(self, n: int) -> "BiSeries":
        if n > self.truncation:
            raise ValueError("cannot raise truncation; use padded()")
        return BiSeries(n, self._coeffs)

    def padded(self, n: int) -> "BiSeries":
        """Reinterpret as a polynomial known to all degrees <= ``n``."""
        if n < self.truncation:
            return self.truncate(n)
        return BiSeries(n, self._coeffs)

    def shift(self, di: int, dj: int) -> "BiSeries":
        """Multiply by the monomial x^di y^dj; truncation grows by di+dj."""
        if di < 0 or dj < 0:
            raise ValueError("shift exponents must be nonnegative")
        return BiSeries(
            self.truncation + di + dj,
            {(i + di, j + dj): c for (i, j), c in self._coeffs.items()},
        )

    # -- substitutions and splits -------------------------------------------

    def subst_negswap(self) -> "BiSeries":
        """The series a(-y, -x): swap variables and negate both."""
        return BiSeries(
            self.truncation,
            {(j, i): ((-1) ** (i + j)) * c for (i, j), c in self._coeffs.items()},
        )

    def subst_signed(self, sign_x: int, sign_y: int) -> "BiSeries":
        """Substitute x -> sign_x * x, y -> sign_y * y (signs +-1)."""
        if sign_x not in (1, -1) or sign_y not in (1, -1):
            raise ValueError("signs must be +-1")
        return BiSeries(
            self.truncation,
            {(i, j): (sign_x**i) * (sign_y**j) * c for (i, j), c in self._coeffs.items()},
        )

    def parity_split(self) -> tuple["BiSeries", "BiSeries"]:
        """(even, odd) parts by parity of the total degree."""
        even = {k: v for k, v in self._coeffs.items() if (k[0] + k[1]) % 2 == 0}
        odd = {k: v for k, v in self._coeffs.items() if (k[0] + k[1]) % 2 == 1}
        return BiSeries(self.truncation, even), BiSeries(self.truncation, odd)

    # -- inversion and exact division ----------------------------------------

    def _by_degree(self) -> list[dict[tuple[int, int], Fraction]]:
        out: list[dict] = [dict() for _ in range(self.truncation + 1)]
        for (i, j), c in self._coeffs.items():
            out[i + j][(i, j)] = c
        return out

    def inverse(self) -> "BiSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self._coeffs.get((0, 0), Fraction(0))
        if not a0:
            raise ValueError("non-unit series")
        n = self.truncation
        a = self._by_degree()
        b: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(n + 1)]
        b[0][(0, 0)] = 1 / a0
        for m in range(1, n + 1):
            acc: dict[tuple[int, int], Fraction] = {}
            for k in range(1, m + 1):
                for (i1, j1), c1 in a[k].items():
                    for (i2, j2), c2 in b[m - k].items():
                        key = (i1 + i2, j1 + j2)
                        acc[key] = acc.get(key, Fraction(0)) + c1 * c2
            b[m] = {k2: -v / a0 for k2, v in acc.items() if v}
        coeffs = {k: v for part in b for k, v in part.items()}
        return BiSeries(n, coeffs)

    def divide_exact(self, divisor: "BiSeries") -> "BiSeries":
        """Exact quotient q with q * divisor == self (up to truncation).

        The quotient truncation is ``self.truncation`` minus the lowest
        total degree of the divisor.  Raises InexactDivision when any
        homogeneous step leaves a remainder, e.g. ``(1 + x) / y``.
        """
        v = divisor.min_degree()
        if v is None:
            raise ZeroDivisionError("zero divisor series")
        if self.truncation < v:
            raise ValueError("dividend truncation below divisor valuation")
        nq = self.truncation - v
        a = self._by_degree()
        d = divisor._by_degree()
        for m in range(min(v, len(a))):
            if a[m]:
                raise InexactDivision("inexact division")
        d_lead = d[v]
        q: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(nq + 1)]
        for m in range(nq + 1):
            rem = dict(a[m + v])
            for i in range(1, m + 1):
                if v + i > divisor.truncation or not d[v + i]:
                    continue
                for (i1, j1), c1 in q[m - i].items():
                    for (i2, j2), c2 in d[v + i].items():
                        key = (i1 + i2, j1 + j2)
                        rem[key] = rem.get(key, Fraction(0)) - c1 * c2
            q[m] = _divide_homogeneous(rem, m + v, d_lead, v)
        coeffs = {k: val for part in q for k, val in part.items()}
        return BiSeries(nq, coeffs)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [
                {"i": i, "j": j, "c": format_rational(c)} for i, j, c in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BiSeries":
        coeffs = {
            (int(t["i"]), int(t["j"])): parse_rational(t["c"]) for t in data["terms"]
        }
        return cls(int(data["truncation"]), coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, j, c in self.terms():
            factors = []
            for name, e in (("x", i), ("y", j)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = " ".join(factors)
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rational(c)} {mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"BiSeries(truncation={self.truncation}, {len(self._coeffs)} terms)"


def _divide_homogeneous(
    num: dict[tuple[int, int], Fraction],
    n: int,
    den: dict[tuple[int, int], Fraction],
    v: int,
) -> dict[tuple[int, int], Fraction]:
    """Exact division of a homogeneous degree-n part by a degree-v part.

    Both sides are univariate in t = x/y after pulling out powers of y, so
    this is ordinary polynomial division with a zero-remainder requirement.
    """
    num = {k: c for k, c in num.items() if c}
    if not num:
        return {}
    a = [Fraction(0)] * (n + 1)
    for (i, _), c in num.items():
        a[i] = c
    b = [Fraction(0)] * (v + 1)
    for (i, _), c in den.items():
        b[i] = c
    db = max(i for i, c in enumerate(b) if c)
    qdeg_max = n - v
    q = [Fraction(0)] * (n - db + 1)
    r = a[:]
    for k in range(n - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        if k > qdeg_max:
            raise InexactDivision("inexact division")
        c /= b[db]
        q[k] = c
        for i, bc in enumerate(b):
            if bc:
                r[k + i] -= c * bc
    if any(r):
        raise InexactDivision("inexact division")
    return {(i, n - v - i): c for i, c in enumerate(q) if c and i <= qdeg_max}
