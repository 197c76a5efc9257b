"""The free Lie algebra on X, Y modulo brackets of brackets.

In the quotient by [[L,L],[L,L]] every element is a combination of X, Y
and the chains B(k,l) = [X^k Y^l X Y], and a commutative power series in
(ad X, ad Y) acting on [XY] is the same data as a table of B(k,l)
coefficients.  That correspondence makes log(e^X e^Y) computable in
closed form:

    log(e^X e^Y) = X + Y + h(ad X, ad Y) [XY],
    h(x,y) = (1/y) (1 - ((e^x - 1)/x) ((x+y)/(e^{x+y} - 1)))

This module provides the projection onto the quotient, the closed
formula, the two-variable exponential-word coefficient series c(u,v),
the solution of the quotient Zassenhaus equation, and a complete solver
for the commutator equation

    log(e^X e^Y) - X - Y = [X, F(X,Y)] + [Y, F(-Y,-X)].
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .series import BiSeries, format_rational, parse_rational
from .freelie import (
    LieElement,
    LieSeries,
    chain_tree,
    render_tree,
    right_normed,
    tree_word,
)

__all__ = [
    "MetabelianElement",
    "project",
    "h_series",
    "hausdorff_closed",
    "goldberg_c",
    "zassenhaus_closed",
    "kv_solve",
    "kv_verify",
]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational scalar, got {type(v).__name__}")


class MetabelianElement:
    """An element a X + b Y + sum of c_{kl} B(k,l), cut at a total degree.

    B(k,l) stands for the chain [X^k Y^l X Y] of degree k + l + 2; the
    table maps (k, l) to the rational coefficient c_{kl}.  Zero
    coefficients are never stored and indices beyond the truncation are
    dropped on construction.
    """

    __slots__ = ("truncation", "a", "b", "_table")

    def __init__(self, truncation: int, a=0, b=0, table: dict | None = None):
        if truncation < 1:
            raise ValueError("truncation must be at least 1")
        clean: dict[tuple[int, int], Fraction] = {}
        for (k, l), c in (table or {}).items():
            if k < 0 or l < 0:
                raise ValueError("negative basis index")
            c = _as_fraction(c)
            if c and k + l + 2 <= truncation:
                clean[(k, l)] = c
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "_table", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MetabelianElement is immutable")

    # -- construction ---------------------------------------------------------

    @classmethod
    def zero(cls, truncation: int) -> "MetabelianElement":
        return cls(truncation)

    @classmethod
    def from_table_series(cls, s: BiSeries, a=0, b=0) -> "MetabelianElement":
        """Read a BiSeries as a B-table: x^k y^l becomes B(k,l)."""
        return cls(s.truncation + 2, a, b, {(i, j): c for i, j, c in s.terms()})

    # -- access ---------------------------------------------------------------

    def coefficient(self, k: int, l: int) -> Fraction:
        if k + l + 2 > self.truncation:
            raise ValueError("term beyond truncation")
        return self._table.get((k, l), Fraction(0))

    def terms(self):
        """Table entries as ((k, l), coefficient), sorted by (k+l, k)."""
        return sorted(self._table.items(), key=lambda kv: (sum(kv[0]), kv[0][0]))

    def table_series(self) -> BiSeries:
        """The table as a commutative series, B(k,l) read as x^k y^l."""
        if self.truncation < 2:
            raise ValueError("no table below degree 2")
        return BiSeries(self.truncation - 2, dict(self._table))

    def degree_part(self, d: int) -> "MetabelianElement":
        if d == 1:
            return MetabelianElement(self.truncation, self.a, self.b)
        table = {kl: c for kl, c in self._table.items() if sum(kl) + 2 == d}
        return MetabelianElement(self.truncation, 0, 0, table)

    def is_zero(self) -> bool:
        return not self._table and not self.a and not self.b

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: "MetabelianElement") -> "MetabelianElement":
        if not isinstance(other, MetabelianElement):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        table = dict(self._table)
        for kl, c in other._table.items():
            table[kl] = table.get(kl, Fraction(0)) + c
        return MetabelianElement(n, self.a + other.a, self.b + other.b, table)

    def __neg__(self) -> "MetabelianElement":
        return MetabelianElement(
            self.truncation,
            -self.a,
            -self.b,
            {kl: -c for kl, c in self._table.items()},
        )

    def __sub__(self, other: "MetabelianElement") -> "MetabelianElement":
        if not isinstance(other, MetabelianElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar) -> "MetabelianElement":
        s = _as_fraction(scalar)
        return MetabelianElement(
            self.truncation,
            s * self.a,
            s * self.b,
            {kl: s * c for kl, c in self._table.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetabelianElement):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.a == other.a
            and self.b == other.b
            and self._table == other._table
        )

    # -- the quotient bracket -------------------------------------------------

    def ad_x(self) -> "MetabelianElement":
        """[X, self]: b goes to B(0,0), B(k,l) to B(k+1,l)."""
        table = {(k + 1, l): c for (k, l), c in self._table.items()}
        if self.b:
            table[(0, 0)] = table.get((0, 0), Fraction(0)) + self.b
        return MetabelianElement(self.truncation, 0, 0, table)

    def ad_y(self) -> "MetabelianElement":
        """[Y, self]: a goes to -B(0,0), B(k,l) to B(k,l+1).

        Prepending Y to the chain sorts into the prefix modulo brackets
        of brackets, which is exactly the quotient relation.
        """
        table = {(k, l + 1): c for (k, l), c in self._table.items()}
        if self.a:
            table[(0, 0)] = table.get((0, 0), Fraction(0)) - self.a
        return MetabelianElement(self.truncation, 0, 0, table)

    def subst_negswap(self) -> "MetabelianElement":
        """The element at (-Y, -X).

        B(k,l) maps to (-1)^{k+l+1} B(l,k): the k+l+2 letter signs give
        (-1)^{k+l}, the flipped tail [YX] = -[XY] one more.
        """
        table = {
            (l, k): ((-1) ** (k + l + 1)) * c for (k, l), c in self._table.items()
        }
        return MetabelianElement(self.truncation, -self.b, -self.a, table)

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "truncation": self.truncation,
            "basis": "metabelian",
            "X": format_rational(self.a),
            "Y": format_rational(self.b),
            "terms": [
                {"k": k, "l": l, "c": format_rational(c)}
                for (k, l), c in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MetabelianElement":
        table = {
            (int(t["k"]), int(t["l"])): parse_rational(t["c"])
            for t in data["terms"]
        }
        return cls(
            int(data["truncation"]),
            parse_rational(data.get("X", 0)),
            parse_rational(data.get("Y", 0)),
            table,
        )

    def to_csv(self) -> str:
        """Table rows "k,l,c" with a header, sorted by (k+l, k)."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "l", "c"])
        for (k, l), c in self.terms():
            writer.writerow([k, l, format_rational(c)])
        return buf.getvalue()

    def __str__(self) -> str:
        parts = []
        for name, c in (("X", self.a), ("Y", self.b)):
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            elif c:
                parts.append(f"{format_rational(c)} {name}")
        for (k, l), c in self.terms():
            name = render_tree(chain_tree("X" * k + "Y" * l + "XY"))
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{format_rational(c)} {name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return (
            f"MetabelianElement(truncation={self.truncation}, "
            f"{len(self._table)} table terms)"
        )


# ---------------------------------------------------------------------------
# Projection onto the quotient
# ---------------------------------------------------------------------------

def project(e: LieElement | LieSeries, truncation: int) -> MetabelianElement:
    """Normal form of a free Lie element modulo [[L,L],[L,L]].

    Every bracket tree is first rewritten as a combination of
    right-nested chains.  A chain whose final two letters agree is zero;
    a tail YX flips sign to the tail XY; the remaining prefix letters
    commute modulo brackets of brackets and are sorted into X^k Y^l,
    landing in B(k,l).
    """
    if isinstance(e, LieSeries):
        e = e.as_element()
    a = Fraction(0)
    b = Fraction(0)
    table: dict[tuple[int, int], Fraction] = {}
    for t, c in right_normed(e).term_dict().items():
        w = tree_word(t)
        if len(w) > truncation:
            continue
        if len(w) == 1:
            if w == "X":
                a += c
            else:
                b += c
            continue
        tail = w[-2:]
        if tail == "XX" or tail == "YY":
            continue
        if tail == "YX":
            c = -c
        prefix = w[:-2]
        kl = (prefix.count("X"), prefix.count("Y"))
        v = table.get(kl, Fraction(0)) + c
        if v:
            table[kl] = v
        else:
            table.pop(kl, None)
    return MetabelianElement(truncation, a, b, table)


# ---------------------------------------------------------------------------
# The closed formula for log(e^X e^Y)
# ---------------------------------------------------------------------------

def h_series(truncation: int) -> BiSeries:
    """The coefficient series h(x,y) of the closed formula.

    h(x,y) = (1/y) (1 - ((e^x - 1)/x) ((x+y)/(e^{x+y} - 1))); the
    numerator has every monomial divisible by y, so the division is
    exact and the result is a genuine power series.
    """
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    m = truncation + 1
    num = BiSeries.one(m) - BiSeries.named("expm1_over_t", "x", m) * BiSeries.named(
        "t_over_expm1", "x+y", m
    )
    return num.divide_exact(BiSeries.monomial(0, 1, m))


def hausdorff_closed(truncation: int) -> MetabelianElement:
    """log(e^X e^Y) in the quotient: X + Y + sum of h_{kl} B(k,l)."""
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    if truncation < 2:
        return MetabelianElement(truncation, 1, 1)
    h = h_series(truncation - 2)
    return MetabelianElement.from_table_series(h, 1, 1)


def goldberg_c(truncation: int) -> BiSeries:
    """The series c(x,y) = sum of c_{rs} x^r y^s, r,s >= 1, where c_{rs}
    is the coefficient of the word X^r Y^s in log(e^X e^Y).

    Computed as (x e^x (e^y - 1) - y e^y (e^x - 1)) / (x - y) divided by
    the unit (e^x - e^y)/(x - y); both divisions are exact.
    """
    if truncation < 2:
        raise ValueError("truncation must be at least 2")
    m = truncation + 2
    ex = BiSeries.named("exp", "x", m)
    ey = BiSeries.named("exp", "y", m)
    e1x = BiSeries.named("expm1", "x", m)
    e1y = BiSeries.named("expm1", "y", m)
    num = (ex * e1y).shift(1, 0).truncate(m) - (ey * e1x).shift(0, 1).truncate(m)
    x_minus_y = BiSeries(m, {(1, 0): Fraction(1), (0, 1): Fraction(-1)})
    quotient = num.divide_exact(x_minus_y)
    unit = (ex - ey).divide_exact(x_minus_y)
    return quotient.divide_exact(unit).truncate(truncation)


# ---------------------------------------------------------------------------
# The quotient Zassenhaus equation
# ---------------------------------------------------------------------------

def _zassenhaus_series(truncation: int) -> BiSeries:
    """Operator series of the Zassenhaus solution, as a B-table series.

    (1/(x+y)) ((e^{-y} - 1)/y) (1 + ((e^{-x} - 1)/x) (y/(e^y - 1)));
    the outer division by x + y is exact.
    """
    m = truncation + 1
    first = -BiSeries.named("expm1_over_t", "-y", m)
    inner = BiSeries.one(m) - BiSeries.named(
        "expm1_over_t", "-x", m
    ) * BiSeries.named("t_over_expm1", "y", m)
    x_plus_y = BiSeries(m, {(1, 0): Fraction(1), (0, 1): Fraction(1)})
    return (first * inner).divide_exact(x_plus_y)


def zassenhaus_closed(truncation: int) -> MetabelianElement:
    """Sum of the Zassenhaus correction terms C_2 + C_3 + ... in the
    quotient: e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ... and the C_n commute
    there, so the product of exponentials collapses to exp of the sum.

    Individual degree-n pieces are available via ``degree_part(n)``.
    """
    if truncation < 2:
        raise ValueError("truncation must be at least 2")
    return MetabelianElement.from_table_series(_zassenhaus_series(truncation - 2))


# ---------------------------------------------------------------------------
# The commutator equation
# ---------------------------------------------------------------------------

def kv_solve(truncation: int, a=0, g: BiSeries | None = None) -> MetabelianElement:
    """Solve log(e^X e^Y) - X - Y = [X, F(X,Y)] + [Y, F(-Y,-X)].

    Returns F = a X + (1/4) Y + f(ad X, ad Y) [XY] with

        f = Odd h / (x - y) + (Even h - 1/2) / (2x) + y g,

    where Odd/Even split h by total-degree parity.  Both divisions are
    exact: Odd h vanishes on the diagonal and Even h(0,y) = 1/2.  The
    scalar a and the series g parametrize the full solution set; g must
    satisfy g(-y,-x) = -g(x,y) and is read as a polynomial if its
    truncation falls short.
    """
    n = truncation
    if n < 2:
        raise ValueError("truncation must be at least 2")
    if isinstance(g, int) and g == 0:
        g = None
    h = h_series(n - 1)
    even_h, odd_h = h.parity_split()
    x_minus_y = BiSeries(n - 1, {(1, 0): Fraction(1), (0, 1): Fraction(-1)})
    two_x = BiSeries(n - 1, {(1, 0): Fraction(2)})
    f = odd_h.divide_exact(x_minus_y) + (even_h - Fraction(1, 2)).divide_exact(two_x)
    if g is not None:
        if g.subst_negswap() != -g:
            raise ValueError("g violates antisymmetry")
        if n >= 3:
            f = f + g.padded(n - 3).shift(0, 1)
    return MetabelianElement.from_table_series(f, _as_fraction(a), Fraction(1, 4))


def kv_verify(F: MetabelianElement, truncation: int) -> bool:
    """Check [X, F] + [Y, F(-Y,-X)] against log(e^X e^Y) - X - Y.

    F is reread at the requested truncation (entries beyond it are
    dropped, missing ones count as zero).
    """
    n = truncation
    f = MetabelianElement(n, F.a, F.b, dict(F._table))
    lhs = f.ad_x() + f.subst_negswap().ad_y()
    h = hausdorff_closed(n)
    rhs = MetabelianElement(n, 0, 0, dict(h._table))
    return lhs == rhs
