"""Free Lie algebra on two generators X, Y with exact coefficients.

Elements are finite rational combinations of formal bracket trees; a tree
is the string ``"X"`` or ``"Y"`` or a pair of trees.  Trees are kept
unnormalized until coordinates are requested: ``to_lyndon_coords`` expands
into the associative word algebra and reads coordinates off the Lyndon
basis by triangular elimination (the associative expansion of a Lyndon
word's standard bracketing is that word plus lexicographically later
words, with coefficient 1).

Right-nested trees ("long commutators") play a special role throughout:
``long_commutator("XXY")`` is [X,[X,Y]], and ``right_normed`` rewrites any
element into a combination of such chains via [[A,B],C] = [A,[B,C]] -
[B,[A,C]].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

from .assoc import NCSeries, word_from_str, word_to_str
from .series import format_rational, parse_rational

__all__ = [
    "BracketTree",
    "LieElement",
    "LieSeries",
    "tree_degree",
    "tree_word",
    "chain_tree",
    "render_tree",
    "bracket",
    "long_commutator",
    "lyndon_words",
    "is_lyndon",
    "standard_factorization",
    "standard_bracketing",
    "to_assoc",
    "to_lyndon_coords",
    "from_lyndon_coords",
    "lyndon_coords_of_assoc",
    "right_normed",
    "Derivation",
    "apply_derivation",
    "ideal_membership",
    "span_rank",
    "in_span",
]

BracketTree = Union[str, tuple]

_GENERATORS = ("X", "Y")


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

_DEGREE_CACHE: dict[BracketTree, int] = {"X": 1, "Y": 1}
_VALID_TREES: set = {"X", "Y"}


def _check_tree(t: BracketTree) -> None:
    if t in _VALID_TREES:
        return
    if not (isinstance(t, tuple) and len(t) == 2):
        raise ValueError(f"not a bracket tree: {t!r}")
    _check_tree(t[0])
    _check_tree(t[1])
    _VALID_TREES.add(t)


def tree_degree(t: BracketTree) -> int:
    d = _DEGREE_CACHE.get(t)
    if d is None:
        d = tree_degree(t[0]) + tree_degree(t[1])
        _DEGREE_CACHE[t] = d
    return d


def chain_tree(word: str) -> BracketTree:
    """The right-nested tree [w1,[w2,[...,wd]]] of a word."""
    if not word:
        raise ValueError("empty word")
    t: BracketTree = word[-1]
    for ch in reversed(word[:-1]):
        t = (ch, t)
    return t


def tree_word(t: BracketTree) -> str | None:
    """The word of a right-nested chain tree, or None if not a chain."""
    parts = []
    while isinstance(t, tuple):
        a, t = t
        if not isinstance(a, str):
            return None
        parts.append(a)
    parts.append(t)
    return "".join(parts)


def _compress(s: str) -> str:
    out = []
    i = 0
    while i < len(s):
        j = i
        while j < len(s) and s[j] == s[i]:
            j += 1
        out.append(s[i] if j - i == 1 else f"{s[i]}^{j - i}")
        i = j
    return "".join(out)


def render_tree(t: BracketTree) -> str:
    """Long-commutator notation for chains, nested brackets otherwise."""
    if isinstance(t, str):
        return t
    w = tree_word(t)
    if w is not None:
        return f"[{_compress(w)}]"
    return f"[{render_tree(t[0])},{render_tree(t[1])}]"


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class LieElement:
    """Finite rational combination of bracket trees (may be inhomogeneous)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[BracketTree, Fraction] = {}
        if terms:
            for t, v in terms.items():
                _check_tree(t)
                c = _as_fraction(v)
                if c:
                    clean[t] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LieElement is immutable")

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    @classmethod
    def generator(cls, letter: str) -> "LieElement":
        if letter not in _GENERATORS:
            raise ValueError("generator must be X or Y")
        return cls({letter: 1})

    def terms(self) -> Iterator[tuple[BracketTree, Fraction]]:
        for t in sorted(self._terms, key=lambda t: (tree_degree(t), render_tree(t))):
            yield t, self._terms[t]

    def term_dict(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_components(self) -> dict[int, "LieElement"]:
        parts: dict[int, dict] = {}
        for t, c in self._terms.items():
            parts.setdefault(tree_degree(t), {})[t] = c
        return {d: LieElement(m) for d, m in sorted(parts.items())}

    def max_degree(self) -> int:
        return max((tree_degree(t) for t in self._terms), default=0)

    def __add__(self, other) -> "LieElement":
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return LieElement(out)

    def __neg__(self) -> "LieElement":
        return LieElement({t: -c for t, c in self._terms.items()})

    def __sub__(self, other) -> "LieElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "LieElement":
        c = _as_fraction(scalar)
        return LieElement({t: c * v for t, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        """Equality of tree representations (not of Lie elements)."""
        return isinstance(other, LieElement) and self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.terms():
            r = render_tree(t)
            if c == 1:
                parts.append(r)
            elif c == -1:
                parts.append(f"-{r}")
            else:
                parts.append(f"{format_rational(c)} {r}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"LieElement({len(self._terms)} terms)"


def bracket(a: LieElement, b: LieElement, truncation: int | None = None) -> LieElement:
    """Bilinear bracket; syntactically equal tree pairs drop out ([t,t]=0)."""
    out: dict[BracketTree, Fraction] = {}
    for t1, c1 in a._terms.items():
        d1 = tree_degree(t1)
        for t2, c2 in b._terms.items():
            if t1 == t2:
                continue
            if truncation is not None and d1 + tree_degree(t2) > truncation:
                continue
            key = (t1, t2)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return LieElement(out)


def long_commutator(word: str) -> LieElement:
    """Right-nested commutator [w1,[w2,[...,wd]]]; zero when it ends in a
    repeated letter."""
    for ch in word:
        if ch not in _GENERATORS:
            raise ValueError(f"bad letter {ch!r}")
    if not word:
        raise ValueError("empty word")
    if len(word) >= 2 and word[-1] == word[-2]:
        return LieElement.zero()
    return LieElement({chain_tree(word): 1})


# ---------------------------------------------------------------------------
# Graded series
# ---------------------------------------------------------------------------

class LieSeries:
    """Graded collection of homogeneous LieElements up to a truncation."""

    __slots__ = ("truncation", "_parts")

    def __init__(self, truncation: int, parts: dict | None = None):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        object.__setattr__(self, "truncation", int(truncation))
        clean: dict[int, LieElement] = {}
        if parts:
            for d, e in parts.items():
                if d > truncation or e.is_zero():
                    continue
                for t in e._terms:
                    if tree_degree(t) != d:
                        raise ValueError("component not homogeneous of its degree")
                clean[d] = e
        object.__setattr__(self, "_parts", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LieSeries is immutable")

    @classmethod
    def zero(cls, truncation: int) -> "LieSeries":
        return cls(truncation)

    @classmethod
    def from_element(cls, e: LieElement, truncation: int) -> "LieSeries":
        return cls(truncation, e.degree_components())

    def part(self, d: int) -> LieElement:
        if d > self.truncation:
            raise ValueError("degree beyond truncation")
        return self._parts.get(d, LieElement.zero())

    def parts(self) -> Iterator[tuple[int, LieElement]]:
        for d in sorted(self._parts):
            yield d, self._parts[d]

    def as_element(self) -> LieElement:
        out: dict = {}
        for e in self._parts.values():
            for t, c in e._terms.items():
                out[t] = c
        return LieElement(out)

    def is_zero(self) -> bool:
        return not self._parts

    def __add__(self, other: "LieSeries") -> "LieSeries":
        n = min(self.truncation, other.truncation)
        out: dict[int, LieElement] = {}
        for d in set(self._parts) | set(other._parts):
            if d <= n:
                out[d] = self.part(d) + other.part(d)
        return LieSeries(n, out)

    def __sub__(self, other: "LieSeries") -> "LieSeries":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "LieSeries":
        return LieSeries(
            self.truncation, {d: scalar * e for d, e in self._parts.items()}
        )

    __mul__ = __rmul__

    def truncate(self, n: int) -> "LieSeries":
        if n > self.truncation:
            raise ValueError("cannot raise truncation")
        return LieSeries(n, {d: e for d, e in self._parts.items() if d <= n})

    def __eq__(self, other) -> bool:
        """Mathematical equality: same truncation, same Lyndon coordinates."""
        return (
            isinstance(other, LieSeries)
            and self.truncation == other.truncation
            and to_lyndon_coords(self) == to_lyndon_coords(other)
        )

    __hash__ = None

    def to_json_dict(self) -> dict:
        coords = to_lyndon_coords(self)
        return {
            "truncation": self.truncation,
            "basis": "lyndon",
            "terms": [
                {"word": w, "c": format_rational(coords[w])}
                for w in sorted(coords, key=lambda w: (len(w), w))
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LieSeries":
        if data.get("basis") != "lyndon":
            raise ValueError("expected lyndon basis")
        e = from_lyndon_coords(
            {t["word"]: parse_rational(t["c"]) for t in data["terms"]}
        )
        return cls.from_element(e, int(data["truncation"]))

    def __str__(self) -> str:
        coords = to_lyndon_coords(self)
        if not coords:
            return "0"
        e = LieElement(
            {standard_bracketing(w): c for w, c in coords.items()}
        )
        return str(e)

    def __repr__(self) -> str:
        return f"LieSeries(truncation={self.truncation}, degrees={sorted(self._parts)})"


# ---------------------------------------------------------------------------
# Lyndon words and their standard bracketings
# ---------------------------------------------------------------------------

_LYNDON_CACHE: dict[int, list[str]] = {}


def lyndon_words(degree: int) -> list[str]:
    """All Lyndon words of the given length over X < Y, in lexicographic
    order (Duval's algorithm)."""
    if degree < 1:
        raise ValueError("degree must be positive")
    if degree not in _LYNDON_CACHE:
        found = []
        w = [-1]
        while w:
            w[-1] += 1
            if len(w) == degree:
                found.append("".join(_GENERATORS[i] for i in w))
            m = len(w)
            while len(w) < degree:
                w.append(w[len(w) - m])
            while w and w[-1] == 1:
                w.pop()
        _LYNDON_CACHE[degree] = found
    return list(_LYNDON_CACHE[degree])


def is_lyndon(word: str) -> bool:
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def standard_factorization(word: str) -> tuple[str, str]:
    """Split a Lyndon word (length >= 2) as u v with v the longest proper
    Lyndon suffix (equivalently the lexicographically least one)."""
    if len(word) < 2 or not is_lyndon(word):
        raise ValueError("needs a Lyndon word of length >= 2")
    v = min(word[i:] for i in range(1, len(word)))
    return word[: len(word) - len(v)], v


_SB_CACHE: dict[str, BracketTree] = {"X": "X", "Y": "Y"}


def standard_bracketing(word: str) -> BracketTree:
    t = _SB_CACHE.get(word)
    if t is None:
        u, v = standard_factorization(word)
        t = (standard_bracketing(u), standard_bracketing(v))
        _SB_CACHE[word] = t
    return t


# ---------------------------------------------------------------------------
# Associative expansion and Lyndon coordinates
# ---------------------------------------------------------------------------

_EXPANSION_CACHE: dict[BracketTree, dict] = {
    "X": {(1, 0): 1},
    "Y": {(1, 1): 1},
}


def _expand_tree(t: BracketTree) -> dict:
    """Integer word expansion of a tree ([A,B] -> AB - BA), cached."""
    e = _EXPANSION_CACHE.get(t)
    if e is None:
        ea, eb = _expand_tree(t[0]), _expand_tree(t[1])
        e = {}
        for (l1, b1), c1 in ea.items():
            for (l2, b2), c2 in eb.items():
                w = (l1 + l2, b1 | b2 << l1)
                e[w] = e.get(w, 0) + c1 * c2
                w = (l1 + l2, b2 | b1 << l2)
                e[w] = e.get(w, 0) - c1 * c2
        e = {w: c for w, c in e.items() if c}
        _EXPANSION_CACHE[t] = e
    return e


def to_assoc(a: LieElement | LieSeries, truncation: int) -> NCSeries:
    """Expand into the word algebra, every [A,B] becoming AB - BA."""
    if isinstance(a, LieSeries):
        a = a.as_element()
    out: dict = {}
    for t, c in a._terms.items():
        if tree_degree(t) > truncation:
            continue
        for w, ic in _expand_tree(t).items():
            v = out.get(w, Fraction(0)) + c * ic
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return NCSeries(truncation, out)


_SB_EXPANSION_CACHE: dict[int, list] = {}


def _sb_expansions(degree: int) -> list:
    """(word, packed key, expansion) for each Lyndon word of the degree."""
    if degree not in _SB_EXPANSION_CACHE:
        rows = []
        for w in lyndon_words(degree):
            rows.append((w, word_from_str(w), _expand_tree(standard_bracketing(w))))
        _SB_EXPANSION_CACHE[degree] = rows
    return _SB_EXPANSION_CACHE[degree]


def _lyndon_reduce(by_degree: dict[int, dict]) -> dict[str, Fraction]:
    """Triangular extraction of Lyndon coordinates from word dicts.

    Eats the per-degree dicts; raises if a nonzero residual remains,
    which happens exactly when the input was not a Lie element.
    """
    coords: dict[str, Fraction] = {}
    for d in sorted(by_degree):
        acc = by_degree[d]
        if not acc:
            continue
        if d == 1:
            for w, c in acc.items():
                if c:
                    coords[word_to_str(w)] = c
            continue
        for wstr, key, expansion in _sb_expansions(d):
            c = acc.get(key)
            if not c:
                continue
            coords[wstr] = c
            for w, ic in expansion.items():
                v = acc.get(w, Fraction(0)) - c * ic
                if v:
                    acc[w] = v
                else:
                    acc.pop(w, None)
        if any(acc.values()):
            raise ValueError("not a Lie element: nonzero associative residual")
    return coords


def to_lyndon_coords(a: LieElement | LieSeries) -> dict[str, Fraction]:
    """Coordinates in the Lyndon basis, keyed by word string."""
    if isinstance(a, LieSeries):
        a = a.as_element()
    by_degree: dict[int, dict] = {}
    for t, c in a._terms.items():
        acc = by_degree.setdefault(tree_degree(t), {})
        for w, ic in _expand_tree(t).items():
            v = acc.get(w, Fraction(0)) + c * ic
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
    return _lyndon_reduce(by_degree)


def lyndon_coords_of_assoc(nc: NCSeries) -> dict[str, Fraction]:
    """Lyndon coordinates of an NCSeries that lies in the free Lie algebra."""
    by_degree: dict[int, dict] = {}
    for w, c in nc.word_dict().items():
        if w[0] == 0:
            if c:
                raise ValueError("not a Lie element: constant term")
            continue
        by_degree.setdefault(w[0], {})[w] = c
    return _lyndon_reduce(by_degree)


def from_lyndon_coords(coords: dict[str, Fraction]) -> LieElement:
    return LieElement(
        {standard_bracketing(w): c for w, c in coords.items() if c}
    )


# ---------------------------------------------------------------------------
# Right-normed rewriting
# ---------------------------------------------------------------------------

_RN_CACHE: dict[BracketTree, dict] = {"X": {"X": 1}, "Y": {"Y": 1}}


def _rn_ad(t: BracketTree, vmap: dict) -> dict:
    """Apply ad(t) to a word-keyed map, staying in right-normed form.

    For a pair t = (p, q) this is ad(p)ad(q) - ad(q)ad(p), the Jacobi
    rewriting [[A,B],C] = [A,[B,C]] - [B,[A,C]] in operator clothing.
    """
    if isinstance(t, str):
        out = {}
        for w, c in vmap.items():
            if len(w) == 1 and w == t:
                continue
            out[t + w] = out.get(t + w, 0) + c
        return {w: c for w, c in out.items() if c}
    p, q = t
    first = _rn_ad(p, _rn_ad(q, vmap))
    second = _rn_ad(q, _rn_ad(p, vmap))
    for w, c in second.items():
        v = first.get(w, 0) - c
        if v:
            first[w] = v
        else:
            first.pop(w, None)
    return first


def _rn_tree(t: BracketTree) -> dict:
    e = _RN_CACHE.get(t)
    if e is None:
        e = _rn_ad(t[0], _rn_tree(t[1]))
        _RN_CACHE[t] = e
    return e


def right_normed(a: LieElement) -> LieElement:
    """The same element written with right-nested chain trees only."""
    words: dict[str, Fraction] = {}
    for t, c in a._terms.items():
        for w, ic in _rn_tree(t).items():
            v = words.get(w, Fraction(0)) + c * ic
            if v:
                words[w] = v
            else:
                words.pop(w, None)
    return LieElement({chain_tree(w): c for w, c in words.items()})


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

def _image_terms(img, truncation: int) -> list:
    if img is None:
        return []
    if isinstance(img, LieSeries):
        img = img.as_element()
    return [
        (t, c) for t, c in img._terms.items() if tree_degree(t) <= truncation
    ]


class Derivation:
    """The derivation with given images of X and Y, truncated at a degree.

    Extends by the Leibniz rule D[A,B] = [DA,B] + [A,DB]; substitution
    results are memoized per tree so a sequence of applications (as in the
    Hausdorff recursion) shares work.
    """

    def __init__(self, image_x, image_y, truncation: int):
        self.truncation = truncation
        self._images = {
            "X": _image_terms(image_x, truncation),
            "Y": _image_terms(image_y, truncation),
        }
        self._memo: dict[BracketTree, dict] = {}

    def _derive_tree(self, t: BracketTree) -> dict:
        out = self._memo.get(t)
        if out is not None:
            return out
        n = self.truncation
        if isinstance(t, str):
            out = {it: c for it, c in self._images[t]}
        else:
            a, b = t
            da, db = self._derive_tree(a), self._derive_tree(b)
            deg_a, deg_b = tree_degree(a), tree_degree(b)
            out = {}
            for ta, ca in da.items():
                if ta != b and tree_degree(ta) + deg_b <= n:
                    key = (ta, b)
                    out[key] = out.get(key, Fraction(0)) + ca
            for tb, cb in db.items():
                if a != tb and deg_a + tree_degree(tb) <= n:
                    key = (a, tb)
                    out[key] = out.get(key, Fraction(0)) + cb
            out = {k: v for k, v in out.items() if v}
        self._memo[t] = out
        return out

    def element(self, e: LieElement) -> LieElement:
        out: dict = {}
        for t, c in e._terms.items():
            for rt, rc in self._derive_tree(t).items():
                v = out.get(rt, Fraction(0)) + c * rc
                if v:
                    out[rt] = v
                else:
                    out.pop(rt, None)
        return LieElement(out)

    def series(self, s: LieSeries) -> LieSeries:
        n = min(self.truncation, s.truncation)
        acc = LieElement.zero()
        for _, e in s.parts():
            acc = acc + self.element(e)
        return LieSeries.from_element(acc, n)

    def __call__(self, target):
        if isinstance(target, LieSeries):
            return self.series(target)
        return self.element(target)


def apply_derivation(images, target, truncation: int):
    """Apply the derivation with ``images = (image_of_X, image_of_Y)``.

    Images may be LieElements, LieSeries, or None for zero; they are cut
    at the truncation before Leibniz expansion.
    """
    image_x, image_y = images
    return Derivation(image_x, image_y, truncation)(target)


# ---------------------------------------------------------------------------
# Sparse exact linear algebra and ideal membership
# ---------------------------------------------------------------------------

class _RowReducer:
    """Incremental Gauss elimination over sparse Fraction vectors."""

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            key = min(vec)
            row = self.pivots.get(key)
            if row is None:
                return vec
            c = vec[key]
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec: dict) -> bool:
        res = self.reduce(vec)
        if not res:
            return False
        key = min(res)
        lead = res[key]
        self.pivots[key] = {k: v / lead for k, v in res.items()}
        return True


def span_rank(vectors: Iterable[dict]) -> int:
    r = _RowReducer()
    return sum(1 for v in vectors if r.add(dict(v)))


def in_span(vectors: Iterable[dict], target: dict) -> bool:
    r = _RowReducer()
    for v in vectors:
        r.add(dict(v))
    return not r.reduce(dict(target))


_IDEALS = ("metabelian", "deeper")
_IDEAL_REDUCERS: dict[tuple[str, int], _RowReducer] = {}


def ideal_spanning_elements(ideal: str, degree: int) -> list[LieElement]:
    """Homogeneous spanning set of the ideal in the given degree.

    metabelian: [[L,L],[L,L]], spanned by [u, v] over Lyndon basis
    elements u, v of degree >= 2.  deeper: [[L,L],[[L,L],[L,L]]]-style
    brackets [u,[v,w]] with u, v, w of degree >= 2.
    """
    if ideal not in _IDEALS:
        raise ValueError(f"unknown ideal {ideal!r}")
    out = []
    if ideal == "metabelian":
        for d1 in range(2, degree - 1):
            d2 = degree - d1
            if d2 < d1:
                break
            for u in lyndon_words(d1):
                for v in lyndon_words(d2):
                    if d1 == d2 and u >= v:
                        continue
                    out.append(
                        bracket(
                            LieElement({standard_bracketing(u): 1}),
                            LieElement({standard_bracketing(v): 1}),
                        )
                    )
    else:
        for d1 in range(2, degree - 3):
            for d2 in range(2, degree - d1 - 1):
                d3 = degree - d1 - d2
                if d3 < d2:
                    break
                for u in lyndon_words(d1):
                    for v in lyndon_words(d2):
                        for w in lyndon_words(d3):
                            if d2 == d3 and v >= w:
                                continue
                            inner = bracket(
                                LieElement({standard_bracketing(v): 1}),
                                LieElement({standard_bracketing(w): 1}),
                            )
                            out.append(
                                bracket(LieElement({standard_bracketing(u): 1}), inner)
                            )
    return out


def _ideal_reducer(ideal: str, degree: int) -> _RowReducer:
    key = (ideal, degree)
    if key not in _IDEAL_REDUCERS:
        r = _RowReducer()
        for e in ideal_spanning_elements(ideal, degree):
            r.add(to_lyndon_coords(e))
        _IDEAL_REDUCERS[key] = r
    return _IDEAL_REDUCERS[key]


def ideal_membership(a: LieElement | LieSeries, ideal: str) -> bool:
    """Exact membership test against the graded spanning set of the ideal."""
    if ideal not in _IDEALS:
        raise ValueError(f"unknown ideal {ideal!r}")
    coords = to_lyndon_coords(a)
    by_degree: dict[int, dict] = {}
    for w, c in coords.items():
        by_degree.setdefault(len(w), {})[w] = c
    for d, vec in by_degree.items():
        if _ideal_reducer(ideal, d).reduce(vec):
            return False
    return True
