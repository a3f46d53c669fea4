"""The Temperley-Lieb algebra of a simply laced Coxeter graph, by rewriting.

Over Z[d], the algebra is generated by one monomial generator per graph
node subject to

    (d1)  b_i b_i     = d b_i
    (d2)  b_i b_j     = b_j b_i          when m(i,j) = 2
    (d3)  b_i b_j b_i = b_i              when m(i,j) = 3

and has a basis of monomials b_w indexed by the fully commutative
elements w.  A product of generators is brought into the basis by
searching the commutation class of the word for a factor s s (apply
d1: drop one letter, multiply by d) or s t s with m(s,t) = 3 (apply
d3: drop t s), until neither occurs; the survivor is FC and is stored
in canonical form.  Each step shortens the word, so reduction halts
after at most len(w) steps, and the confluence suite checks that the
answer does not depend on the order rules were applied in.

This module is the ground truth that the diagram calculus is measured
against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coxeter import CoxeterGraph
from .fullcomm import Word, canonical_form, commutation_class, format_word, parse_word
from .ring import DELTA, ONE, DeltaPoly


def _find_d1(cls: list[Word]) -> tuple[Word, int] | None:
    for v in cls:
        for i in range(len(v) - 1):
            if v[i] == v[i + 1]:
                return v, i
    return None


def _find_d3(cls: list[Word], g: CoxeterGraph) -> tuple[Word, int] | None:
    for v in cls:
        for i in range(len(v) - 2):
            if v[i] == v[i + 2] and g.adjacent(v[i], v[i + 1]):
                return v, i
    return None


def reduce_word(
    w: Word, g: CoxeterGraph, cap: int | None = None
) -> tuple[DeltaPoly, Word]:
    """Rewrite b_w into the FC basis: returns (d-power, canonical FC word).

    Deterministic strategy: at each step scan class members in lex
    order for the leftmost d1 factor, then (only if no d1 factor exists
    anywhere in the class) for the leftmost d3 factor.
    """
    coeff = ONE
    cur = tuple(w)
    for _ in range(len(w) + 1):
        cls = sorted(commutation_class(cur, g, cap))
        hit = _find_d1(cls)
        if hit is not None:
            v, i = hit
            coeff = coeff * DELTA
            cur = v[: i + 1] + v[i + 2 :]
            continue
        hit = _find_d3(cls, g)
        if hit is not None:
            v, i = hit
            cur = v[: i + 1] + v[i + 3 :]
            continue
        return coeff, cls[0]
    raise RuntimeError("reduction exceeded its length bound; rules must shorten")


def mono_mul(
    v: Word, w: Word, g: CoxeterGraph, cap: int | None = None
) -> tuple[DeltaPoly, Word]:
    """The product b_v b_w of two basis monomials, as (coefficient, word)."""
    return reduce_word(tuple(v) + tuple(w), g, cap)


def _term_key(w: Word):
    return (len(w), w)


@dataclass(frozen=True)
class TLElement:
    """A Z[d]-linear combination of FC basis monomials.

    terms is sorted by (length, lex) of the word and stores no zero
    coefficients, so equal elements compare and hash equal.  Keys are
    expected to be canonical FC words; the constructors that take
    arbitrary words reduce them first.
    """

    terms: tuple[tuple[Word, DeltaPoly], ...]

    def __post_init__(self):
        keys = [w for w, _ in self.terms]
        if keys != sorted(keys, key=_term_key):
            raise ValueError("terms out of order")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate basis words")
        if any(p.is_zero for _, p in self.terms):
            raise ValueError("zero coefficient stored")

    @classmethod
    def from_dict(cls, d: dict[Word, DeltaPoly]) -> "TLElement":
        items = [(w, p) for w, p in d.items() if not p.is_zero]
        items.sort(key=lambda t: _term_key(t[0]))
        return cls(tuple(items))

    @classmethod
    def zero(cls) -> "TLElement":
        return cls(())

    @classmethod
    def one(cls) -> "TLElement":
        return cls((((), ONE),))

    @classmethod
    def monomial(cls, w: Word, coeff: DeltaPoly = ONE) -> "TLElement":
        if coeff.is_zero:
            return cls.zero()
        return cls(((tuple(w), coeff),))

    def as_dict(self) -> dict[Word, DeltaPoly]:
        return dict(self.terms)

    def coeff(self, w: Word) -> DeltaPoly:
        for v, p in self.terms:
            if v == tuple(w):
                return p
        return DeltaPoly.zero()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TLElement") -> "TLElement":
        acc = dict(self.terms)
        for w, p in other.terms:
            acc[w] = acc.get(w, DeltaPoly.zero()) + p
        return TLElement.from_dict(acc)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + other.scale(DeltaPoly.const(-1))

    def scale(self, c: DeltaPoly | int) -> "TLElement":
        if isinstance(c, int):
            c = DeltaPoly.const(c)
        return TLElement.from_dict({w: c * p for w, p in self.terms})


def generator(i: int) -> TLElement:
    """The generator b_i as an element."""
    return TLElement.monomial((i,))


def element_from_word(w: Word, g: CoxeterGraph, cap: int | None = None) -> TLElement:
    """b_w for an arbitrary word: reduced into the basis."""
    p, u = reduce_word(w, g, cap)
    return TLElement.monomial(u, p)


def mul(
    a: TLElement, b: TLElement, g: CoxeterGraph, cap: int | None = None
) -> TLElement:
    """Bilinear extension of mono_mul."""
    acc: dict[Word, DeltaPoly] = {}
    for v, cv in a.terms:
        for w, cw in b.terms:
            p, u = mono_mul(v, w, g, cap)
            acc[u] = acc.get(u, DeltaPoly.zero()) + cv * cw * p
    return TLElement.from_dict(acc)


# -- text form -------------------------------------------------------
#
#     d * [0,1] + 1 * [0,2]        (1 + d) * []        0
#
# Coefficients with more than one polynomial term are parenthesized so
# the top-level ` + ` split stays unambiguous.


def format_element(el: TLElement) -> str:
    if el.is_zero:
        return "0"
    parts = []
    for w, p in el.terms:
        ptext = str(p)
        if " + " in ptext or " - " in ptext:
            ptext = f"({ptext})"
        parts.append(f"{ptext} * [{format_word(w)}]")
    return " + ".join(parts)


_ELEM_TERM_RE = re.compile(r"^\s*(?:\((?P<par>.*)\)|(?P<bare>[^*\[\]]*?))\s*\*\s*\[(?P<word>[0-9,\s]*)\]\s*$")


def _split_top_level(s: str) -> list[str]:
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(s):
        c = s[i]
        if c in "([":
            depth += 1
        elif c in ")]":
            depth -= 1
        elif depth == 0 and s.startswith(" + ", i):
            parts.append(s[start:i])
            i += 3
            start = i
            continue
        i += 1
    parts.append(s[start:])
    return parts


def parse_element(text: str, g: CoxeterGraph | None = None) -> TLElement:
    """Parse the element text form.

    With a graph, every parsed word is pushed through reduce_word, so
    arbitrary (even non-reduced) words are accepted and normalized;
    without one, words are taken as given.
    """
    s = text.strip()
    if s == "0":
        return TLElement.zero()
    acc: dict[Word, DeltaPoly] = {}
    for part in _split_top_level(s):
        m = _ELEM_TERM_RE.match(part)
        if m is None:
            raise ValueError(f"bad element term: {part!r}")
        ptext = m.group("par") if m.group("par") is not None else m.group("bare")
        p = DeltaPoly.parse(ptext)
        w = parse_word(m.group("word"))
        if g is not None:
            extra, w = reduce_word(w, g)
            p = p * extra
        acc[w] = acc.get(w, DeltaPoly.zero()) + p
    return TLElement.from_dict(acc)
