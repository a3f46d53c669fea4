"""Words, commutation classes, and fully commutative elements.

A word is a tuple of generator indices.  Two words are equivalent if
one can be turned into the other by swapping adjacent letters that
commute (m = 2); the equivalence class is the commutation class.  An
element of the Coxeter group is fully commutative (FC) when all of its
reduced expressions form a single commutation class, which for a
reduced word w amounts to: no member of the class of w contains a
braid factor s t s with m(s,t) = 3.

The FC test here literally scans the whole commutation class.  That is
exponential in the worst case but exact, and every workload in this
package stays far below the configurable class-size cap; faster
criteria can be added later with the scan as their oracle.

Canonical form is the lexicographically smallest member of the class,
so words represent FC elements uniquely and serialize stably.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .coxeter import CoxeterGraph

Word = tuple[int, ...]

DEFAULT_CLASS_CAP = 10**6
CLASS_CAP_ENV = "TLWB_CLASS_CAP"


class ClassCapExceeded(RuntimeError):
    """A commutation class or enumeration frontier outgrew the resource cap."""


def _cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CLASS_CAP_ENV, DEFAULT_CLASS_CAP))


def parse_word(text: str) -> Word:
    """Comma-separated indices; the empty string is the empty word."""
    s = text.strip()
    if not s:
        return ()
    return tuple(int(t) for t in s.split(","))


def format_word(w: Word) -> str:
    return ",".join(str(i) for i in w)


def commutation_class(w: Word, g: CoxeterGraph, cap: int | None = None) -> set[Word]:
    """All words reachable from w by swapping adjacent commuting letters."""
    cap = _cap(cap)
    for s in w:
        g._check(s)
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for i in range(len(v) - 1):
            if g.commutes(v[i], v[i + 1]):
                u = v[:i] + (v[i + 1], v[i]) + v[i + 2 :]
                if u not in seen:
                    seen.add(u)
                    if len(seen) > cap:
                        raise ClassCapExceeded(
                            f"commutation class of {w} exceeds {cap} words"
                        )
                    queue.append(u)
    return seen


FC = "fc"
NOT_FC = "not-fc"
NOT_REDUCED = "not-reduced"


@dataclass(frozen=True)
class FCResult:
    """Outcome of the FC test, with a witness word and factor position when it fails.

    kind NOT_REDUCED: witness[position] == witness[position+1], so the word
    (hence every word in its class) is not reduced.
    kind NOT_FC: witness[position:position+3] is a braid factor s t s.
    """

    kind: str
    witness: Word | None = None
    position: int | None = None

    @property
    def is_fc(self) -> bool:
        return self.kind == FC


def is_fc_reduced(w: Word, g: CoxeterGraph, cap: int | None = None) -> FCResult:
    """Classify a word as FC / not FC / not reduced by scanning its class.

    The word is assumed to be intended as a reduced expression; for a
    non-reduced word that admits no ss factor in its class the answer
    describes the word, not the group element.  The enumeration below
    only ever feeds reduced words here.
    """
    cls = sorted(commutation_class(w, g, cap))
    for v in cls:
        for i in range(len(v) - 1):
            if v[i] == v[i + 1]:
                return FCResult(NOT_REDUCED, v, i)
    for v in cls:
        for i in range(len(v) - 2):
            if v[i] == v[i + 2] and g.adjacent(v[i], v[i + 1]):
                return FCResult(NOT_FC, v, i)
    return FCResult(FC)


def canonical_form(w: Word, g: CoxeterGraph, cap: int | None = None) -> Word:
    """Lexicographically smallest member of the commutation class."""
    return min(commutation_class(w, g, cap))


@dataclass(frozen=True)
class Heap:
    """The heap of a word: positions 1..size ordered by forced precedence.

    Position i precedes j when i comes first in the word and their
    labels are equal or adjacent in the graph; `covers` is the
    transitive reduction of that order, as pairs (lower, upper).
    """

    size: int
    labels: tuple[int, ...]
    covers: frozenset[tuple[int, int]]

    def label(self, p: int) -> int:
        return self.labels[p - 1]


def heap_of(w: Word, g: CoxeterGraph) -> Heap:
    k = len(w)
    below = [[False] * (k + 1) for _ in range(k + 1)]
    for a in range(k):
        for b in range(a + 1, k):
            if w[a] == w[b] or g.adjacent(w[a], w[b]):
                below[a + 1][b + 1] = True
    # transitive closure, then reduction
    for m in range(1, k + 1):
        for i in range(1, k + 1):
            if below[i][m]:
                for j in range(1, k + 1):
                    if below[m][j]:
                        below[i][j] = True
    covers = set()
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if below[i][j] and not any(
                below[i][m] and below[m][j] for m in range(1, k + 1)
            ):
                covers.add((i, j))
    return Heap(k, tuple(w), frozenset(covers))


def enumerate_fc(
    g: CoxeterGraph, max_len: int, cap: int | None = None
) -> list[list[Word]]:
    """Canonical forms of all FC elements of length <= max_len, grouped by length.

    Breadth-first: extend each length-L element w by a generator s on
    the right, keeping w*s only when the step increases length (no
    member of the class of w ends with s) and stays FC.  Every reduced
    expression of an FC element arises from one of its prefixes this
    way, so each level is complete.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    cap = _cap(cap)
    levels: list[list[Word]] = [[()]]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        nxt: set[Word] = set()
        for w in frontier:
            cls = commutation_class(w, g, cap)
            last_letters = {v[-1] for v in cls if v}
            for s in g.generators:
                if s in last_letters:
                    continue
                ext = w + (s,)
                if is_fc_reduced(ext, g, cap).is_fc:
                    nxt.add(canonical_form(ext, g, cap))
                    if len(nxt) > cap:
                        raise ClassCapExceeded(
                            f"FC frontier exceeds {cap} words"
                        )
        frontier = sorted(nxt)
        levels.append(frontier)
    return levels
