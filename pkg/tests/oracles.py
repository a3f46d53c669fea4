"""Independent brute-force oracles the package implementations are checked against.

Everything here recomputes results from first principles with no reuse
of the package's search strategies: full commutativity via the braid
closure (all commutation swaps plus all s t s <-> t s t moves, i.e. the
full set of reduced-expression rewrites in a simply laced group), and
enumeration by filtering every word over the alphabet instead of
extending known FC elements.
"""

from __future__ import annotations

from collections import deque
from itertools import product

from tlwb.coxeter import CoxeterGraph


def braid_closure(w: tuple[int, ...], g: CoxeterGraph) -> set[tuple[int, ...]]:
    """All words reachable by commutation swaps and braid moves."""
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for i in range(len(v) - 1):
            if g.commutes(v[i], v[i + 1]):
                u = v[:i] + (v[i + 1], v[i]) + v[i + 2 :]
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        for i in range(len(v) - 2):
            s, t = v[i], v[i + 1]
            if v[i + 2] == s and s != t and g.adjacent(s, t):
                u = v[:i] + (t, s, t) + v[i + 3 :]
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return seen


def classify_word(w: tuple[int, ...], g: CoxeterGraph) -> str:
    """'fc' / 'not-fc' / 'not-reduced', decided on the braid closure.

    A word is reduced iff no member of its braid closure has equal
    adjacent letters (all reduced expressions of an element are braid
    moves apart, so a length reduction is always preceded by exposing
    such a pair).  A reduced word is FC iff no member contains a braid
    factor at all.
    """
    closure = braid_closure(w, g)
    if any(v[i] == v[i + 1] for v in closure for i in range(len(v) - 1)):
        return "not-reduced"
    for v in closure:
        for i in range(len(v) - 2):
            if v[i] == v[i + 2] and g.adjacent(v[i], v[i + 1]):
                return "not-fc"
    return "fc"


def commutation_class_bruteforce(
    w: tuple[int, ...], g: CoxeterGraph
) -> set[tuple[int, ...]]:
    """Fixpoint over single swaps, recomputed here without a work queue."""
    out = {w}
    changed = True
    while changed:
        changed = False
        for v in list(out):
            for i in range(len(v) - 1):
                if g.commutes(v[i], v[i + 1]):
                    u = v[:i] + (v[i + 1], v[i]) + v[i + 2 :]
                    if u not in out:
                        out.add(u)
                        changed = True
    return out


def bruteforce_fc_levels(g: CoxeterGraph, max_len: int) -> list[set[tuple[int, ...]]]:
    """FC elements by length, by filtering all |S|^L words of each length L.

    Elements are represented by the lex-least member of their
    commutation class so the result is directly comparable with
    enumerate_fc output.
    """
    levels: list[set[tuple[int, ...]]] = []
    for length in range(max_len + 1):
        found: set[tuple[int, ...]] = set()
        for w in product(g.generators, repeat=length):
            if classify_word(w, g) == "fc":
                found.add(min(commutation_class_bruteforce(w, g)))
        levels.append(found)
    return levels


def reduce_word_random(w, g, rng):
    """Reduce like tlalg.reduce_word but picking uniformly among every
    applicable (class member, position, rule) at each step.  Used to
    check that the deterministic strategy's answer is order-independent.
    """
    from tlwb.ring import DELTA, ONE

    coeff = ONE
    cur = tuple(w)
    while True:
        cls = sorted(commutation_class_bruteforce(cur, g))
        candidates = []
        for v in cls:
            for i in range(len(v) - 1):
                if v[i] == v[i + 1]:
                    candidates.append(("d1", v, i))
            for i in range(len(v) - 2):
                if (
                    v[i] == v[i + 2]
                    and v[i] != v[i + 1]
                    and g.adjacent(v[i], v[i + 1])
                ):
                    candidates.append(("d3", v, i))
        if not candidates:
            return coeff, min(cls)
        rule, v, i = rng.choice(candidates)
        if rule == "d1":
            coeff = coeff * DELTA
            cur = v[: i + 1] + v[i + 2 :]
        else:
            cur = v[: i + 1] + v[i + 3 :]
