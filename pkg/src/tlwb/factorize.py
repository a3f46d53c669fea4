"""Peeling simple diagrams off an admissible diagram.

A north-face cup whose word is empty, a lone b at the west corner, or
a lone o at the east corner matches the top of exactly one simple
diagram.  Deleting that cup, cutting a neighboring curve, and
rejoining its freed ends across the vacated nodes produces candidates
for the rest of the factorization; decorations travel with their wall
touches, and when the deleted cup carried a tick, one matching tick of
the opened neighbor cancels against it (they met through the wall, so
the pair retracts at unit cost).  A candidate counts only if stacking
the simple diagram back on top reproduces the input with coefficient
one, which makes every accepted step independently checkable.

Iterating the peel writes an admissible diagram as a product
D_{i1} ... D_{im}; the factor count is the length of the diagram.
The letter sequence is additionally required to stay a reduced word
of a fully commutative element, which rules out detours through
short-braid collapses (those recompose with coefficient one too, but
ascend instead of descending).
"""

from __future__ import annotations

from .coxeter import CoxeterGraph, build_affine_d
from .diagram import (
    Diagram,
    build_diagram,
    identity_diagram,
    is_admissible,
    simple_diagram,
)
from .fullcomm import is_fc_reduced
from .ring import ONE
from .rules import diagram_mul, reduce_diagram


class PeelError(RuntimeError):
    """No verified factorization step exists; carries the diagram."""

    def __init__(self, message: str, diagram: Diagram | None = None):
        super().__init__(message)
        self.diagram = diagram


def find_simple_edges(d: Diagram) -> list[tuple[int, int]]:
    """North-face cups that can start a peel, listed west to east."""
    k = d.k
    out = []
    for (u, v), w in d.edges:
        if v != u + 1 or v > k - 1:
            continue
        if (
            w == ""
            or (w == "b" and (u, v) == (0, 1))
            or (w == "o" and (u, v) == (k - 2, k - 1))
        ):
            out.append((u, v))
    return sorted(out)


def edge_generator(d: Diagram, e: tuple[int, int]) -> int:
    """The generator whose simple diagram shows this cup on top."""
    w = d.word_of(e)
    if w == "b":
        return 0
    if w == "o":
        return d.k  # n + 2
    return e[0] + 1


def _neighbors(d: Diagram, e: tuple[int, int]) -> list:
    """Candidate curves to reroute: the edges at the two flanking
    boundary nodes first (the usual case), then the remaining edges
    (the curve facing e from below, say, flanks nothing), then every
    loop."""
    k = d.k
    a, b = e
    flanks = (a - 1 if a > 0 else k, b + 1 if b < k - 1 else 2 * k - 1)
    out: list = []
    for f in flanks:
        for pair in d.edge_pairs:
            if f in pair and pair != e and pair not in out:
                out.append(pair)
    for pair in d.edge_pairs:
        if pair != e and pair not in out:
            out.append(pair)
    out.extend(range(len(d.loops)))
    return out


def _drop_positions(word: str, ew: str) -> list[int | None]:
    """Where the cancelled tick may sit: one index per matching char,
    or the single no-op when the deleted cup was plain."""
    if ew == "":
        return [None]
    return [i for i, ch in enumerate(word) if ch == ew]


def _remap_walls(d: Diagram, tokmap: dict) -> tuple[list, list]:
    west, east = [], []
    for side, seq in ((d.west, west), (d.east, east)):
        for t in side:
            r = tokmap.get(t, t)
            if r is not None:
                seq.append(r)
    return west, east


def _open_loop(d: Diagram, e, j: int, ew: str):
    """Candidates that open loop j into the edge {a, b}."""
    a, b = e
    w = d.loops[j]
    m = len(w)
    others = [(p, x) for p, x in d.edges if p != e]
    loops = d.loops[:j] + d.loops[j + 1 :]
    shift = {
        ("l", i, q): ("l", i - 1, q)
        for i in range(j + 1, len(d.loops))
        for q in range(len(d.loops[i]))
    }
    for c in range(m or 1):
        rot = w[c:] + w[:c]
        for gone in _drop_positions(rot, ew):
            word = rot if gone is None else rot[:gone] + rot[gone + 1 :]
            for pair in ((a, b), (b, a)):
                tokmap = dict(shift)
                for i in range(m):
                    q = (i - c) % m
                    if q == gone:
                        tokmap[("l", j, i)] = None
                        continue
                    nq = q - 1 if gone is not None and q > gone else q
                    tokmap[("l", j, i)] = ("e", pair[0], pair[1], nq)
                yield others + [(pair, word)], loops, tokmap


def _cut_edge(d: Diagram, e, nbp, ew: str):
    """Candidates that cut the neighbor edge and reroute its halves
    through the vacated nodes."""
    a, b = e
    u, v = nbp
    w = d.word_of(nbp)
    m = len(w)
    others = [(p, x) for p, x in d.edges if p != e and p != nbp]
    for c in range(m + 1):
        for gone in _drop_positions(w, ew):
            w2 = w if gone is None else w[:gone] + w[gone + 1 :]
            c2 = c - 1 if gone is not None and gone < c else c
            for ea, eb in ((a, b), (b, a)):
                # the u half keeps node u and gains ea; the v half
                # gains eb; words read along each new curve
                tokmap: dict = {}
                for i in range(m):
                    if i == gone:
                        tokmap[("e", u, v, i)] = None
                        continue
                    ii = i - 1 if gone is not None and i > gone else i
                    if ii < c2:
                        tokmap[("e", u, v, i)] = ("e", u, ea, ii)
                    else:
                        tokmap[("e", u, v, i)] = ("e", eb, v, ii - c2)
                pieces = [((u, ea), w2[:c2]), ((eb, v), w2[c2:])]
                yield others + pieces, d.loops, tokmap


def cut_and_paste(d: Diagram, e: tuple[int, int], nb) -> tuple[Diagram, ...]:
    """All admissible rejoinings of a cut neighbor across the deleted
    simple edge e.

    nb is an edge pair or a loop index.  Every cut position and both
    end assignments are tried; when e carried a tick, each matching
    neighbor tick is tried as its cancelling partner.  Non-planar and
    non-admissible results are discarded; the rest come back
    deduplicated in discovery order.
    """
    ew = d.word_of(e)
    variants = _open_loop(d, e, nb, ew) if isinstance(nb, int) else _cut_edge(d, e, nb, ew)
    out: dict[Diagram, None] = {}
    for edges, loops, tokmap in variants:
        if ew:
            tokmap[("e", e[0], e[1], 0)] = None
        west, east = _remap_walls(d, tokmap)
        try:
            cand = build_diagram(d.k, edges, loops, west, east)
        except ValueError:
            continue
        # canonicalize: a rejoining may leave ticks in non-normal
        # positions; only a unit-coefficient reduction preserves the
        # element, anything else cannot be a basis diagram
        coeff, nf = reduce_diagram(cand)
        if coeff == ONE and is_admissible(nf):
            out.setdefault(nf)
    return tuple(out)


def peel_candidates(d: Diagram):
    """Yield verified steps (i, d') with reduce(D_i . d') == (1, d)."""
    n = d.k - 2
    seen: set = set()
    for e in find_simple_edges(d):
        i = edge_generator(d, e)
        di = simple_diagram(n, i)
        for nb in _neighbors(d, e):
            for cand in cut_and_paste(d, e, nb):
                if (i, cand) in seen:
                    continue
                seen.add((i, cand))
                if diagram_mul(di, cand) == (ONE, d):
                    yield i, cand


def _search(d: Diagram, g: CoxeterGraph, max_steps: int) -> list[tuple[int, Diagram]]:
    """Depth-first factorization: a step is kept only if the rest of
    the peel completes under it.

    Recomposition alone cannot tell a true factor apart from a
    short-braid detour (those also recompose at coefficient one), but
    detours either stop being reduced words of a fully commutative
    element or run out of peelable cups, so the search backtracks past
    them.  Along the true factorization every prefix stays fully
    commutative and every tail peels, so a complete path exists
    whenever the diagram is a product of simple diagrams.
    """
    ident = identity_diagram(d.k)
    budget = [20000]

    def dfs(cur: Diagram, word: tuple[int, ...]):
        if cur == ident:
            return []
        if len(word) >= max_steps or budget[0] <= 0:
            return None
        budget[0] -= 1
        for i, cand in peel_candidates(cur):
            if not is_fc_reduced(word + (i,), g).is_fc:
                continue
            tail = dfs(cand, word + (i,))
            if tail is not None:
                return [(i, cand)] + tail
        return None

    path = dfs(d, ())
    if path is None:
        raise PeelError("no verified factorization", d)
    return path


def peel(d: Diagram, graph: CoxeterGraph | None = None) -> tuple[int, Diagram]:
    """One verified factorization step, D = D_i . d', chosen so that
    d' itself factorizes all the way down."""
    if d == identity_diagram(d.k):
        raise PeelError("the identity diagram has no factor to peel", d)
    g = graph or build_affine_d(d.k - 2)
    return _search(d, g, 1000)[0]


def factorize(
    d: Diagram, graph: CoxeterGraph | None = None, max_steps: int = 1000
) -> tuple[int, ...]:
    """Write an admissible diagram as a word in the simple diagrams.

    The returned word i1..im satisfies reduce(D_i1 ... D_im) = (1, d)
    and is a reduced word of a fully commutative element.
    """
    if not is_admissible(d):
        raise ValueError("diagram is not admissible")
    g = graph or build_affine_d(d.k - 2)
    return tuple(i for i, _ in _search(d, g, max_steps))


def diagram_length(d: Diagram, graph: CoxeterGraph | None = None) -> int:
    """Number of simple factors; equals the generator-word length."""
    return len(factorize(d, graph))
