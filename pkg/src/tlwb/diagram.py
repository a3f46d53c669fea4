"""Decorated planar pseudo-diagrams on k strands and their concatenation.

A diagram lives in a box with k nodes n1..nk on the north wall and
s1..sk on the south wall.  Its data is a non-crossing perfect matching
of the 2k nodes, a decoration word over {b, o} on every edge and on
every closed loop, and, per wall, the order in which the decorated
curves touch that wall.

A b decoration marks a point where its curve reaches out and touches
the west wall; an o marks a touch on the east wall.  Isotopy can slide
a touch point along its curve but can never carry it past another
curve's touch on the same wall, so the top-to-bottom order of touches
is part of the diagram, recorded in `west` and `east` as sequences of
tick tokens.  An edge tick is ("e", u, v, i): position i in the word
of edge (u, v); a loop tick is ("l", j, i): position i in the cyclic
word of loop j.  Every b in the diagram appears exactly once in
`west`, every o exactly once in `east`.

The wall order is what the rewrite rules act on, and it carries real
information: a pair of b-loops whose ticks sit next to each other on
the wall can interact, while the same pair separated by the tick of a
decorated strand cannot.

Planarity and face structure are pure combinatorics here.  Walking the
box boundary clockwise gives the cyclic node order n1..nk, sk..s1; the
2k wall arcs between consecutive nodes are the atoms of the face
decomposition, and two arcs lie in the same face of the matching iff
no edge separates them.  Every edge borders exactly two faces; the
face containing the west wall arc is the west face (its edges are the
left-exposed ones) and likewise for the east.

Concatenation places the first factor on top of the second, glues the
touching walls, and traces the strands.  Decoration words concatenate
along the traced strands, and each wall order of the composite is the
first factor's order followed by the second's: the stacking puts every
touch of the top factor above every touch of the bottom one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


# -- nodes and boundary arcs ----------------------------------------
#
# Node ids: n(i) -> i-1, s(j) -> k+j-1, so 0..2k-1 in storage order
# n1 < ... < nk < s1 < ... < sk.  Cyclic boundary position: north
# nodes keep their index, south node s(j) sits at 2k-j.


def node_name(k: int, v: int) -> str:
    if not 0 <= v < 2 * k:
        raise ValueError(f"node id {v} out of range for k={k}")
    return f"n{v + 1}" if v < k else f"s{v - k + 1}"


def parse_node(k: int, text: str) -> int:
    s = text.strip()
    if len(s) < 2 or s[0] not in "ns" or not s[1:].isdigit():
        raise ValueError(f"bad node {text!r}")
    i = int(s[1:])
    if not 1 <= i <= k:
        raise ValueError(f"node {text!r} out of range for k={k}")
    return i - 1 if s[0] == "n" else k + i - 1


def _cyc(k: int, v: int) -> int:
    return v if v < k else 3 * k - 1 - v


def _crossing(k: int, pairs) -> tuple | None:
    chords = [tuple(sorted((_cyc(k, u), _cyc(k, v)))) for u, v in pairs]
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            (p1, q1), (p2, q2) = chords[i], chords[j]
            if p1 < p2 < q1 < q2 or p2 < p1 < q2 < q1:
                return pairs[i], pairs[j]
    return None


@dataclass(frozen=True)
class FaceMap:
    """Face structure of a matching: faces are keyed by their least wall arc."""

    arc_face: tuple[int, ...]
    face_arcs: dict[int, frozenset[int]]
    edge_faces: dict[tuple[int, int], tuple[int, int]]
    west: int
    east: int

    def edges_of_face(self, fkey: int) -> list[tuple[int, int]]:
        return sorted(e for e, fs in self.edge_faces.items() if fkey in fs)


@lru_cache(maxsize=None)
def face_map(k: int, pairs: tuple[tuple[int, int], ...]) -> FaceMap:
    """Faces of the matching, via wall-arc signatures.

    Arc a runs from cyclic position a to a+1 (mod 2k); arc k-1 is the
    east wall and arc 2k-1 the west wall.  An edge with cyclic span
    (p, q) separates arcs p..q-1 from the rest, so arcs belong to the
    same face iff they agree on every edge's side.
    """
    chords = sorted(tuple(sorted((_cyc(k, u), _cyc(k, v)))) for u, v in pairs)
    narcs = 2 * k

    def sig(a):
        return tuple(p <= a < q for p, q in chords)

    groups: dict[tuple, list[int]] = {}
    for a in range(narcs):
        groups.setdefault(sig(a), []).append(a)
    key_of = {s: min(arcs) for s, arcs in groups.items()}
    arc_face = tuple(key_of[sig(a)] for a in range(narcs))
    face_arcs = {min(arcs): frozenset(arcs) for arcs in groups.values()}
    edge_faces = {}
    for u, v in pairs:
        p = min(_cyc(k, u), _cyc(k, v))
        edge_faces[(u, v)] = (arc_face[p], arc_face[(p - 1) % narcs])
    return FaceMap(arc_face, face_arcs, edge_faces, arc_face[narcs - 1], arc_face[k - 1])


# -- cyclic words ------------------------------------------------------


def canonical_cycle(word: str) -> str:
    """Lexicographically least rotation of the word or its reversal.

    A closed curve has no start and no orientation, so its decoration
    word is only defined up to rotation and reversal.
    """
    if not word:
        return ""
    best = min(word[i:] + word[:i] for i in range(len(word)))
    rev = word[::-1]
    best_rev = min(rev[i:] + rev[:i] for i in range(len(rev)))
    return min(best, best_rev)


# -- diagrams --------------------------------------------------------


@dataclass(frozen=True)
class Diagram:
    """k strands: matching and loops with decoration words, plus the
    two wall orders.

    edges: ((u, v), word) with u < v, sorted; the word is read along
    the traversal from u to v.  loops: cyclic words, in canonical
    rotation and canonical order.  west/east: tick tokens top to
    bottom; see the module docstring for the token format.
    """

    k: int
    edges: tuple[tuple[tuple[int, int], str], ...]
    loops: tuple[str, ...] = ()
    west: tuple[tuple, ...] = ()
    east: tuple[tuple, ...] = ()

    def __post_init__(self):
        k = self.k
        seen = set()
        for (u, v), w in self.edges:
            if not (0 <= u < v < 2 * k):
                raise ValueError(f"bad edge ({u},{v}) for k={k}")
            if any(c not in "bo" for c in w):
                raise ValueError(f"bad decoration word {w!r}")
            seen.update((u, v))
        if len(seen) != 2 * k or len(self.edges) != k:
            raise ValueError("edges are not a perfect matching")
        if list(self.edges) != sorted(self.edges, key=lambda e: e[0]):
            raise ValueError("edges out of order")
        cross = _crossing(k, [e for e, _ in self.edges])
        if cross is not None:
            raise ValueError(f"crossing edges {cross[0]} and {cross[1]}")
        for w in self.loops:
            if any(c not in "bo" for c in w):
                raise ValueError(f"bad loop word {w!r}")
        want = {"b": set(), "o": set()}
        for (u, v), w in self.edges:
            for i, c in enumerate(w):
                want[c].add(("e", u, v, i))
        for j, w in enumerate(self.loops):
            for i, c in enumerate(w):
                want[c].add(("l", j, i))
        for charge, wall in (("b", self.west), ("o", self.east)):
            if len(wall) != len(set(wall)):
                raise ValueError("repeated tick token")
            if set(wall) != want[charge]:
                raise ValueError(
                    f"wall order for {charge!r} does not list its ticks exactly"
                )

    @property
    def faces(self) -> FaceMap:
        return face_map(self.k, tuple(e for e, _ in self.edges))

    @property
    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, _ in self.edges)

    def word_of(self, pair: tuple[int, int]) -> str:
        for e, w in self.edges:
            if e == pair:
                return w
        raise KeyError(pair)

    @property
    def decoration_count(self) -> int:
        return sum(len(w) for _, w in self.edges) + sum(len(w) for w in self.loops)

    def sort_key(self):
        return (self.k, self.edges, self.loops, self.west, self.east)


def _tick_positions(west, east):
    pos = {}
    for side, wall in enumerate((west, east)):
        for idx, tok in enumerate(wall):
            pos[tok] = (side, idx)
    return pos


def build_diagram(k, edges, loops=(), west=(), east=()) -> Diagram:
    """Normalize raw parts into a Diagram.

    Edge orientation is fixed to u < v, each loop word is rotated (or
    reflected) to its canonical cycle, loops are sorted, and the tick
    tokens in the wall orders are remapped to follow.  Ties between
    equal cyclic words are broken by wall position, so the result does
    not depend on how the input happened to be presented.
    """
    remap = {}
    es = []
    for (u, v), w in edges:
        tok = ("e", u, v)
        if u > v:
            u, v, w = v, u, w[::-1]
            order = range(len(w) - 1, -1, -1)
        else:
            order = range(len(w))
        # spelling within one edge word is not isotopy data: ticks of
        # the two walls interleave freely, so write b's before o's
        ranks = sorted(range(len(w)), key=lambda i: (w[i], i))
        new_of = {i: r for r, i in enumerate(ranks)}
        for i, old in enumerate(order):
            remap[(*tok, old)] = ("e", u, v, new_of[i])
        es.append(((u, v), "".join(sorted(w))))
    es.sort(key=lambda e: e[0])
    west1 = [remap.get(t, t) for t in west]
    east1 = [remap.get(t, t) for t in east]

    pos = _tick_positions(west1, east1)
    canon = []  # (word, perm old index -> new index) per loop
    for j, w in enumerate(loops):
        m = len(w)
        if m == 0:
            canon.append(("", {}))
            continue
        best = None
        for refl in (0, 1):
            for r in range(m):
                rot = w[r:] + w[:r]
                word = rot[::-1] if refl else rot
                inv = [
                    (r + m - 1 - i) % m if refl else (i + r) % m for i in range(m)
                ]
                try:
                    seq = tuple(pos[("l", j, p)] for p in inv)
                except KeyError as exc:
                    raise ValueError(f"loop {j} decoration without a wall tick") from exc
                if best is None or (word, seq) < (best[0], best[1]):
                    best = (word, seq, inv)
        word, _, inv = best
        canon.append((word, {p: i for i, p in enumerate(inv)}))

    def loop_key(j):
        w, _ = canon[j]
        ticks = [pos[("l", j, i)] for i in range(len(loops[j]))]
        return (w, min(ticks) if ticks else (-1, -1))

    order = sorted(range(len(loops)), key=loop_key)
    new_index = {j: jj for jj, j in enumerate(order)}

    def map_tok(t):
        if t[0] == "l":
            _, j, i = t
            return ("l", new_index[j], canon[j][1][i])
        return t

    return Diagram(
        k,
        tuple(es),
        tuple(canon[j][0] for j in order),
        tuple(map_tok(t) for t in west1),
        tuple(map_tok(t) for t in east1),
    )


def identity_diagram(k: int) -> Diagram:
    return build_diagram(k, [((i, k + i), "") for i in range(k)])


def _cup_cap_diagram(k: int, col: int, word: str) -> Diagram:
    """Cup at north columns (col, col+1), cap at the same south columns,
    verticals elsewhere; both cup and cap carry the given word (empty
    or a single symbol).  The cup's touch sits above the cap's."""
    cup = (col - 1, col)
    cap = (k + col - 1, k + col)
    edges = [(cup, word), (cap, word)]
    for i in range(k):
        if i not in (col - 1, col):
            edges.append(((i, k + i), ""))
    ticks = (("e", *cup, 0), ("e", *cap, 0))
    west = ticks if word == "b" else ()
    east = ticks if word == "o" else ()
    return build_diagram(k, edges, (), west, east)


def simple_diagram(n: int, i: int) -> Diagram:
    """The simple diagram for generator i of the affine-D graph, on k = n+2 strands.

    Generators 0 and 1 are the west cup/cap pair (0 carries a b on
    both), n+1 and n+2 the east pair (n+2 carries an o on both), and
    generator i for 2 <= i <= n is the plain pair at columns (i, i+1).
    The decorated ends collapse onto the same shape as their plain
    partners, which is exactly how the graph's two forks commute.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0 <= i <= n + 2:
        raise ValueError(f"generator {i} out of range for n={n}")
    k = n + 2
    if i in (0, 1):
        return _cup_cap_diagram(k, 1, "b" if i == 0 else "")
    if i in (n + 1, n + 2):
        return _cup_cap_diagram(k, k - 1, "o" if i == n + 2 else "")
    return _cup_cap_diagram(k, i, "")


def simple_path_diagram(k: int, i: int) -> Diagram:
    """Undecorated simple diagram for generator i of a path graph on
    k-1 nodes: the classical cup/cap at columns (i+1, i+2)."""
    if not 0 <= i <= k - 2:
        raise ValueError(f"generator {i} out of range for k={k}")
    return _cup_cap_diagram(k, i + 1, "")


def left_exposed(d: Diagram, pair: tuple[int, int]) -> bool:
    """True iff the edge borders the face containing the west wall."""
    fm = d.faces
    if pair not in fm.edge_faces:
        raise KeyError(pair)
    return fm.west in fm.edge_faces[pair]


def right_exposed(d: Diagram, pair: tuple[int, int]) -> bool:
    fm = d.faces
    if pair not in fm.edge_faces:
        raise KeyError(pair)
    return fm.east in fm.edge_faces[pair]


# -- concatenation ---------------------------------------------------


def concat(top: Diagram, bottom: Diagram) -> Diagram:
    """Stack top over bottom and trace; no reduction is performed.

    Decoration words concatenate along the traced strands; newly
    closed strands become loops.  Each composite wall order is the
    top factor's order followed by the bottom's, with every token
    rewritten to the strand or loop its decoration ended up on.
    """
    if top.k != bottom.k:
        raise ValueError(f"width mismatch: {top.k} vs {bottom.k}")
    k = top.k

    pieces = {}
    at = {}
    for side, diag in (("T", top), ("B", bottom)):
        for (u, v), w in diag.edges:
            pid = (side, (u, v))
            pieces[pid] = w
            at[(side, u)] = (pid, 0)
            at[(side, v)] = (pid, 1)

    def glued(side, node):
        # top south s(j) meets bottom north n(j)
        if side == "T" and node >= k:
            return ("B", node - k)
        if side == "B" and node < k:
            return ("T", node + k)
        return None

    used = set()

    def walk(start):
        # from a half-node, through glued pieces, until hitting a
        # composite boundary node or returning to the start; collects
        # (symbol, piece, index in the piece's own word)
        syms, cur = [], start
        while True:
            pid, end = at[cur]
            used.add(pid)
            w = pieces[pid]
            rng = range(len(w)) if end == 0 else range(len(w) - 1, -1, -1)
            syms.extend((w[i], pid, i) for i in rng)
            side, (u, v) = pid
            nxt = (side, v if end == 0 else u)
            partner = glued(*nxt)
            if partner is None:
                return nxt, syms, False
            if partner == start:
                return start, syms, True
            cur = partner

    tokmap = {}

    # open strands, from composite boundary nodes
    comp_edges = []
    done = set()
    for comp in range(2 * k):
        start = ("T", comp) if comp < k else ("B", comp)
        if start in done:
            continue
        end, syms, closed = walk(start)
        assert not closed
        done.add(start)
        done.add(end)
        a, b = comp, end[1]
        assert (b < k) == (end[0] == "T")
        u, v = min(a, b), max(a, b)
        if a > b:
            syms.reverse()
        comp_edges.append(((u, v), "".join(c for c, _, _ in syms)))
        for idx, (_, pid, i) in enumerate(syms):
            tokmap[(pid, i)] = ("e", u, v, idx)

    # closed strands
    raw_loops = []
    while True:
        rest = sorted(pid for pid in pieces if pid not in used)
        if not rest:
            break
        side, (u, v) = rest[0]
        _, syms, closed = walk((side, u))
        assert closed
        j = len(raw_loops)
        raw_loops.append("".join(c for c, _, _ in syms))
        for idx, (_, pid, i) in enumerate(syms):
            tokmap[(pid, i)] = ("l", j, idx)

    # loops carried over from the factors
    for side, diag in (("T", top), ("B", bottom)):
        for jj, w in enumerate(diag.loops):
            j = len(raw_loops)
            raw_loops.append(w)
            for i in range(len(w)):
                tokmap[((side, "loop", jj), i)] = ("l", j, i)

    def map_tok(side, tok):
        if tok[0] == "e":
            _, u, v, i = tok
            return tokmap[((side, (u, v)), i)]
        _, jj, i = tok
        return tokmap[((side, "loop", jj), i)]

    west = [map_tok("T", t) for t in top.west] + [
        map_tok("B", t) for t in bottom.west
    ]
    east = [map_tok("T", t) for t in top.east] + [
        map_tok("B", t) for t in bottom.east
    ]
    return build_diagram(k, comp_edges, raw_loops, west, east)


# -- admissibility ---------------------------------------------------

ALLOWABLE_LOOPS = ("b", "o", "bo")


def is_admissible(d: Diagram, allowable=ALLOWABLE_LOOPS) -> bool:
    """The three conditions cutting the diagram basis out of the
    irreducible diagrams.

    (1) every loop's cyclic word is allowable; (2) for each symbol,
    the number of loops carrying it plus the number of copies on
    open edges is even; (3) every open edge's word is b's then o's.
    """
    for w in d.loops:
        if w not in allowable:
            return False
    for x in "bo":
        loop_count = sum(1 for w in d.loops if x in w)
        edge_count = sum(w.count(x) for _, w in d.edges)
        if (loop_count + edge_count) % 2:
            return False
    for _, w in d.edges:
        if "ob" in w:
            return False
    return True


# -- text form -------------------------------------------------------
#
#     k=4 | n1-n2:b | n3-s3: | n4-s4: | s1-s2:b | loop:b | W:L0.0,s1-s2.0
#
# Loops list in canonical order.  The W and E fields give the wall
# orders top to bottom: `L<j>.<i>` is position i on the j-th loop,
# `n1-n2.<i>` position i on that edge.  Walls without ticks are
# omitted.


def _format_tick(k: int, tok) -> str:
    if tok[0] == "l":
        return f"L{tok[1]}.{tok[2]}"
    _, u, v, i = tok
    return f"{node_name(k, u)}-{node_name(k, v)}.{i}"


def _parse_tick(k: int, text: str):
    s = text.strip()
    head, sep, idx = s.rpartition(".")
    if not sep or not idx.isdigit():
        raise ValueError(f"bad tick {text!r}")
    i = int(idx)
    if head.startswith("L"):
        if not head[1:].isdigit():
            raise ValueError(f"bad tick {text!r}")
        return ("l", int(head[1:]), i)
    a, sep2, b = head.partition("-")
    if not sep2:
        raise ValueError(f"bad tick {text!r}")
    u, v = parse_node(k, a), parse_node(k, b)
    return ("e", min(u, v), max(u, v), i)


def format_diagram(d: Diagram) -> str:
    parts = [f"k={d.k}"]
    for (u, v), w in d.edges:
        parts.append(f"{node_name(d.k, u)}-{node_name(d.k, v)}:{w}")
    parts.extend(f"loop:{w}" for w in d.loops)
    if d.west:
        parts.append("W:" + ",".join(_format_tick(d.k, t) for t in d.west))
    if d.east:
        parts.append("E:" + ",".join(_format_tick(d.k, t) for t in d.east))
    return " | ".join(parts)


def parse_diagram(text: str) -> Diagram:
    fields = [f.strip() for f in text.split("|")]
    if not fields or not fields[0].replace(" ", "").startswith("k="):
        raise ValueError("diagram text must start with k=<count>")
    k = int(fields[0].replace(" ", "")[2:])
    edges = []
    loops = []
    walls = {"W": [], "E": []}
    for f in fields[1:]:
        if not f:
            continue
        head, sep, body = f.partition(":")
        if not sep:
            raise ValueError(f"missing ':' in field {f!r}")
        head = head.replace(" ", "")
        body = body.replace(" ", "")
        if head in walls:
            if walls[head]:
                raise ValueError(f"repeated wall field {head}")
            walls[head] = [_parse_tick(k, t) for t in body.split(",") if t]
            continue
        if any(c not in "bo" for c in body):
            raise ValueError(f"bad decoration word in field {f!r}")
        if head == "loop":
            loops.append(body)
        else:
            a, sep2, b = head.partition("-")
            if not sep2:
                raise ValueError(f"bad edge field {f!r}")
            u, v = parse_node(k, a), parse_node(k, b)
            if u == v:
                raise ValueError(f"edge with equal ends in {f!r}")
            edges.append(((min(u, v), max(u, v)), body if u < v else body[::-1]))
    return build_diagram(k, edges, loops, walls["W"], walls["E"])
