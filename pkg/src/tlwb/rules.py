"""Reduction of decorated pseudo-diagrams to the diagram basis.

A pseudo-diagram straight out of `concat` can carry empty loops,
repeated decorations, and decorated loops that are not allowable.  The
moves that simplify it act on the wall orders: every rule looks at one
or two ticks that are adjacent on a wall, because two touch points can
only interact when nothing else touches the wall between them.

The move kinds, each worth a coefficient in Z[d]:

  drop          an undecorated loop is erased for a factor of d.
  cancel        two ticks of the same curve, adjacent on the wall,
                annihilate.  On an open strand the pair may have
                opposite-wall touches between its two word positions
                (those sit across the frame and are no obstruction)
                but never a same-wall one; on a loop the pair must be
                consecutive along the curve.  A loop reading b,o,b,o
                has no two same-wall touches that are consecutive on
                the curve, and indeed it never simplifies.  A loop's
                consecutive pair may also straddle the tick of a
                singly-decorated loop sitting between them on the
                wall: the pair still cancels and the small loop is
                left where it was.
  fuse          two singly-ticked loops of the same charge, adjacent
                on the wall, merge for a factor of d.  The upper loop
                survives; the lower loop's tick is set free and lands
                on whatever the wall shows next below, or on the edge
                at the wall's bottom corner when nothing is below.
  hop           when a wall shows exactly a tick of the edge at its
                top corner above a singly-ticked loop, the edge tick
                may hop past the loop onto the edge at the bottom
                corner.  This is the move that lets the two decorated
                cup generators commute; pushing ticks downward is the
                canonical direction.
  pinch         a loop whose tick opens the wall, an edge tick, and a
                second loop of the same charge right below: the loops
                merge through the touch between them for a factor of
                d, and that touch is consumed by the freed tick.
                Only the configuration at the very top of the wall
                collapses like this; lower down, a strand's touch
                keeps two loops apart for good.
  transfer      a singly-ticked loop re-hosts the edge tick directly
                above or directly below it from one corner edge of
                the wall onto the other, keeping the wall order as it
                is.  The loop can only hand a touch between the two
                strands it actually separates, which are the corner
                edges; a tick on an interior strand stays where the
                curve put it, because re-hosting it would forget
                which strand carries the decoration.  Crucially the
                tick never moves past anything, so order is
                preserved.
  detach        a loop carrying more than one decoration gives the
                tick adjacent to a singly-ticked loop of that charge
                away: the tick leaves the mixed loop for the corner
                edge on its own side, wall order unchanged.  This is
                how a loop reading b,o sheds its b against a plain
                b-loop, leaving a plain o-loop.
  pair cancel   two like ticks on two different curves, adjacent on
                the wall, annihilate together when a singly-ticked
                loop of that charge touches the wall directly above
                or directly below the pair.  The loop is what lets
                the pair slip off; without one the pair is stuck,
                which is exactly why the image of b0 b2 keeps both
                its marks.

Every move strictly decreases the tuple (number of loops, loop ticks,
edge ticks, sum over edge ticks of the wall slots below them, sum
over edge ticks of the host penalty 0/1/2 for top-corner, bottom-
corner and other edges) in lexicographic order, so reduction
terminates from any state under any strategy; the rule loader refuses
shapes outside these kinds rather than certify them.  Rules live in a
small text format, one move per line:

    loop[] -> () @ d
    edge[bb] -> edge[] @ 1
    loop[bb] & loop[b] -> loop[] & loop[b] @ 1
    loop[b] & loop[b] -> loop[b] & deposit[b] @ d
    loop[b] & edge[b] & loop[b] -> loop[b] @ d
    loop[b] & edge[b] & edge[b] -> loop[b] @ 1
    edge[b] & loop[b] -> loop[b] & edge[b] @ 1
    loop[b] & edge[b] -> loop[b] & edge[b] @ 1
    loop[bo] & loop[b] -> loop[o] & loop[b] & deposit[b] @ 1

with the left side reading top-to-bottom along the wall.  The default
rule set ships as package data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .diagram import Diagram, build_diagram, canonical_cycle, concat
from .ring import DELTA, ONE, DeltaPoly

# -- rule files ------------------------------------------------------

_COMP_RE = re.compile(r"^(loop|edge|deposit)\[([bo]*)\]$")


@dataclass(frozen=True)
class Rule:
    """One move: a classified kind, the wall it works on, its coefficient.

    kind is one of drop, cancel_edge, cancel_loop, fuse, pinch, hop,
    transfer_up, transfer_down, detach_up, detach_down,
    pair_cancel_down, pair_cancel_up; word is the mixed loop's full
    word for the detach and pair_cancel kinds and None otherwise;
    shape keeps the literal left-hand component kinds for the
    pair_cancel kinds so the finder can match the trio as written.
    """

    kind: str
    charge: str | None  # "b" or "o"; None for drop
    coeff: DeltaPoly
    text: str
    word: str | None = None
    shape: tuple[str, ...] | None = None

    def __str__(self) -> str:
        return self.text


def _components(side: str, text: str):
    parts = [p.strip() for p in text.split("&")]
    if parts == ["()"]:
        return []
    out = []
    for p in parts:
        m = _COMP_RE.match(p)
        if not m:
            raise ValueError(f"bad component {p!r} on rule {side}")
        out.append((m.group(1), m.group(2)))
    return out


def _classify(lhs, rhs):
    """Match the components against the certified move shapes."""
    if lhs == [("loop", "")] and rhs == []:
        return "drop", None, None, None
    if len(lhs) == 1 and len(rhs) == 1:
        (kind, w), (rkind, rw) = lhs[0], rhs[0]
        if (
            kind == rkind
            and kind in ("edge", "loop")
            and rw == ""
            and len(w) == 2
            and w[0] == w[1]
        ):
            return ("cancel_edge" if kind == "edge" else "cancel_loop"), w[0], None, None
    if len(lhs) == 2 and len(rhs) == 2:
        x = lhs[0][1]
        if len(x) == 1 and all(w == x for _, w in lhs + rhs):
            shapes = ([k for k, _ in lhs], [k for k, _ in rhs])
            if shapes == (["loop", "loop"], ["loop", "deposit"]):
                return "fuse", x, None, None
            if shapes == (["edge", "loop"], ["loop", "edge"]):
                return "hop", x, None, None
            if shapes == (["edge", "loop"], ["edge", "loop"]):
                return "transfer_up", x, None, None
            if shapes == (["loop", "edge"], ["loop", "edge"]):
                return "transfer_down", x, None, None
    if len(lhs) == 3 and len(rhs) == 1:
        x = lhs[0][1]
        if (
            len(x) == 1
            and all(w == x for _, w in lhs + rhs)
            and [k for k, _ in lhs] == ["loop", "edge", "loop"]
            and rhs[0][0] == "loop"
        ):
            return "pinch", x, None, None
    if len(lhs) == 3 and 1 <= len(rhs) <= 2:
        # a bare loop right above or below a pair of like ticks on two
        # different hosts lets the pair annihilate
        for med, kind in ((0, "pair_cancel_down"), (2, "pair_cancel_up")):
            x = lhs[med][1]
            if lhs[med] != ("loop", x) or len(x) != 1:
                continue
            pair = lhs[1:] if med == 0 else lhs[:2]
            survivors = [("loop", x)] if med == 0 else []
            words, ok = [], True
            for pk, pw in pair:
                if pk == "edge" and pw == x:
                    continue
                if pk == "loop" and len(pw) >= 2 and x in pw:
                    words.append(pw)
                    survivors.append(("loop", pw.replace(x, "", 1)))
                    continue
                ok = False
            if med == 2:
                survivors.append(("loop", x))
            if not ok or len(words) > 1:
                continue
            if len(rhs) == len(survivors) and all(
                rk == sk and sorted(rw) == sorted(sw)
                for (rk, rw), (sk, sw) in zip(rhs, survivors)
            ):
                word = canonical_cycle(words[0]) if words else None
                return kind, x, word, tuple(k for k, _ in lhs)
    if (
        len(lhs) == 2
        and len(rhs) == 2
        and all(k == "loop" for k, _ in lhs + rhs)
        and len(lhs[1][1]) == 1
        and rhs[1] == lhs[1]
    ):
        # a loop's consecutive like pair straddles a bare loop and cancels
        x, w = lhs[1][1], lhs[0][1]
        if w.count(x) >= 2 and sorted(rhs[0][1]) == sorted(w.replace(x, "", 2)):
            return "cancel_loop_across", x, canonical_cycle(w), None
    if len(lhs) == 2 and len(rhs) == 3 and all(k == "loop" for k, _ in lhs):
        # a mixed loop sheds one tick against a plain loop on either side
        for src in (0, 1):
            w, x = lhs[src][1], lhs[1 - src][1]
            if not (len(x) == 1 and len(w) >= 2 and x in w):
                continue
            want = list(rhs[:2])
            want[1 - src] = ("loop", x)
            shed = sorted(w.replace(x, "", 1))
            if (
                rhs[2] == ("deposit", x)
                and want[1 - src] == rhs[1 - src]
                and rhs[src][0] == "loop"
                and sorted(rhs[src][1]) == shed
            ):
                kind = "detach_up" if src == 0 else "detach_down"
                return kind, x, canonical_cycle(w), None
    raise ValueError("rule shape is not one of the terminating move kinds")


def _parse_coeff(text: str) -> DeltaPoly:
    s = text.strip()
    if s == "d":
        return DELTA
    if s.lstrip("+-").isdigit():
        return DeltaPoly.const(int(s))
    return DeltaPoly.parse(s)


def parse_rules(text: str) -> tuple[Rule, ...]:
    rules = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        body, sep, coeff = line.rpartition("@")
        if not sep:
            raise ValueError(f"missing '@ coefficient' in rule {line!r}")
        left, sep, right = body.partition("->")
        if not sep:
            raise ValueError(f"missing '->' in rule {line!r}")
        lhs = _components("left", left)
        rhs = _components("right", right)
        kind, charge, word, shape = _classify(lhs, rhs)
        rules.append(Rule(kind, charge, _parse_coeff(coeff), line, word, shape))
    if not rules:
        raise ValueError("empty rule set")
    return tuple(rules)


def default_rules() -> tuple[Rule, ...]:
    text = resources.files("tlwb.data").joinpath("affine_d.rules").read_text()
    return parse_rules(text)


# -- the reduction engine --------------------------------------------


class _State:
    """Mutable copy of a diagram while rules fire."""

    def __init__(self, d: Diagram):
        self.k = d.k
        self.edges = {pair: list(w) for pair, w in d.edges}
        self.loops = [list(w) for w in d.loops]
        self.west = list(d.west)
        self.east = list(d.east)

    def wall(self, charge: str) -> list:
        return self.west if charge == "b" else self.east

    def walls(self):
        return (self.west, self.east)

    def corner_node(self, charge: str, top: bool) -> int:
        # node where this wall meets the north or south boundary
        if charge == "b":
            return 0 if top else self.k
        return self.k - 1 if top else 2 * self.k - 1

    def corner_edge(self, node: int) -> tuple[int, int]:
        for pair in self.edges:
            if node in pair:
                return pair
        raise AssertionError("perfect matching misses a node")

    def corner_edges(self, charge: str) -> tuple[tuple[int, int], tuple[int, int]]:
        return (
            self.corner_edge(self.corner_node(charge, True)),
            self.corner_edge(self.corner_node(charge, False)),
        )

    def to_diagram(self) -> Diagram:
        return build_diagram(
            self.k,
            [(pair, "".join(w)) for pair, w in self.edges.items()],
            ["".join(w) for w in self.loops],
            self.west,
            self.east,
        )


def _shift_edge(state: _State, pair, start: int, delta: int):
    u, v = pair
    for wall in state.walls():
        for t, tok in enumerate(wall):
            if tok[0] == "e" and (tok[1], tok[2]) == pair and tok[3] >= start:
                wall[t] = ("e", u, v, tok[3] + delta)


def _shift_loop(state: _State, j: int, start: int, delta: int):
    for wall in state.walls():
        for t, tok in enumerate(wall):
            if tok[0] == "l" and tok[1] == j and tok[2] >= start:
                wall[t] = ("l", j, tok[2] + delta)


def _delete_loop(state: _State, j: int):
    del state.loops[j]
    for wall in state.walls():
        for t, tok in enumerate(wall):
            if tok[0] == "l" and tok[1] > j:
                wall[t] = ("l", tok[1] - 1, tok[2])


def _insert_edge_char(state: _State, pair, i: int, charge: str):
    """Put charge into the edge word at index i; returns the new token."""
    _shift_edge(state, pair, i, +1)
    state.edges[pair].insert(i, charge)
    return ("e", pair[0], pair[1], i)


def _insert_loop_char(state: _State, j: int, i: int, charge: str):
    _shift_loop(state, j, i, +1)
    state.loops[j].insert(i, charge)
    return ("l", j, i)


def _remove_edge_char(state: _State, pair, i: int):
    del state.edges[pair][i]
    _shift_edge(state, pair, i + 1, -1)


def _emit_at_corner(state: _State, charge: str, top: bool):
    """Put the charge on the corner edge, at its wall end; new token."""
    node = state.corner_node(charge, top)
    pair = state.corner_edge(node)
    i = 0 if pair[0] == node else len(state.edges[pair])
    return _insert_edge_char(state, pair, i, charge)


def _find(state: _State, rule: Rule) -> list[tuple]:
    """All positions where the rule can fire, in scanning order."""
    if rule.kind == "drop":
        return [(j,) for j, w in enumerate(state.loops) if not w]
    wall = state.wall(rule.charge)
    out = []
    if rule.kind == "cancel_edge":
        x = rule.charge
        for t in range(len(wall) - 1):
            a, b = wall[t], wall[t + 1]
            if a[0] != "e" or b[0] != "e" or a[1:3] != b[1:3]:
                continue
            # opposite-wall chars between the two are no obstruction
            lo, hi = sorted((a[3], b[3]))
            word = state.edges[(a[1], a[2])]
            if all(word[p] != x for p in range(lo + 1, hi)):
                out.append((t,))
    elif rule.kind == "cancel_loop":
        for t in range(len(wall) - 1):
            a, b = wall[t], wall[t + 1]
            if a[0] == "l" and b[0] == "l" and a[1] == b[1]:
                m = len(state.loops[a[1]])
                if m >= 2 and (b[2] == (a[2] + 1) % m or a[2] == (b[2] + 1) % m):
                    out.append((t,))
    elif rule.kind == "fuse":
        x = rule.charge
        for t in range(len(wall) - 1):
            a, b = wall[t], wall[t + 1]
            if (
                a[0] == "l"
                and b[0] == "l"
                and a[1] != b[1]
                and state.loops[a[1]] == [x]
                and state.loops[b[1]] == [x]
            ):
                out.append((t,))
    elif rule.kind == "pinch":
        x = rule.charge
        if (
            len(wall) >= 3
            and wall[0][0] == "l"
            and wall[1][0] == "e"
            and wall[2][0] == "l"
            and wall[0][1] != wall[2][1]
            and state.loops[wall[0][1]] == [x]
            and state.loops[wall[2][1]] == [x]
        ):
            out.append((0,))
    elif rule.kind == "hop":
        x = rule.charge
        if len(wall) == 2 and wall[0][0] == "e" and wall[1][0] == "l":
            pair = (wall[0][1], wall[0][2])
            if state.loops[wall[1][1]] == [x] and state.corner_node(x, True) in pair:
                out.append((0,))
    elif rule.kind in ("transfer_up", "transfer_down"):
        x = rule.charge
        lo = rule.kind == "transfer_down"  # the tick sits below the loop
        source = state.corner_edge(state.corner_node(x, top=lo))
        target = state.corner_edge(state.corner_node(x, top=not lo))

        def bare(tok):
            return tok[0] == "l" and state.loops[tok[1]] == [x]

        for t in range(len(wall) - 1):
            loop_tok, edge_tok = (wall[t], wall[t + 1]) if lo else (wall[t + 1], wall[t])
            if not (bare(loop_tok) and edge_tok[0] == "e"):
                continue
            if (edge_tok[1], edge_tok[2]) != source:
                continue  # interior strands keep their ticks
            if (edge_tok[1], edge_tok[2]) == target:
                continue  # already home
            # a tick between two bare loops settles downward only
            if not lo and t > 0 and bare(wall[t - 1]):
                continue
            out.append((t,))
    elif rule.kind in ("detach_up", "detach_down"):
        x = rule.charge
        lo = rule.kind == "detach_down"  # the mixed loop's tick sits below
        for t in range(len(wall) - 1):
            plain_tok, mix_tok = (wall[t], wall[t + 1]) if lo else (wall[t + 1], wall[t])
            if not (plain_tok[0] == "l" and mix_tok[0] == "l"):
                continue
            if plain_tok[1] == mix_tok[1] or state.loops[plain_tok[1]] != [x]:
                continue
            if canonical_cycle("".join(state.loops[mix_tok[1]])) == rule.word:
                out.append((t,))
    elif rule.kind == "cancel_loop_across":
        x = rule.charge
        for t in range(len(wall) - 2):
            a, mid, b = wall[t : t + 3]
            if not (a[0] == "l" and b[0] == "l" and mid[0] == "l"):
                continue
            if a[1] != b[1] or mid[1] == a[1]:
                continue
            if state.loops[mid[1]] != [x]:
                continue
            if canonical_cycle("".join(state.loops[a[1]])) != rule.word:
                continue
            m = len(state.loops[a[1]])
            if m >= 2 and (b[2] == (a[2] + 1) % m or a[2] == (b[2] + 1) % m):
                out.append((t,))
    elif rule.kind in ("pair_cancel_down", "pair_cancel_up"):
        x = rule.charge
        med = 0 if rule.kind == "pair_cancel_down" else 2
        for t in range(len(wall) - 2):
            trio = wall[t : t + 3]
            if any(
                tok[0] != ("l" if k == "loop" else "e")
                for tok, k in zip(trio, rule.shape)
            ):
                continue
            if state.loops[trio[med][1]] != [x]:
                continue
            a, b = (trio[1], trio[2]) if med == 0 else (trio[0], trio[1])
            if a[0] == "e" and b[0] == "e" and a[1:3] == b[1:3]:
                continue  # one strand touching twice is cancel_edge business
            ok = True
            for tok in (a, b):
                if tok[0] == "l" and (
                    canonical_cycle("".join(state.loops[tok[1]])) != rule.word
                ):
                    ok = False
            if ok:
                out.append((t,))
    return out


def _apply(state: _State, rule: Rule, redex: tuple):
    if rule.kind == "drop":
        (j,) = redex
        _delete_loop(state, j)
        return

    (t,) = redex
    wall = state.wall(rule.charge)

    if rule.kind == "cancel_edge":
        tok = wall[t]
        pair = (tok[1], tok[2])
        lo, hi = sorted((tok[3], wall[t + 1][3]))
        del wall[t : t + 2]
        _remove_edge_char(state, pair, hi)
        _remove_edge_char(state, pair, lo)
        return

    if rule.kind == "cancel_loop":
        j = wall[t][1]
        i1, i2 = sorted((wall[t][2], wall[t + 1][2]))
        m = len(state.loops[j])
        del wall[t : t + 2]
        if i2 == i1 + 1:
            del state.loops[j][i1 : i1 + 2]
            _shift_loop(state, j, i1 + 2, -2)
        else:  # the pair wraps: positions m-1 and 0
            assert i1 == 0 and i2 == m - 1
            del state.loops[j][m - 1]
            del state.loops[j][0]
            _shift_loop(state, j, 1, -1)
        return

    if rule.kind == "fuse":
        x = rule.charge
        freed = wall.pop(t + 1)
        _delete_loop(state, freed[1])
        if t + 1 < len(wall):
            below = wall[t + 1]
            if below[0] == "e":
                newtok = _insert_edge_char(state, (below[1], below[2]), below[3], x)
            else:
                newtok = _insert_loop_char(state, below[1], below[2], x)
        else:
            newtok = _emit_at_corner(state, x, top=False)
        wall.insert(t + 1, newtok)
        return

    if rule.kind == "pinch":
        etok, jlow = wall[1], wall[2][1]
        del wall[1:3]
        _remove_edge_char(state, (etok[1], etok[2]), etok[3])
        _delete_loop(state, jlow)
        return

    if rule.kind == "hop":
        x = rule.charge
        tok = wall[0]
        del wall[0]
        _remove_edge_char(state, (tok[1], tok[2]), tok[3])
        wall.append(_emit_at_corner(state, x, top=False))
        return

    if rule.kind in ("transfer_up", "transfer_down"):
        x = rule.charge
        lo = rule.kind == "transfer_down"
        slot = t + 1 if lo else t
        tok = wall[slot]
        del wall[slot]
        _remove_edge_char(state, (tok[1], tok[2]), tok[3])
        wall.insert(slot, _emit_at_corner(state, x, top=not lo))
        return

    if rule.kind in ("detach_up", "detach_down"):
        x = rule.charge
        lo = rule.kind == "detach_down"
        slot = t + 1 if lo else t
        tok = wall[slot]
        j, i = tok[1], tok[2]
        del wall[slot]
        del state.loops[j][i]
        _shift_loop(state, j, i + 1, -1)
        wall.insert(slot, _emit_at_corner(state, x, top=not lo))
        return

    if rule.kind == "cancel_loop_across":
        j = wall[t][1]
        i1, i2 = sorted((wall[t][2], wall[t + 2][2]))
        m = len(state.loops[j])
        del wall[t + 2]
        del wall[t]
        if i2 == i1 + 1:
            del state.loops[j][i1 : i1 + 2]
            _shift_loop(state, j, i1 + 2, -2)
        else:  # the pair wraps: positions m-1 and 0
            assert i1 == 0 and i2 == m - 1
            del state.loops[j][m - 1]
            del state.loops[j][0]
            _shift_loop(state, j, 1, -1)
        return

    if rule.kind in ("pair_cancel_down", "pair_cancel_up"):
        top = t + 1 if rule.kind == "pair_cancel_down" else t
        toks = wall[top], wall[top + 1]
        del wall[top : top + 2]
        for tok in toks:
            if tok[0] == "e":
                _remove_edge_char(state, (tok[1], tok[2]), tok[3])
            else:
                j, i = tok[1], tok[2]
                del state.loops[j][i]
                _shift_loop(state, j, i + 1, -1)
        return

    raise AssertionError(f"unknown rule kind {rule.kind}")


def reduce_diagram(d: Diagram, rules=None, rng=None) -> tuple[DeltaPoly, Diagram]:
    """Fire rules until none applies; returns (coefficient, normal form).

    With the default strategy the first position of the earliest rule
    in the file fires each round.  Passing a random.Random picks each
    round's move uniformly among every (rule, position) pair instead,
    which is how the order-independence of the normal form gets
    exercised.
    """
    if rules is None:
        rules = default_rules()
    state = _State(d)
    coeff = ONE
    while True:
        if rng is None:
            hit = None
            for rule in rules:
                found = _find(state, rule)
                if found:
                    hit = (rule, found[0])
                    break
        else:
            all_hits = [(r, pos) for r in rules for pos in _find(state, r)]
            hit = rng.choice(all_hits) if all_hits else None
        if hit is None:
            return coeff, state.to_diagram()
        rule, redex = hit
        _apply(state, rule, redex)
        coeff = coeff * rule.coeff


def diagram_mul(a: Diagram, b: Diagram, rules=None, rng=None):
    """Product in the diagram algebra: stack, then reduce."""
    return reduce_diagram(concat(a, b), rules, rng)


# -- linear combinations ----------------------------------------------


@dataclass(frozen=True)
class DiagramElement:
    """A Z[d]-linear combination of reduced diagrams.

    terms is sorted by the diagrams' sort keys and stores no zero
    coefficients, so equal elements compare equal.
    """

    terms: tuple[tuple[Diagram, DeltaPoly], ...]

    def __post_init__(self):
        keys = [d.sort_key() for d, _ in self.terms]
        if keys != sorted(keys):
            raise ValueError("terms out of order")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate diagrams")
        if any(p.is_zero for _, p in self.terms):
            raise ValueError("zero coefficient stored")

    @classmethod
    def from_dict(cls, d: dict[Diagram, DeltaPoly]) -> "DiagramElement":
        items = [(dg, p) for dg, p in d.items() if not p.is_zero]
        items.sort(key=lambda t: t[0].sort_key())
        return cls(tuple(items))

    @classmethod
    def zero(cls) -> "DiagramElement":
        return cls(())

    @classmethod
    def monomial(cls, d: Diagram, coeff: DeltaPoly = ONE) -> "DiagramElement":
        if coeff.is_zero:
            return cls.zero()
        return cls(((d, coeff),))

    def as_dict(self) -> dict[Diagram, DeltaPoly]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DiagramElement") -> "DiagramElement":
        acc = dict(self.terms)
        for d, p in other.terms:
            acc[d] = acc.get(d, DeltaPoly.zero()) + p
        return DiagramElement.from_dict(acc)

    def scale(self, c: DeltaPoly | int) -> "DiagramElement":
        if isinstance(c, int):
            c = DeltaPoly.const(c)
        return DiagramElement.from_dict({d: c * p for d, p in self.terms})


def element_mul(x: DiagramElement, y: DiagramElement, rules=None) -> DiagramElement:
    """Bilinear extension of diagram_mul."""
    acc: dict[Diagram, DeltaPoly] = {}
    for da, ca in x.terms:
        for db, cb in y.terms:
            p, d = diagram_mul(da, db, rules)
            acc[d] = acc.get(d, DeltaPoly.zero()) + ca * cb * p
    return DiagramElement.from_dict(acc)
