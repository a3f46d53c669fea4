"""Planar pseudo-diagrams: construction, gluing, and the text form."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tlwb.diagram import (
    ALLOWABLE_LOOPS,
    Diagram,
    build_diagram,
    canonical_cycle,
    concat,
    format_diagram,
    identity_diagram,
    is_admissible,
    left_exposed,
    node_name,
    parse_diagram,
    parse_node,
    right_exposed,
    simple_diagram,
    simple_path_diagram,
)


def plain(k, pairs):
    return build_diagram(k, [(p, "") for p in pairs])


def all_matchings(nodes):
    if not nodes:
        yield []
        return
    a, rest = nodes[0], nodes[1:]
    for i, b in enumerate(rest):
        for m in all_matchings(rest[:i] + rest[i + 1 :]):
            yield [(a, b)] + m


def test_node_names():
    assert node_name(4, 0) == "n1"
    assert node_name(4, 3) == "n4"
    assert node_name(4, 4) == "s1"
    assert node_name(4, 7) == "s4"
    for v in range(10):
        assert parse_node(5, node_name(5, v)) == v


def test_validation_rejects_bad_shapes():
    with pytest.raises(ValueError):
        plain(2, [(0, 1), (2, 2)])  # not a matching
    with pytest.raises(ValueError):
        plain(2, [(0, 1), (2, 4)])  # node out of range
    with pytest.raises(ValueError):
        plain(2, [(0, 3), (1, 2)])  # crossing pair
    with pytest.raises(ValueError):
        build_diagram(2, [((0, 1), "x"), ((2, 3), "")])
    with pytest.raises(ValueError):
        # a decorated loop must put its ticks on a wall
        build_diagram(2, [((0, 1), ""), ((2, 3), "")], loops=["b"])


def test_validation_ties_ticks_to_walls():
    edges = (((0, 1), "b"), ((2, 3), ""))
    with pytest.raises(ValueError):
        Diagram(2, edges)  # b decoration missing from the west order
    with pytest.raises(ValueError):
        Diagram(2, edges, west=(("e", 0, 1, 0), ("e", 0, 1, 0)))
    d = Diagram(2, edges, west=(("e", 0, 1, 0),))
    assert d.word_of((0, 1)) == "b"


def test_crossing_detection_wraps_the_frame():
    # n1-s2 and n2-s1 cross in the middle of the square
    with pytest.raises(ValueError):
        plain(2, [(0, 3), (1, 2)])
    # but a nested pair is fine
    plain(2, [(0, 1), (2, 3)])
    plain(3, [(0, 5), (1, 2), (3, 4)])


@pytest.mark.parametrize("k,catalan", [(3, 5), (4, 14), (5, 42)])
def test_planar_matchings_are_catalan(k, catalan):
    good = 0
    for m in all_matchings(list(range(2 * k))):
        try:
            plain(k, m)
        except ValueError:
            continue
        good += 1
    assert good == catalan


def test_canonical_cycle():
    assert canonical_cycle("ob") == "bo"
    assert canonical_cycle("oob") == "boo"
    assert canonical_cycle("obob") == "bobo"
    assert canonical_cycle("") == ""


def test_build_diagram_orients_edges_and_sorts_spelling():
    d = build_diagram(
        2,
        [((1, 0), "b"), ((3, 2), "")],
        west=[("e", 1, 0, 0)],
    )
    assert d.edge_pairs == ((0, 1), (2, 3))
    assert d.west == (("e", 0, 1, 0),)
    # an o-then-b spelling on one strand is the same picture as b-then-o
    d = build_diagram(
        2,
        [((0, 2), "ob"), ((1, 3), "")],
        west=[("e", 0, 2, 1)],
        east=[("e", 0, 2, 0)],
    )
    assert d.word_of((0, 2)) == "bo"
    assert d.west == (("e", 0, 2, 0),)
    assert d.east == (("e", 0, 2, 1),)


def test_loop_words_canonical_up_to_rotation():
    base = [((0, 1), ""), ((2, 3), "")]
    d1 = build_diagram(2, base, loops=["ob"], west=[("l", 0, 1)], east=[("l", 0, 0)])
    d2 = build_diagram(2, base, loops=["bo"], west=[("l", 0, 0)], east=[("l", 0, 1)])
    assert d1 == d2
    assert d1.loops == ("bo",)


def test_identity_and_simple_shapes():
    e = identity_diagram(4)
    assert e.edge_pairs == ((0, 4), (1, 5), (2, 6), (3, 7))
    assert e.decoration_count == 0
    # the five generators at n=2: two west companions, a middle one,
    # and two east companions
    d0 = simple_diagram(2, 0)
    assert d0.word_of((0, 1)) == "b" and d0.word_of((4, 5)) == "b"
    d1 = simple_diagram(2, 1)
    assert d1.word_of((0, 1)) == "" and d1.decoration_count == 0
    d2 = simple_diagram(2, 2)
    assert d2.edge_pairs == ((0, 4), (1, 2), (3, 7), (5, 6))
    d4 = simple_diagram(2, 4)
    assert d4.word_of((2, 3)) == "o" and d4.word_of((6, 7)) == "o"
    assert simple_path_diagram(4, 1).edge_pairs == ((0, 4), (1, 2), (3, 7), (5, 6))
    with pytest.raises(ValueError):
        simple_diagram(2, 5)


def test_exposure():
    d0 = simple_diagram(2, 0)
    assert left_exposed(d0, (0, 1)) and left_exposed(d0, (4, 5))
    # the corridor between cup and cap reaches the first vertical strand
    assert left_exposed(d0, (2, 6)) and not left_exposed(d0, (3, 7))
    d4 = simple_diagram(2, 4)
    assert right_exposed(d4, (2, 3)) and right_exposed(d4, (6, 7))
    assert not right_exposed(d4, (0, 4))
    e = identity_diagram(3)
    assert left_exposed(e, (0, 3)) and not left_exposed(e, (1, 4))
    assert right_exposed(e, (2, 5))


def test_concat_identity_is_neutral():
    rng = random.Random(5)
    for _ in range(20):
        word = [rng.randrange(5) for _ in range(rng.randrange(1, 6))]
        d = simple_diagram(2, word[0])
        for i in word[1:]:
            d = concat(d, simple_diagram(2, i))
        k = d.k
        assert concat(d, identity_diagram(k)) == d
        assert concat(identity_diagram(k), d) == d


def test_concat_makes_loops():
    d1 = simple_diagram(2, 1)
    sq = concat(d1, d1)
    assert sq.loops == ("",)
    assert sq.edge_pairs == d1.edge_pairs
    d0 = simple_diagram(2, 0)
    sq0 = concat(d0, d0)
    # the closed component keeps both its west touches
    assert sq0.loops == ("bb",)
    assert len(sq0.west) == 4


def test_concat_stacks_wall_orders_top_first():
    d0, d1 = simple_diagram(2, 0), simple_diagram(2, 1)
    raw = concat(d0, d1)
    # d0's cap fuses with d1's cup into a singly-ticked loop below d0's cup
    assert raw.loops == ("b",)
    assert raw.west == (("e", 0, 1, 0), ("l", 0, 0))
    raw = concat(d0, d0)
    assert raw.loops == ("bb",)
    # top cup tick, then the closed component's two ticks, then the cap
    assert raw.west == (("e", 0, 1, 0), ("l", 0, 0), ("l", 0, 1), ("e", 4, 5, 0))


def test_concat_carries_loops_through():
    d0, d1 = simple_diagram(2, 0), simple_diagram(2, 1)
    once = concat(d0, d1)
    again = concat(once, concat(d0, d1))
    words = sorted(again.loops)
    assert len(words) >= 1
    assert all(set(w) <= {"b", "o"} for w in words)


def test_admissibility():
    assert ALLOWABLE_LOOPS == ("b", "o", "bo")
    assert is_admissible(simple_diagram(2, 0))
    d = concat(simple_diagram(2, 1), simple_diagram(2, 1))
    assert not is_admissible(d)  # empty loop
    d = concat(simple_diagram(2, 0), simple_diagram(2, 0))
    assert not is_admissible(d)  # loop word bb
    lone = build_diagram(
        2,
        [((0, 1), ""), ((2, 3), "")],
        loops=["bo"],
        west=[("l", 0, 0)],
        east=[("l", 0, 1)],
    )
    assert not is_admissible(lone)  # odd tick count per charge
    ok = build_diagram(
        2,
        [((0, 1), ""), ((2, 3), "")],
        loops=["bo", "bo"],
        west=[("l", 0, 0), ("l", 1, 0)],
        east=[("l", 0, 1), ("l", 1, 1)],
    )
    assert is_admissible(ok)


def test_text_round_trip_simples():
    for i in range(5):
        d = simple_diagram(2, i)
        assert parse_diagram(format_diagram(d)) == d
    for i in range(3):
        d = simple_path_diagram(4, i)
        assert parse_diagram(format_diagram(d)) == d


def test_text_form_reads_naturally():
    d0 = simple_diagram(2, 0)
    text = format_diagram(d0)
    assert text.startswith("k=4 |")
    assert "n1-n2:b" in text and "s1-s2:b" in text
    assert "W:n1-n2.0,s1-s2.0" in text
    d = parse_diagram("k=2 | n1-n2:b | s1-s2:b | W:n1-n2.0,s1-s2.0")
    assert d.word_of((0, 1)) == "b"


def test_parse_diagram_rejections():
    with pytest.raises(ValueError):
        parse_diagram("k=2 | n1-n2: | s1-s2: | W:n1-n2.0")
    with pytest.raises(ValueError):
        parse_diagram("k=2 | n1-n2:b | s1-s2:b | W:n1-n2.0,s1-s2.0 | W:s1-s2.0")
    with pytest.raises(ValueError):
        parse_diagram("k=2 | n1-n3:b")


words = st.lists(st.integers(0, 4), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(words)
def test_concat_word_images_stay_planar_matchings(ws):
    d = simple_diagram(2, ws[0])
    for i in ws[1:]:
        d = concat(d, simple_diagram(2, i))
    # construction re-validates matching, planarity, and tick wiring
    assert len(d.edge_pairs) == 4
    assert parse_diagram(format_diagram(d)) == d


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_concat_is_associative_on_raw_diagrams(vs, ws):
    def chain(word):
        d = simple_diagram(2, word[0])
        for i in word[1:]:
            d = concat(d, simple_diagram(2, i))
        return d

    a, b = chain(vs), chain(ws)
    mid = simple_diagram(2, 2)
    assert concat(concat(a, mid), b) == concat(a, concat(mid, b))
