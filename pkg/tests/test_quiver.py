import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from radsq.quiver import (DIRECT, INVERSE, Arrow, Quiver, QuiverParseError, ShapeTag, Walk,
                          closed_walks_upto, connected_components, format_quiver, parse_quiver,
                          recognize_shape)

from conftest import A3, CYCLE2, KRONECKER, LOOP, all_connected_quivers, quiver_from_pairs


def test_parse_basic():
    q = parse_quiver("# comment\nvertex a b\n\narrow x: a -> b\n")
    assert q.vertices == ("a", "b")
    assert q.arrows == (Arrow("x", "a", "b"),)


@pytest.mark.parametrize("text", [
    "vertex a\narrow x: a -> b",
    "vertex a a",
    "vertex a b\narrow x: a -> b\narrow x: b -> a",
    "vertex a\nedge a a",
    "arrow x: a -> a",
])
def test_parse_errors(text):
    with pytest.raises(QuiverParseError):
        parse_quiver(text)


def test_format_parse_round_trip():
    for q in (A3, LOOP, KRONECKER, CYCLE2):
        assert parse_quiver(format_quiver(q)) == q


def test_walk_composition_and_inverse():
    w = Walk("a", (("x", DIRECT), ("y", DIRECT)))
    assert w.vertices(CYCLE2) == ["a", "b", "a"]
    assert w.is_closed(CYCLE2)
    assert w.inverse(CYCLE2).letters == (("y", INVERSE), ("x", INVERSE))
    with pytest.raises(ValueError):
        Walk("a", (("y", DIRECT),)).vertices(CYCLE2)


def test_closed_walks_of_cycle2():
    walks = {str(w) for w in closed_walks_upto(CYCLE2, 2) if w.start == "a"}
    assert "x y" in walks
    assert "x x^-1" in walks


def test_connected_components():
    q = parse_quiver("vertex a b c d\narrow x: a -> b\narrow y: d -> c")
    assert sorted(connected_components(q)) == [("a", "b"), ("c", "d")]


@pytest.mark.parametrize("text,tag,n", [
    ("vertex a", ShapeTag.A, 1),
    ("vertex a b c\narrow x: a -> b\narrow y: c -> b", ShapeTag.A, 3),
    ("vertex a\narrow x: a -> a", ShapeTag.A_CYCLE, 0),
    ("vertex a b\narrow x: a -> b\narrow y: a -> b", ShapeTag.A_CYCLE, 1),
    ("vertex c p q r\narrow y1: p -> c\narrow y2: q -> c\narrow y3: c -> r", ShapeTag.D, 4),
    ("vertex c p q r s\narrow y1: p -> c\narrow y2: q -> c\narrow y3: c -> r\narrow y4: s -> c",
     ShapeTag.D_TILDE, 4),
    ("vertex a b\narrow x: a -> b\narrow y: a -> b\narrow z: a -> b", ShapeTag.OTHER, None),
])
def test_shape_examples(text, tag, n):
    s = recognize_shape(parse_quiver(text))
    assert s.tag is tag
    if n is not None:
        assert s.n == n


# -- independent oracle: the symmetric Cartan matrix 2I - A of the underlying graph is
# positive definite exactly for Dynkin graphs and positive semidefinite of corank 1
# exactly for Euclidean graphs.

def cartan_class(q: Quiver) -> str:
    idx = {v: i for i, v in enumerate(q.vertices)}
    n = len(idx)
    C = 2 * np.eye(n)
    for a in q.arrows:
        i, j = idx[a.src], idx[a.tgt]
        C[i, j] -= 1
        C[j, i] -= 1
    ev = np.linalg.eigvalsh(C)
    if ev.min() > 1e-9:
        return "dynkin"
    if ev.min() > -1e-9 and (np.abs(ev) < 1e-9).sum() == 1:
        return "euclidean"
    return "other"


def shape_class(q: Quiver) -> str:
    t = recognize_shape(q).tag
    return "dynkin" if t.is_dynkin else "euclidean" if t.is_euclidean else "other"


def expected_vertex_count(s):
    if s.tag is ShapeTag.A_CYCLE or s.tag.is_euclidean:
        return s.n + 1
    return s.n


def test_shape_against_cartan_small_quivers():
    seen = 0
    for q in all_connected_quivers(4, 5):
        assert shape_class(q) == cartan_class(q), format_quiver(q)
        s = recognize_shape(q)
        if s.tag is not ShapeTag.OTHER:
            assert expected_vertex_count(s) == len(q.vertices)
        seen += 1
    assert seen > 1000


@pytest.mark.parametrize("n", range(1, 11))
def test_shape_against_cartan_trees(n):
    for k, t in enumerate(nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]):
        edges = [(u, v) if (u + v + k) % 2 else (v, u) for u, v in t.edges()]
        q = quiver_from_pairs(n, edges)
        assert shape_class(q) == cartan_class(q), format_quiver(q)
        s = recognize_shape(q)
        if s.tag is not ShapeTag.OTHER:
            assert expected_vertex_count(s) == n


@st.composite
def small_quivers(draw, max_vertices=5, max_arrows=6):
    n = draw(st.integers(1, max_vertices))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          min_size=0, max_size=max_arrows))
    return quiver_from_pairs(n, pairs)


@given(small_quivers(), st.data())
def test_shape_is_orientation_independent(q, data):
    flips = data.draw(st.lists(st.booleans(), min_size=len(q.arrows), max_size=len(q.arrows)))
    r = Quiver(q.vertices, tuple(Arrow(a.id, a.tgt, a.src) if f else a
                                 for a, f in zip(q.arrows, flips)))
    for vs in connected_components(q):
        s1 = recognize_shape(q.full_subquiver(vs))
        s2 = recognize_shape(r.full_subquiver(vs))
        assert (s1.tag, s1.n) == (s2.tag, s2.n)
