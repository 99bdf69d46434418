import pytest
from hypothesis import given, strategies as st

from radsq.box import (WindowError, build_window, component_labels, component_shape, epsilon,
                       epsilon_bruteforce, potentials, satisfies_walk_condition, signed_weight,
                       window_components)
from radsq.quiver import DIRECT, INVERSE, Walk

from conftest import A2, A3, CYCLE2, CYCLE3, KRONECKER, LOOP, quiver_from_pairs


def test_signed_weight():
    assert signed_weight(Walk("a", (("x", DIRECT), ("y", DIRECT)))) == 2
    assert signed_weight(Walk("a", (("x", DIRECT), ("y", INVERSE)))) == 0


@pytest.mark.parametrize("q,eps", [(A3, 0), (KRONECKER, 0), (LOOP, 1), (CYCLE2, 2), (CYCLE3, 3)])
def test_epsilon_examples(q, eps):
    r = epsilon(q)
    assert r.epsilon == eps
    if eps:
        assert r.certificate.is_closed(q)
        assert signed_weight(r.certificate) == eps


def test_bruteforce_examples():
    assert epsilon_bruteforce(CYCLE3, 6) == 3
    assert epsilon_bruteforce(KRONECKER, 4) == 0
    assert epsilon_bruteforce(CYCLE2, 1) == 0
    with pytest.raises(ValueError):
        epsilon_bruteforce(A2, 0)


def test_walk_condition():
    assert satisfies_walk_condition(KRONECKER)
    assert not satisfies_walk_condition(CYCLE2)


@st.composite
def connected_quivers(draw):
    n = draw(st.integers(1, 5))
    # spanning tree first so the quiver is connected
    pairs = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        pairs.append((u, v) if draw(st.booleans()) else (v, u))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
    return quiver_from_pairs(n, pairs + extra)


@given(connected_quivers())
def test_epsilon_matches_bruteforce(q):
    assert epsilon(q).epsilon == epsilon_bruteforce(q, 2 * len(q.arrows) + 2)


@given(connected_quivers(), st.data())
def test_epsilon_independent_of_base_vertex(q, data):
    b = data.draw(st.sampled_from(q.vertices))
    assert epsilon(q, b).epsilon == epsilon(q).epsilon


@given(connected_quivers())
def test_potentials_drop_along_tree(q):
    pot = potentials(q)
    for a in q.arrows:
        if a not in pot.non_tree:
            assert pot.delta[a.tgt] == pot.delta[a.src] + 1


def test_window_arrows_lower_levels():
    w = build_window(A2, 0, 1)
    assert w.arrows == (("x", 1),)
    assert w.source(("x", 1)) == ("b", 1)
    assert w.target(("x", 1)) == ("a", 0)
    with pytest.raises(ValueError):
        build_window(A2, 2, 1)


def test_path_labels():
    labs = component_labels(build_window(A2, 0, 1))
    assert labs[("b", 1)] == labs[("a", 0)]
    assert len({labs[("a", 1)], labs[("b", 0)], labs[("a", 0)]}) == 3


@given(connected_quivers(), st.integers(-3, 3), st.integers(0, 4))
def test_labels_agree_with_window_components(q, lo, height):
    """Vertices joined by a window arrow carry the same label, and the number of
    labels of a tall enough window equals epsilon when it is positive."""
    w = build_window(q, lo, lo + height)
    labs = component_labels(w)
    for comp in window_components(w):
        assert len({labs[v] for v in comp}) == 1
    e = epsilon(q).epsilon
    if e:
        assert set(labs.values()) <= set(range(e))


def test_cover_shapes():
    s = component_shape(LOOP)
    assert s.kind == "cover" and s.period == 1 and s.is_line
    s = component_shape(CYCLE2)
    assert s.period == 2 and s.is_line
    s = component_shape(KRONECKER)
    assert s.kind == "opposite"
    assert s.opposite.arrows[0].src == "b"


def test_window_error_is_value_error():
    assert issubclass(WindowError, ValueError)
