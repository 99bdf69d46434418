import pytest

from radsq.catalog import CATALOG, get
from radsq.classify import Label, classify, explain
from radsq.quiver import parse_quiver

# Hand-derived labels, written down independently of the catalog module:
# Dynkin graphs are derived finite; Euclidean trees are tame; a single cycle is
# tame exactly when it is balanced (as many arrows each way) and discrete
# otherwise; everything else is wild.
EXPECTED = {
    "A1": "FINITE", "A2": "FINITE", "A2op": "FINITE", "A3": "FINITE", "A3zig": "FINITE",
    "A4": "FINITE", "A4zig": "FINITE", "A5": "FINITE", "A5zig": "FINITE",
    "D4": "FINITE", "D4out": "FINITE", "D5": "FINITE", "D6": "FINITE",
    "E6": "FINITE", "E7": "FINITE", "E8": "FINITE",
    "Dt4": "TAME", "Dt5": "TAME", "Et6": "TAME", "Et7": "TAME", "Et8": "TAME",
    "loop": "DISCRETE", "kronecker": "TAME",
    "cycle2": "DISCRETE", "cycle3": "DISCRETE", "cycle3mixed": "DISCRETE", "cycle4": "DISCRETE",
    "cycle4balanced": "TAME", "cycle4twobytwo": "TAME", "cycle4threeone": "DISCRETE",
    "triple": "WILD", "cyclechord": "WILD", "loopplus": "WILD", "twoloops": "WILD",
    "star5": "WILD", "T233": "WILD", "A3+kronecker": "TAME",
}


def test_catalog_is_covered():
    assert sorted(e.name for e in CATALOG) == sorted(EXPECTED)
    assert len(CATALOG) >= 20


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_catalog_label(name):
    assert classify(get(name).quiver).label.name == EXPECTED[name]


def test_label_predicates():
    v = classify(get("loop").quiver)
    assert v.is_discrete and v.is_tame and not v.is_finite
    v = classify(get("triple").quiver)
    assert not v.is_tame


def test_disconnected_takes_worst_component():
    v = classify(get("A3+kronecker").quiver)
    assert [c.label for c in v.components] == [Label.FINITE, Label.TAME]


def test_explain_mentions_epsilon_certificate():
    text = explain(classify(get("cycle3").quiver))
    assert "epsilon = 3" in text
    assert "certificate" in text


def test_empty_quiver_rejected():
    with pytest.raises(ValueError):
        classify(parse_quiver(""))
