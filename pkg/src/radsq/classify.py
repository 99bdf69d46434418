"""Derived representation type of a radical-square-zero algebra.

The decision runs per connected component of the quiver:

* no cycle (a tree): Dynkin gives derived finite, Euclidean trees derived
  tame but not discrete, anything else wild;
* the whole component is one cycle: tame, and discrete exactly when the
  walk condition fails (epsilon > 0);
* a cycle plus anything else: wild.

A disconnected quiver gets the worst label among its components.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .box import EpsilonReport, epsilon
from .quiver import GraphShape, Quiver, ShapeTag, connected_components, recognize_shape

__all__ = ["Label", "ComponentVerdict", "DerivedType", "classify", "explain"]


class Label(enum.IntEnum):
    FINITE = 0
    DISCRETE = 1
    TAME = 2
    WILD = 3


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[str, ...]
    shape: GraphShape
    epsilon: EpsilonReport
    label: Label
    clause: str


@dataclass(frozen=True)
class DerivedType:
    label: Label
    components: tuple[ComponentVerdict, ...]

    @property
    def is_tame(self) -> bool:
        return self.label <= Label.TAME

    @property
    def is_discrete(self) -> bool:
        return self.label <= Label.DISCRETE

    @property
    def is_finite(self) -> bool:
        return self.label == Label.FINITE

    def as_dict(self) -> dict:
        return {
            "label": self.label.name,
            "is_tame": self.is_tame,
            "is_discrete": self.is_discrete,
            "is_finite": self.is_finite,
            "components": [
                {"vertices": list(c.vertices), "shape": c.shape.name,
                 "shape_params": c.shape.params(), "epsilon": c.epsilon.epsilon,
                 "label": c.label.name, "clause": c.clause}
                for c in self.components
            ],
        }


def _component_verdict(q: Quiver) -> ComponentVerdict:
    shape = recognize_shape(q)
    eps = epsilon(q)
    tag = shape.tag
    if tag.is_dynkin:
        label, clause = Label.FINITE, "dynkin"
    elif tag in (ShapeTag.D_TILDE, ShapeTag.E_TILDE):
        label, clause = Label.TAME, "euclidean-tree"
    elif tag is ShapeTag.A_CYCLE:
        if eps.epsilon == 0:
            label, clause = Label.TAME, "cycle-walk-condition"
        else:
            label, clause = Label.DISCRETE, "cycle-no-walk-condition"
    elif eps.has_closed_walks:
        label, clause = Label.WILD, "cycle-proper-subquiver"
    else:
        label, clause = Label.WILD, "wild-tree"
    return ComponentVerdict(tuple(sorted(q.vertices)), shape, eps, label, clause)


def classify(q: Quiver) -> DerivedType:
    comps = tuple(_component_verdict(q.full_subquiver(vs)) for vs in connected_components(q))
    return DerivedType(max(c.label for c in comps), comps)


_CLAUSE_TEXT = {
    "dynkin": "the underlying graph is the Dynkin diagram {shape}; "
              "the algebra is derived finite",
    "euclidean-tree": "the underlying graph is the Euclidean tree {shape}; "
                      "derived tame with one-parameter families, not derived discrete",
    "cycle-walk-condition": "the underlying graph is the single cycle {shape} and every closed "
                            "walk is balanced (epsilon = 0); derived tame, not derived discrete",
    "cycle-no-walk-condition": "the underlying graph is the single cycle {shape} and the walk "
                               "condition fails (epsilon = {eps} != 0); derived discrete, not "
                               "derived finite",
    "cycle-proper-subquiver": "the quiver contains a cycle together with further edges ({reason}); "
                              "the cycle is a proper subquiver, so the algebra is derived wild",
    "wild-tree": "the underlying graph is a tree that is neither Dynkin nor Euclidean "
                 "({reason}); derived wild",
}


def explain(verdict: DerivedType) -> str:
    lines = [f"derived type: {verdict.label.name}"]
    if len(verdict.components) > 1:
        lines.append(f"{len(verdict.components)} components; the overall label is the worst one")
    for c in verdict.components:
        text = _CLAUSE_TEXT[c.clause].format(shape=c.shape.name, eps=c.epsilon.epsilon,
                                             reason=c.shape.reason or "non-ADE graph")
        lines.append(f"component {{{', '.join(c.vertices)}}}: {c.label.name}: {text}")
        if c.epsilon.epsilon:
            lines.append(f"  epsilon certificate: {c.epsilon.certificate_text()}")
    return "\n".join(lines)
