"""Finite windows of the companion quiver and the walk invariant epsilon.

The companion quiver has vertices ``(x, i)`` for x in Q and i in Z, and for
each arrow ``alpha: a -> b`` and level i an arrow ``(alpha, i): (b, i) -> (a, i-1)``.
Every arrow drops the level by one.  Connected components are indexed by a
level potential on Q: a vertex ``(b, j)`` lies in the component of the base
vertex at level i exactly when ``j - delta(b)`` is congruent to i modulo
epsilon(Q) (or equal to it when epsilon(Q) = 0).
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property

from . import kernels
from .quiver import DIRECT, INVERSE, Arrow, Quiver, Walk

__all__ = [
    "signed_weight", "Potentials", "potentials", "EpsilonReport", "epsilon",
    "epsilon_bruteforce", "satisfies_walk_condition", "BoxWindow", "build_window",
    "component_labels", "window_components", "ComponentShape", "component_shape",
    "WindowError", "vertex_name", "arrow_name",
]


class WindowError(ValueError):
    """A computation needed levels outside the window."""


def signed_weight(w: Walk) -> int:
    """Number of direct letters minus number of inverse letters."""
    return sum(d for _, d in w.letters)


@dataclass(frozen=True)
class Potentials:
    base: str
    delta: dict[str, int]
    tree_walk: dict[str, Walk]
    non_tree: tuple[Arrow, ...]


def potentials(q: Quiver, base: str | None = None) -> Potentials:
    """Level potentials from a breadth-first spanning tree rooted at ``base``.

    Crossing an arrow in its own direction raises the potential by one.
    """
    if not q.is_connected():
        raise ValueError("potentials need a connected quiver")
    base = min(q.vertices) if base is None else base
    delta = {base: 0}
    tree_walk = {base: Walk(base)}
    used = set()
    letters = defaultdict(list)
    for a in q.sorted_arrows():
        letters[a.src].append((a, DIRECT, a.tgt))
        if not a.is_loop:
            letters[a.tgt].append((a, INVERSE, a.src))
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for a, d, u in letters[v]:
            if u in delta:
                continue
            delta[u] = delta[v] + d
            tree_walk[u] = Walk(base, tree_walk[v].letters + ((a.id, d),))
            used.add(a.id)
            queue.append(u)
    non_tree = tuple(a for a in q.sorted_arrows() if a.id not in used)
    return Potentials(base, delta, tree_walk, non_tree)


@dataclass(frozen=True)
class EpsilonReport:
    epsilon: int
    has_closed_walks: bool
    certificate: Walk | None
    note: str
    potentials: Potentials = field(repr=False, compare=False)

    def certificate_text(self) -> str:
        return str(self.certificate) if self.certificate is not None else self.note


def _xgcd_all(values: list[int]) -> tuple[int, list[int]]:
    """gcd of the values and integer coefficients realizing it."""
    g, coeffs = 0, []
    for v in values:
        # g' = s*g + t*v
        old_r, r = g, v
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def _fundamental_cycle(q: Quiver, pot: Potentials, a: Arrow) -> Walk:
    to_src = pot.tree_walk[a.src]
    back = pot.tree_walk[a.tgt].inverse(q)
    return Walk(pot.base, to_src.letters + ((a.id, DIRECT),) + back.letters)


def epsilon(q: Quiver, base: str | None = None) -> EpsilonReport:
    """epsilon(Q) as the gcd of the fundamental cycle weights.

    Every closed walk weight is an integer combination of the weights of the
    fundamental cycles of a spanning tree, so the least positive weight is
    their gcd (0 when all vanish or there are no cycles).
    """
    pot = potentials(q, base)
    cycles = [_fundamental_cycle(q, pot, a) for a in pot.non_tree]
    weights = [pot.delta[a.src] + 1 - pot.delta[a.tgt] for a in pot.non_tree]
    g, coeffs = _xgcd_all(weights)
    if not cycles:
        return EpsilonReport(0, False, None, "no closed walks", pot)
    if g == 0:
        return EpsilonReport(0, True, None, "balanced cycles", pot)
    letters: tuple = ()
    for c, k in zip(cycles, coeffs):
        if k:
            letters += c.power(k, q).letters
    cert = Walk(pot.base, letters)
    if signed_weight(cert) < 0:
        cert = cert.inverse(q)
    return EpsilonReport(g, True, cert, f"closed walk of weight {g}", pot)


def epsilon_bruteforce(q: Quiver, max_len: int) -> int:
    """Least positive |weight| over nonempty closed walks of length <= max_len.

    Computed by a reachability sweep over (vertex, weight) pairs, which visits
    every walk of each length; 0 when no closed walk has nonzero weight.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    idx = {v: i for i, v in enumerate(q.vertices)}
    masks = kernels.closed_walk_weight_masks(
        len(q.vertices), [idx[a.src] for a in q.arrows], [idx[a.tgt] for a in q.arrows], max_len)
    best = 0
    for m in masks:
        for w in range(1, max_len + 1):
            if (m >> (max_len + w)) & 1 or (m >> (max_len - w)) & 1:
                best = w if best == 0 else min(best, w)
                break
    return best


def satisfies_walk_condition(q: Quiver) -> bool:
    return epsilon(q).epsilon == 0


# ---------------------------------------------------------------- windows

def vertex_name(x: str, i: int) -> str:
    return f"{x}@{i}"


def arrow_name(alpha: str, i: int) -> str:
    return f"{alpha}@{i}"


@dataclass(frozen=True)
class BoxWindow:
    """Levels lo..hi of the companion quiver of ``base``."""

    base: Quiver
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window {self.lo}..{self.hi}")

    @property
    def levels(self) -> range:
        return range(self.lo, self.hi + 1)

    @cached_property
    def vertices(self) -> tuple[tuple[str, int], ...]:
        return tuple((x, i) for i in self.levels for x in self.base.sorted_vertices())

    @cached_property
    def arrows(self) -> tuple[tuple[str, int], ...]:
        return tuple((a.id, i) for i in range(self.lo + 1, self.hi + 1)
                     for a in self.base.sorted_arrows())

    def source(self, arrow: tuple[str, int]) -> tuple[str, int]:
        alpha, i = arrow
        return (self.base.arrow(alpha).tgt, i)

    def target(self, arrow: tuple[str, int]) -> tuple[str, int]:
        alpha, i = arrow
        return (self.base.arrow(alpha).src, i - 1)

    def contains(self, vertex: tuple[str, int]) -> bool:
        return self.lo <= vertex[1] <= self.hi

    @cached_property
    def quiver(self) -> Quiver:
        """The window as an ordinary quiver with ids ``x@i`` and ``alpha@i``."""
        return Quiver(
            tuple(vertex_name(*v) for v in self.vertices),
            tuple(Arrow(arrow_name(*a), vertex_name(*self.source(a)), vertex_name(*self.target(a)))
                  for a in self.arrows))

    def widen(self, lo: int, hi: int) -> "BoxWindow":
        return BoxWindow(self.base, min(lo, self.lo), max(hi, self.hi))


def build_window(q: Quiver, lo: int, hi: int) -> BoxWindow:
    if lo > hi:
        raise ValueError(f"window bounds {lo}..{hi} are reversed")
    return BoxWindow(q, lo, hi)


def component_labels(w: BoxWindow, base_vertex: str | None = None) -> dict[tuple[str, int], int]:
    """Label of the companion-quiver component through each window vertex.

    Labels are ``j - delta(b)`` for the vertex ``(b, j)``, reduced modulo
    epsilon(Q) when it is positive.
    """
    rep = epsilon(w.base, base_vertex)
    delta = rep.potentials.delta
    e = rep.epsilon
    out = {}
    for b, j in w.vertices:
        lab = j - delta[b]
        out[(b, j)] = lab % e if e else lab
    return out


def window_components(w: BoxWindow) -> list[list[tuple[str, int]]]:
    """Connected components of the window itself (union-find on its arrows)."""
    parent = {v: v for v in w.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in w.arrows:
        r1, r2 = find(w.source(a)), find(w.target(a))
        if r1 != r2:
            parent[max(r1, r2, key=_vkey)] = min(r1, r2, key=_vkey)
    groups = defaultdict(list)
    for v in w.vertices:
        groups[find(v)].append(v)
    return sorted((sorted(g, key=_vkey) for g in groups.values()), key=lambda g: _vkey(g[0]))


def _vkey(v: tuple[str, int]):
    return (v[1], v[0])


@dataclass(frozen=True)
class ComponentShape:
    """Shape of the components of the companion quiver.

    ``kind`` is ``"opposite"`` (epsilon = 0: each component is a copy of the
    opposite quiver, ``vertex_map`` sends b to its level offset delta(b)) or
    ``"cover"`` (epsilon > 0: ``component`` is the piece of the component of
    the base vertex at level 0 inside ``window``, repeating with ``period``).
    """

    kind: str
    period: int
    vertex_map: dict[str, int] | None = None
    opposite: Quiver | None = None
    window: BoxWindow | None = None
    component: Quiver | None = None
    is_line: bool = False


def component_shape(q: Quiver) -> ComponentShape:
    rep = epsilon(q)
    delta = rep.potentials.delta
    if rep.epsilon == 0:
        return ComponentShape("opposite", 0, vertex_map=dict(sorted(delta.items())),
                              opposite=q.opposite())
    e = rep.epsilon
    span = len(q.vertices) + 2 * e
    win = BoxWindow(q, -span, span)
    labels = component_labels(win)
    keep = {vertex_name(*v) for v, lab in labels.items() if lab == 0}
    comp = win.quiver.full_subquiver(keep)
    degs = [comp.degree(v) for v in comp.vertices]
    is_line = max(degs, default=0) <= 2 and len(comp.arrows) < len(comp.vertices)
    return ComponentShape("cover", e, window=win, component=comp, is_line=is_line)
