"""Finite quivers, walks, and recognition of Dynkin and Euclidean shapes."""
from __future__ import annotations

import enum
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "Arrow", "Quiver", "Walk", "QuiverParseError", "ShapeTag", "GraphShape",
    "parse_quiver", "format_quiver", "connected_components", "recognize_shape",
    "closed_walks_upto", "DIRECT", "INVERSE",
]

DIRECT = 1
INVERSE = -1


class QuiverParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str

    @property
    def is_loop(self) -> bool:
        return self.src == self.tgt


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()
    _arrow_index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            dup = [v for v, c in Counter(self.vertices).items() if c > 1]
            raise ValueError(f"duplicate vertex id {dup[0]!r}")
        vs = set(self.vertices)
        index = {}
        for a in self.arrows:
            if a.id in index:
                raise ValueError(f"duplicate arrow id {a.id!r}")
            for end in (a.src, a.tgt):
                if end not in vs:
                    raise ValueError(f"arrow {a.id!r} has undeclared endpoint {end!r}")
            index[a.id] = a
        object.__setattr__(self, "_arrow_index", index)

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]],
                   prefix: str = "x") -> "Quiver":
        """Quiver with arrows named ``prefix0, prefix1, ...`` in edge order."""
        return cls(tuple(vertices), tuple(Arrow(f"{prefix}{i}", s, t)
                                          for i, (s, t) in enumerate(edges)))

    def arrow(self, arrow_id: str) -> Arrow:
        return self._arrow_index[arrow_id]

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def arrows_to(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.tgt == v]

    def arrows_between(self, x: str, y: str) -> list[Arrow]:
        """The arrows from x to y."""
        return [a for a in self.arrows if a.src == x and a.tgt == y]

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_arrows(self) -> list[Arrow]:
        return sorted(self.arrows, key=lambda a: a.id)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.id, a.tgt, a.src) for a in self.arrows))

    def full_subquiver(self, vertices: Iterable[str]) -> "Quiver":
        keep = set(vertices)
        return Quiver(tuple(v for v in self.vertices if v in keep),
                      tuple(a for a in self.arrows if a.src in keep and a.tgt in keep))

    def degree(self, v: str) -> int:
        # a loop contributes 2
        return sum((a.src == v) + (a.tgt == v) for a in self.arrows)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def has_loops(self) -> bool:
        return any(a.is_loop for a in self.arrows)

    def has_oriented_cycle(self) -> bool:
        return bool(self.vertices_on_oriented_cycles())

    def vertices_on_oriented_cycles(self) -> set[str]:
        """Vertices lying on some directed cycle (a loop counts)."""
        succ = defaultdict(set)
        for a in self.arrows:
            succ[a.src].add(a.tgt)
        on = set()
        for v in self.vertices:
            seen, stack = set(), list(succ[v])
            while stack:
                u = stack.pop()
                if u == v:
                    on.add(v)
                    break
                if u not in seen:
                    seen.add(u)
                    stack.extend(succ[u])
        return on

    def reachable_from(self, v: str) -> set[str]:
        """Vertices reachable from v by a directed path (v included)."""
        succ = defaultdict(list)
        for a in self.arrows:
            succ[a.src].append(a.tgt)
        seen, stack = {v}, [v]
        while stack:
            for u in succ[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen


# ---------------------------------------------------------------- text format

_ID = r"[A-Za-z0-9_.'\-]+"
_VERTEX_RE = re.compile(rf"^vertex\s+({_ID}(?:\s+{_ID})*)$")
_ARROW_RE = re.compile(rf"^arrow\s+({_ID})\s*:\s*({_ID})\s*->\s*({_ID})$")


def parse_quiver(text: str) -> Quiver:
    """Parse the line-oriented quiver format.

    ``vertex <id> [<id> ...]`` declares vertices and ``arrow <id>: <src> -> <tgt>``
    declares an arrow; ``#`` starts a comment and ``;`` separates statements on
    one line.  Errors carry the offending line number.
    """
    vertices: list[str] = []
    arrows: list[Arrow] = []
    arrow_lines: list[int] = []
    seen_v: set[str] = set()
    seen_a: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            m = _VERTEX_RE.match(stmt)
            if m:
                for v in m.group(1).split():
                    if v in seen_v:
                        raise QuiverParseError(f"duplicate vertex id {v!r}", lineno)
                    seen_v.add(v)
                    vertices.append(v)
                continue
            m = _ARROW_RE.match(stmt)
            if m:
                aid, s, t = m.groups()
                if aid in seen_a:
                    raise QuiverParseError(f"duplicate arrow id {aid!r}", lineno)
                seen_a.add(aid)
                arrows.append(Arrow(aid, s, t))
                arrow_lines.append(lineno)
                continue
            raise QuiverParseError(f"cannot parse statement {stmt!r}", lineno)
    if not vertices:
        raise QuiverParseError("empty vertex set", None)
    for a, lineno in zip(arrows, arrow_lines):
        for end in (a.src, a.tgt):
            if end not in seen_v:
                raise QuiverParseError(f"undeclared endpoint {end}", lineno)
    return Quiver(tuple(vertices), tuple(arrows))


def format_quiver(q: Quiver) -> str:
    lines = ["vertex " + " ".join(q.vertices)]
    lines += [f"arrow {a.id}: {a.src} -> {a.tgt}" for a in q.arrows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- walks

@dataclass(frozen=True)
class Walk:
    """A walk: a start vertex and letters ``(arrow id, DIRECT | INVERSE)``."""

    start: str
    letters: tuple[tuple[str, int], ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def vertices(self, q: Quiver) -> list[str]:
        """The visited vertices, start included; raises if letters do not compose."""
        out = [self.start]
        cur = self.start
        for aid, d in self.letters:
            a = q.arrow(aid)
            s, t = (a.src, a.tgt) if d == DIRECT else (a.tgt, a.src)
            if s != cur:
                raise ValueError(f"letter {aid}{'' if d == DIRECT else '^-1'} does not start at {cur}")
            cur = t
            out.append(cur)
        return out

    def end(self, q: Quiver) -> str:
        return self.vertices(q)[-1]

    def is_closed(self, q: Quiver) -> bool:
        return self.end(q) == self.start

    def inverse(self, q: Quiver) -> "Walk":
        return Walk(self.end(q), tuple((aid, -d) for aid, d in reversed(self.letters)))

    def then(self, other: "Walk") -> "Walk":
        return Walk(self.start, self.letters + other.letters)

    def power(self, k: int, q: Quiver) -> "Walk":
        base = self if k >= 0 else self.inverse(q)
        return Walk(self.start, base.letters * abs(k))

    def __str__(self) -> str:
        if not self.letters:
            return f"e_{self.start}"
        return " ".join(aid if d == DIRECT else f"{aid}^-1" for aid, d in self.letters)


def _letters_at(q: Quiver) -> dict[str, list[tuple[str, int, str]]]:
    out: dict[str, list] = defaultdict(list)
    for a in q.sorted_arrows():
        out[a.src].append((a.id, DIRECT, a.tgt))
        out[a.tgt].append((a.id, INVERSE, a.src))
    for v in out:
        out[v].sort()
    return out


def closed_walks_upto(q: Quiver, max_len: int) -> Iterator[Walk]:
    """All nonempty closed walks of length <= max_len, unreduced.

    Order: by start vertex id, then length, then letters (arrow id, direction).
    """
    letters = _letters_at(q)

    def extend(start, cur, acc, n):
        if len(acc) == n:
            if cur == start:
                yield Walk(start, acc)
            return
        for aid, d, nxt in letters.get(cur, ()):
            yield from extend(start, nxt, acc + ((aid, d),), n)

    for s in q.sorted_vertices():
        for n in range(1, max_len + 1):
            yield from extend(s, s, (), n)


# ---------------------------------------------------------------- components

def connected_components(q: Quiver) -> list[tuple[str, ...]]:
    """Vertex sets of the connected components of the underlying graph,
    each sorted by id, ordered by least id."""
    parent = {v: v for v in q.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in q.arrows:
        ra, rb = find(a.src), find(a.tgt)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = defaultdict(list)
    for v in q.vertices:
        groups[find(v)].append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


# ---------------------------------------------------------------- shapes

class ShapeTag(enum.Enum):
    A = "A"
    D = "D"
    E = "E"
    A_CYCLE = "Atilde"
    D_TILDE = "Dtilde"
    E_TILDE = "Etilde"
    OTHER = "Other"

    @property
    def is_dynkin(self) -> bool:
        return self in (ShapeTag.A, ShapeTag.D, ShapeTag.E)

    @property
    def is_euclidean(self) -> bool:
        return self in (ShapeTag.A_CYCLE, ShapeTag.D_TILDE, ShapeTag.E_TILDE)


@dataclass(frozen=True)
class GraphShape:
    """Shape of an underlying multigraph.

    ``n`` is the usual subscript: A_n, D_n, E_n, D~_n, E~_n.  For cycles
    ``cycle_length`` is the number of vertices on the cycle and ``n`` is
    ``cycle_length - 1`` (so a loop is A~_0 and a double edge A~_1).
    """

    tag: ShapeTag
    n: int | None = None
    cycle_length: int | None = None
    reason: str = ""

    @property
    def name(self) -> str:
        if self.tag is ShapeTag.OTHER:
            return "Other"
        return f"{self.tag.value}{self.n}"

    @property
    def is_tree(self) -> bool:
        return self.tag in (ShapeTag.A, ShapeTag.D, ShapeTag.E, ShapeTag.D_TILDE, ShapeTag.E_TILDE)

    def params(self) -> dict:
        out = {"n": self.n}
        if self.cycle_length is not None:
            out["cycle_length"] = self.cycle_length
        return out


_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}
_ETILDE_ARMS = {(2, 2, 2): 6, (1, 3, 3): 7, (1, 2, 5): 8}


def _adjacency(q: Quiver) -> dict[str, list[str]]:
    adj = defaultdict(list)
    for a in q.arrows:
        adj[a.src].append(a.tgt)
        if not a.is_loop:
            adj[a.tgt].append(a.src)
        else:
            adj[a.src].append(a.src)
    return adj


def _arm_length(adj, branch: str, first: str, stop: set[str]) -> int | None:
    """Number of vertices along a branch-free arm starting at ``first``;
    None if the arm runs into another vertex of ``stop``."""
    prev, cur, n = branch, first, 0
    while True:
        if cur in stop:
            return None
        n += 1
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            return n
        prev, cur = cur, nxt[0]


def recognize_shape(q: Quiver) -> GraphShape:
    """Identify the underlying multigraph of a connected quiver."""
    if not q.is_connected():
        raise ValueError("recognize_shape needs a connected quiver")
    nv, ne = len(q.vertices), len(q.arrows)
    adj = _adjacency(q)
    deg = {v: q.degree(v) for v in q.vertices}
    if ne == nv:
        if all(d == 2 for d in deg.values()):
            return GraphShape(ShapeTag.A_CYCLE, nv - 1, nv)
        return GraphShape(ShapeTag.OTHER, reason="cycle with an attached tree")
    if ne > nv:
        return GraphShape(ShapeTag.OTHER, reason="more than one independent cycle")
    # ne == nv - 1 and connected: a tree
    branch = sorted(v for v, d in deg.items() if d >= 3)
    if not branch:
        return GraphShape(ShapeTag.A, nv)
    if len(branch) == 1:
        b = branch[0]
        arms = sorted(_arm_length(adj, b, u, set()) for u in adj[b])
        if len(arms) == 3:
            t = tuple(arms)
            if t[0] == t[1] == 1:
                return GraphShape(ShapeTag.D, nv)
            if t in _E_ARMS:
                return GraphShape(ShapeTag.E, _E_ARMS[t])
            if t in _ETILDE_ARMS:
                return GraphShape(ShapeTag.E_TILDE, _ETILDE_ARMS[t])
            return GraphShape(ShapeTag.OTHER, reason=f"star with arms {t}")
        if arms == [1, 1, 1, 1]:
            return GraphShape(ShapeTag.D_TILDE, 4)
        return GraphShape(ShapeTag.OTHER, reason=f"vertex of degree {len(arms)}")
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        stop = set(branch)
        for b in branch:
            leaves = [_arm_length(adj, b, u, stop) for u in adj[b]]
            if sorted(x for x in leaves if x is not None) != [1, 1]:
                return GraphShape(ShapeTag.OTHER, reason="two branch points with long arms")
        return GraphShape(ShapeTag.D_TILDE, nv - 1)
    return GraphShape(ShapeTag.OTHER, reason=f"{len(branch)} branch points")
