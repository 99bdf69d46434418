"""A catalog of small quivers covering every branch of the classification."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .quiver import Quiver, parse_quiver

__all__ = ["CatalogEntry", "CATALOG", "get"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    description: str

    @cached_property
    def quiver(self) -> Quiver:
        return parse_quiver(self.text)


def _path(n: int, zigzag: bool = False) -> str:
    vs = [chr(ord("a") + i) for i in range(n)]
    lines = ["vertex " + " ".join(vs)]
    for i in range(n - 1):
        s, t = (vs[i], vs[i + 1]) if not (zigzag and i % 2) else (vs[i + 1], vs[i])
        lines.append(f"arrow x{i + 1}: {s} -> {t}")
    return "\n".join(lines)


def _star(arms: tuple[int, ...], inward: bool = True) -> str:
    """Star with the given arm lengths; all arrows point toward (or away from) the center."""
    vs = ["c"]
    arrows = []
    k = 0
    for i, m in enumerate(arms):
        prev = "c"
        for j in range(m):
            v = f"{chr(ord('p') + i)}{j + 1}"
            vs.append(v)
            k += 1
            s, t = (v, prev) if inward else (prev, v)
            arrows.append(f"arrow y{k}: {s} -> {t}")
            prev = v
    return "\n".join(["vertex " + " ".join(vs)] + arrows)


def _cycle(orient: str) -> str:
    """Cycle on len(orient) vertices; '+' points to the next vertex, '-' back."""
    n = len(orient)
    vs = [chr(ord("a") + i) for i in range(n)]
    lines = ["vertex " + " ".join(vs)]
    for i, o in enumerate(orient):
        s, t = vs[i], vs[(i + 1) % n]
        if o == "-":
            s, t = t, s
        lines.append(f"arrow z{i + 1}: {s} -> {t}")
    return "\n".join(lines)


_ENTRIES = [
    ("A1", _path(1), "single vertex"),
    ("A2", _path(2), "a -> b"),
    ("A2op", "vertex a b\narrow x1: b -> a", "b -> a"),
    ("A3", _path(3), "linear"),
    ("A3zig", _path(3, True), "a -> b <- c"),
    ("A4", _path(4), "linear"),
    ("A4zig", _path(4, True), "alternating"),
    ("A5", _path(5), "linear"),
    ("A5zig", _path(5, True), "alternating"),
    ("D4", _star((1, 1, 1)), "three arms into the center"),
    ("D4out", _star((1, 1, 1), inward=False), "three arms out of the center"),
    ("D5", _star((1, 1, 2)), "arms 1, 1, 2"),
    ("D6", _star((1, 1, 3)), "arms 1, 1, 3"),
    ("E6", _star((1, 2, 2)), "arms 1, 2, 2"),
    ("E7", _star((1, 2, 3)), "arms 1, 2, 3"),
    ("E8", _star((1, 2, 4)), "arms 1, 2, 4"),
    ("Dt4", _star((1, 1, 1, 1)), "four arms of length 1"),
    ("Dt5", "vertex a b c d u v\narrow x1: a -> u\narrow x2: b -> u\narrow x3: u -> v\n"
            "arrow x4: c -> v\narrow x5: d -> v", "two branch points"),
    ("Et6", _star((2, 2, 2)), "arms 2, 2, 2"),
    ("Et7", _star((1, 3, 3)), "arms 1, 3, 3"),
    ("Et8", _star((1, 2, 5)), "arms 1, 2, 5"),
    ("loop", "vertex a\narrow x: a -> a", "one loop, k[x]/x^2"),
    ("kronecker", "vertex a b\narrow x: a -> b\narrow y: a -> b", "two parallel arrows"),
    ("cycle2", "vertex a b\narrow x: a -> b\narrow y: b -> a", "oriented 2-cycle"),
    ("cycle3", _cycle("+++"), "oriented 3-cycle"),
    ("cycle3mixed", _cycle("++-"), "3-cycle with one reversed arrow"),
    ("cycle4", _cycle("++++"), "oriented 4-cycle"),
    ("cycle4balanced", _cycle("+-+-"), "4-cycle, alternating orientation"),
    ("cycle4twobytwo", _cycle("++--"), "4-cycle, two arrows each way"),
    ("cycle4threeone", _cycle("+++-"), "4-cycle, three arrows one way"),
    ("triple", "vertex a b\narrow x: a -> b\narrow y: a -> b\narrow z: a -> b", "three parallel arrows"),
    ("cyclechord", _cycle("++++") + "\narrow w: a -> c", "4-cycle with a chord"),
    ("loopplus", "vertex a b\narrow x: a -> a\narrow y: a -> b", "loop with an extra arrow"),
    ("twoloops", "vertex a\narrow x: a -> a\narrow y: a -> a", "two loops"),
    ("star5", _star((1, 1, 1, 1, 1)), "five arms of length 1"),
    ("T233", _star((2, 3, 3)), "tree with arms 2, 3, 3"),
    ("A3+kronecker", _path(3) + "\nvertex k l\narrow k1: k -> l\narrow k2: k -> l",
     "disconnected"),
]

CATALOG: tuple[CatalogEntry, ...] = tuple(CatalogEntry(*e) for e in _ENTRIES)


def get(name: str) -> CatalogEntry:
    for e in CATALOG:
        if e.name == name:
            return e
    raise KeyError(name)
