"""Indecomposable objects of the bounded derived category within a window.

Every indecomposable is either a minimal bounded complex F(M) for an
indecomposable companion-quiver representation M, or beta(P) for such a
complex P whose kernel above the top level has infinite projective
dimension.  Two beta objects are identified when their minimal complexes
(P followed by the resolution of the kernel) agree; only the part of the
resolution below a level cap is compared, so the identification is
flagged as window-limited whenever a resolution had to be cut.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .box import BoxWindow
from .complexes import (Algebra, BetaObject, F_obj, ProjComplex, beta, beta_resolution, is_in_X,
                        vector_rank_key)
from .oracle import iso_in_homotopy
from .reps import BoxRep, Bounds, Enumeration, enumerate_indecomposables

__all__ = ["DerivedObject", "BetaClass", "DerivedEnumeration", "indec_derived_objects", "object_name"]


def object_name(M: BoxRep) -> str:
    """Display name of F(M) in terms of its family."""
    shift = "" if M.copy in (None, 0) else f"[{M.copy}]"
    if M.family == "band":
        m, lam = M.params
        return f"P•({m},{lam}){shift}"
    if M.family == "root":
        return f"F(ı(M{M.params[0]})){shift}"
    if M.family == "string":
        return f"F(ı(S[{M.params[0]}])){shift}"
    if M.family == "interval":
        return f"F(I[{' '.join(M.params)}])"
    return "F(M)"


@dataclass
class DerivedObject:
    complex: ProjComplex
    source: BoxRep
    name: str
    in_X: bool


@dataclass
class BetaClass:
    """A class of beta objects identified by their truncated resolutions."""

    representative: BetaObject
    representative_index: int
    members: list[int]
    resolution: ProjComplex
    window_limited: bool


@dataclass
class DerivedEnumeration:
    enumeration: Enumeration
    objects: list[DerivedObject]
    beta_classes: list[BetaClass]
    cap: int
    notes: list[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.objects) + len(self.beta_classes)


def indec_derived_objects(w: BoxWindow, bounds: Bounds | None = None,
                          depth: int | None = None) -> DerivedEnumeration:
    """Complexes F(M) over the enumerated M, plus one beta object per class.

    Resolutions of the attached kernels are computed up to level
    ``top + 1 + depth`` where top is the highest level reached by any
    enumerated complex (``depth`` defaults to the number of vertices plus one).
    """
    en = enumerate_indecomposables(w, bounds)
    q = w.base
    alg = Algebra(q)
    objects = []
    for M in en.objects:
        P = F_obj(M, alg)
        objects.append(DerivedObject(P, M, object_name(M), is_in_X(P)))
    depth = len(q.vertices) + 1 if depth is None else depth
    top = max((max(o.complex.levels) for o in objects if o.complex.levels), default=w.hi)
    cap = top + 1 + depth

    groups: dict[tuple, list[list]] = defaultdict(list)
    limited_any = False
    for i, o in enumerate(objects):
        if not o.in_X:
            continue
        b = beta(o.complex)
        R, limited = beta_resolution(b, cap)
        limited_any |= limited
        bucket = groups[vector_rank_key(R)]
        for cls in bucket:
            if iso_in_homotopy(cls[1], R).iso:
                cls[0].append((i, b, limited))
                break
        else:
            bucket.append([[(i, b, limited)], R])
    classes = []
    for bucket in groups.values():
        for members, R in bucket:
            i, b, _ = min(members, key=lambda m: vector_rank_key(objects[m[0]].complex))
            classes.append(BetaClass(b, i, sorted(m[0] for m in members), R,
                                     any(m[2] for m in members)))
    classes.sort(key=lambda c: vector_rank_key(objects[c.representative_index].complex))
    notes = []
    if limited_any:
        notes.append(f"beta identifications compare resolutions up to level {cap} only")
    return DerivedEnumeration(en, objects, classes, cap, notes)
