"""Quiver representations over an exact field.

Besides plain representations this module builds indecomposables: reflection
functors for real roots of tree (and balanced cycle) quivers, string and band
modules, and representations of the companion quiver together with the
morphisms used to compare them with homotopy classes of chain maps.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg
from .box import BoxWindow, WindowError, arrow_name, epsilon, vertex_name, window_components
from .finite_algebra import FiniteAlgebra
from .linalg import Field
from .quiver import DIRECT, Arrow, Quiver, ShapeTag, Walk, connected_components, recognize_shape

__all__ = [
    "Representation", "RepHom", "IsoResult", "hom_space", "end_algebra",
    "is_indecomposable_rep", "iso_check", "rep_equal_upto_iso", "rep_direct_sum",
    "tits_form", "PositiveRoot", "positive_roots", "sigma", "reflect_at_sink",
    "reflect_at_source", "construct_for_root", "indecomposable_for_root",
    "RootConstructionError", "string_module", "band_module", "reduced_walks",
    "BoxRep", "BoxMorphism", "BoxHom", "box_hom", "Bounds", "Enumeration",
    "enumerate_indecomposables", "WildInputError",
]

Matrix = tuple[tuple, ...]


def _freeze(rows, nr: int, nc: int, F: Field, what: str) -> Matrix:
    rows = list(rows)
    if len(rows) != nr or any(len(r) != nc for r in rows):
        raise ValueError(f"{what}: expected a {nr}x{nc} matrix")
    return tuple(tuple(F(v) for v in r) for r in rows)


def _zero(nr: int, nc: int, F: Field) -> Matrix:
    z = F.zero()
    return tuple((z,) * nc for _ in range(nr))


def _ident(n: int, F: Field) -> Matrix:
    return tuple(tuple(F.one() if i == j else F.zero() for j in range(n)) for i in range(n))


# ---------------------------------------------------------------- representations

class Representation:
    """A representation of ``quiver``: a space of dimension ``dims[v]`` at each
    vertex and a ``dims[tgt] x dims[src]`` matrix for each arrow."""

    __slots__ = ("quiver", "dims", "mats", "field")

    def __init__(self, quiver: Quiver, dims: Mapping[str, int],
                 mats: Mapping[str, Sequence[Sequence]] | None = None,
                 field: Field | None = None):
        F = linalg.get_field() if field is None else field
        unknown = set(dims) - set(quiver.vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        d = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        if any(n < 0 for n in d.values()):
            raise ValueError("dimensions must be nonnegative")
        mats = dict(mats or {})
        unknown = set(mats) - {a.id for a in quiver.arrows}
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        m = {}
        for a in quiver.arrows:
            nr, nc = d[a.tgt], d[a.src]
            m[a.id] = _freeze(mats[a.id], nr, nc, F, f"arrow {a.id}") if a.id in mats \
                else _zero(nr, nc, F)
        self.quiver, self.dims, self.mats, self.field = quiver, d, m, F

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(v for v in self.quiver.vertices if self.dims[v])

    def _key(self):
        return (self.quiver, self.dim_vector(), tuple(self.mats[a.id] for a in self.quiver.arrows))

    def __eq__(self, other) -> bool:
        return isinstance(other, Representation) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        dims = ", ".join(f"{v}:{n}" for v, n in self.dims.items() if n)
        return f"Representation({{{dims}}})"

    def is_zero(self) -> bool:
        return self.total_dim == 0


def rep_direct_sum(a: Representation, b: Representation) -> Representation:
    if a.quiver != b.quiver:
        raise ValueError("representations of different quivers")
    F = a.field
    dims = {v: a.dims[v] + b.dims[v] for v in a.quiver.vertices}
    mats = {}
    for arr in a.quiver.arrows:
        mats[arr.id] = linalg.block_diag([
            (a.mats[arr.id], a.dims[arr.tgt], a.dims[arr.src]),
            (b.mats[arr.id], b.dims[arr.tgt], b.dims[arr.src])], F)
    return Representation(a.quiver, dims, mats, F)


# ---------------------------------------------------------------- Hom and End

@dataclass
class RepHom:
    """Basis of Hom(source, target); morphisms are ``{vertex: matrix}``."""

    source: Representation
    target: Representation
    basis: list[dict[str, Matrix]]
    vectors: list[list]
    free: list[int]
    offsets: dict[str, int]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs: Sequence) -> dict[str, Matrix]:
        F = self.source.field
        n = sum(self.target.dims[v] * self.source.dims[v] for v in self.offsets)
        vec = [F.zero()] * n
        for c, b in zip(coeffs, self.vectors):
            if c:
                for j, x in enumerate(b):
                    if x:
                        vec[j] = F.norm(vec[j] + c * x)
        return self._decode(vec)

    def _decode(self, vec) -> dict[str, Matrix]:
        out = {}
        for v, off in self.offsets.items():
            r, c = self.target.dims[v], self.source.dims[v]
            out[v] = tuple(tuple(vec[off + i * c + j] for j in range(c)) for i in range(r))
        return out


def hom_space(M: Representation, N: Representation) -> RepHom:
    """All families ``f_v: M(v) -> N(v)`` with ``N_a f_s = f_t M_a`` for every arrow."""
    if M.quiver != N.quiver:
        raise ValueError("representations of different quivers")
    F = M.field
    offs, n = {}, 0
    for v in M.quiver.vertices:
        offs[v] = n
        n += N.dims[v] * M.dims[v]
    rows = []
    for a in M.quiver.arrows:
        s, t = a.src, a.tgt
        Na, Ma = N.mats[a.id], M.mats[a.id]
        ms, mt, ns = M.dims[s], M.dims[t], N.dims[s]
        for i in range(N.dims[t]):
            for j in range(ms):
                row: dict[int, object] = defaultdict(F.zero)
                for k in range(ns):
                    if Na[i][k]:
                        row[offs[s] + k * ms + j] += Na[i][k]
                for k in range(mt):
                    if Ma[k][j]:
                        row[offs[t] + i * mt + k] -= Ma[k][j]
                row = {c: F.norm(x) for c, x in row.items() if F.norm(x)}
                if row:
                    rows.append(row)
    vectors, free = linalg.kernel(rows, n, F)
    hom = RepHom(M, N, [], vectors, free, offs)
    hom.basis = [hom._decode(v) for v in vectors]
    return hom


def end_algebra(M: Representation) -> FiniteAlgebra:
    """End(M) with structure constants from composition of Hom basis elements."""
    H = hom_space(M, M)
    F = M.field
    table = []
    for f in H.basis:
        row = []
        for g in H.basis:
            comp = {v: linalg.matmul(f[v], g[v], M.dims[v], M.dims[v], F) for v in H.offsets}
            vec = {}
            for v, off in H.offsets.items():
                d = M.dims[v]
                for i in range(d):
                    for j in range(d):
                        vec[off + i * d + j] = comp[v][i][j]
            flat = [vec.get(c, F.zero()) for c in H.free]
            row.append(flat)
        table.append(row)
    return FiniteAlgebra(table, F)


def is_indecomposable_rep(M: Representation) -> bool:
    return M.total_dim > 0 and end_algebra(M).is_local()


@dataclass(frozen=True)
class IsoResult:
    iso: bool
    certified: bool
    reason: str

    def __bool__(self) -> bool:
        return self.iso


def _random_coeffs(rng: random.Random, k: int, F: Field) -> list:
    if F.p:
        return [rng.randrange(F.p) for _ in range(k)]
    return [F(rng.randint(-10 ** 6, 10 ** 6)) for _ in range(k)]


def iso_check(M: Representation, N: Representation, seed: int = 0, tries: int = 8,
              exhaustive_budget: int = 20_000) -> IsoResult:
    """Decide M ~ N by searching Hom(M, N) for an invertible element."""
    if M.quiver != N.quiver:
        raise ValueError("representations of different quivers")
    if M.dim_vector() != N.dim_vector():
        return IsoResult(False, True, "dimension vectors differ")
    if M.total_dim == 0:
        return IsoResult(True, True, "both zero")
    H = hom_space(M, N)
    if H.dim == 0:
        return IsoResult(False, True, "no nonzero morphisms")
    if H.dim != hom_space(M, M).dim or H.dim != hom_space(N, N).dim:
        return IsoResult(False, True, "Hom dimensions differ")
    F = M.field

    def invertible(f):
        return all(linalg.det(f[v], F) for v in M.quiver.vertices if M.dims[v])

    rng = random.Random(seed)
    for _ in range(tries):
        if invertible(H.combine(_random_coeffs(rng, H.dim, F))):
            return IsoResult(True, True, "invertible intertwiner")
    if F.p and F.p ** H.dim <= exhaustive_budget:
        for c in itertools.product(range(F.p), repeat=H.dim):
            if invertible(H.combine(c)):
                return IsoResult(True, True, "invertible intertwiner")
        return IsoResult(False, True, "exhaustive search found no invertible intertwiner")
    return IsoResult(False, False, "no invertible intertwiner among random samples")


def rep_equal_upto_iso(a: Representation, b: Representation, seed: int = 0) -> bool:
    return iso_check(a, b, seed).iso


# ---------------------------------------------------------------- roots

def tits_form(q: Quiver, d: Mapping[str, int]) -> int:
    return sum(d[v] ** 2 for v in q.vertices) - sum(d[a.src] * d[a.tgt] for a in q.arrows)


@dataclass(frozen=True, order=True)
class PositiveRoot:
    vector: tuple[int, ...]
    vertices: tuple[str, ...] = field(compare=False)
    real: bool = field(default=True, compare=False)

    @property
    def total(self) -> int:
        return sum(self.vector)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.vector))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.vector)) + ")"


def _check_root_quiver(q: Quiver) -> ShapeTag:
    if not q.is_connected():
        raise ValueError("root systems need a connected quiver")
    if q.has_loops():
        raise ValueError("root systems need a loop-free quiver")
    tag = recognize_shape(q).tag
    if not (tag.is_dynkin or tag.is_euclidean):
        raise ValueError(f"{recognize_shape(q).name} is neither Dynkin nor Euclidean")
    return tag


def _pairing(q: Quiver, d: Sequence[int], k: int, idx: dict[str, int]) -> int:
    """Symmetric form (d, e_k)."""
    out = 2 * d[k]
    v = q.vertices[k]
    for a in q.arrows:
        if a.src == v:
            out -= d[idx[a.tgt]]
        if a.tgt == v:
            out -= d[idx[a.src]]
    return out


def _null_root(q: Quiver) -> tuple[int, ...]:
    """Primitive positive generator of the radical of the Tits form."""
    idx = {v: i for i, v in enumerate(q.vertices)}
    n = len(q.vertices)
    cartan = [[_pairing(q, [1 if j == k else 0 for j in range(n)], i, idx) for k in range(n)]
              for i in range(n)]
    (v,) = linalg.nullspace(cartan, n, linalg.QQ)
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def positive_roots(q: Quiver, dim_bound: int | None = None) -> list[PositiveRoot]:
    """Positive roots by closing the simple roots under simple reflections.

    Dynkin quivers get the full finite set and ``dim_bound`` is ignored.
    Euclidean quivers need ``dim_bound``; the imaginary roots ``m delta``
    within it are included with ``real=False``.
    """
    tag = _check_root_quiver(q)
    finite = tag.is_dynkin
    if not finite and dim_bound is None:
        raise ValueError("Euclidean root systems are infinite; give dim_bound")
    idx = {v: i for i, v in enumerate(q.vertices)}
    n = len(q.vertices)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for d in frontier:
            for k in range(n):
                c = _pairing(q, d, k, idx)
                if c >= 0:
                    continue
                r = tuple(x - c if j == k else x for j, x in enumerate(d))
                if r in seen or (not finite and sum(r) > dim_bound):
                    continue
                seen.add(r)
                nxt.append(r)
        frontier = nxt
    roots = [PositiveRoot(d, q.vertices, True) for d in seen]
    if not finite:
        delta = _null_root(q)
        m = 1
        while m * sum(delta) <= dim_bound:
            roots.append(PositiveRoot(tuple(m * x for x in delta), q.vertices, False))
            m += 1
    return sorted(roots, key=lambda r: (r.total, r.vector))


# ---------------------------------------------------------------- reflections

def sigma(q: Quiver, k: str) -> Quiver:
    """Reverse every arrow at k."""
    arrows = tuple(Arrow(a.id, a.tgt, a.src) if k in (a.src, a.tgt) else a for a in q.arrows)
    return Quiver(q.vertices, arrows)


def _is_sink(q: Quiver, v: str) -> bool:
    return not q.arrows_from(v)


def _is_source(q: Quiver, v: str) -> bool:
    return not q.arrows_to(v)


def reflect_at_sink(M: Representation, k: str) -> Representation:
    """The reflection functor at a sink k: the new space at k is the kernel of
    the sum of the incoming maps."""
    q = M.quiver
    if not _is_sink(q, k) or q.has_loops():
        raise ValueError(f"{k} is not a sink")
    F = M.field
    inc = sorted(q.arrows_to(k), key=lambda a: a.id)
    width = sum(M.dims[a.src] for a in inc)
    h = [[x for a in inc for x in M.mats[a.id][i]] for i in range(M.dims[k])]
    K = linalg.nullspace(h, width, F)
    dims = dict(M.dims)
    dims[k] = len(K)
    mats = {a.id: M.mats[a.id] for a in q.arrows if a not in inc}
    off = 0
    for a in inc:
        d = M.dims[a.src]
        mats[a.id] = [[K[c][off + r] for c in range(len(K))] for r in range(d)]
        off += d
    return Representation(sigma(q, k), dims, mats, F)


def reflect_at_source(M: Representation, k: str) -> Representation:
    """The reflection functor at a source k: the new space at k is the cokernel
    of the stacked outgoing maps."""
    q = M.quiver
    if not _is_source(q, k) or q.has_loops():
        raise ValueError(f"{k} is not a source")
    F = M.field
    out = sorted(q.arrows_from(k), key=lambda a: a.id)
    height = sum(M.dims[a.tgt] for a in out)
    g = [row for a in out for row in M.mats[a.id]]
    gt = linalg.transpose(g, M.dims[k]) if M.dims[k] else []
    C = linalg.nullspace(gt, height, F)
    dims = dict(M.dims)
    dims[k] = len(C)
    mats = {a.id: M.mats[a.id] for a in q.arrows if a not in out}
    off = 0
    for a in out:
        d = M.dims[a.tgt]
        mats[a.id] = [[C[r][off + c] for c in range(d)] for r in range(len(C))]
        off += d
    return Representation(sigma(q, k), dims, mats, F)


class RootConstructionError(RuntimeError):
    pass


def _reflect_vector(q: Quiver, d: dict[str, int], k: str) -> dict[str, int]:
    c = 2 * d[k]
    for a in q.arrows:
        if a.src == k:
            c -= d[a.tgt]
        if a.tgt == k:
            c -= d[a.src]
    out = dict(d)
    out[k] -= c
    return out


def _bgp(q: Quiver, d: dict[str, int], mode: str, F: Field) -> Representation | None:
    """Carry d to a simple root through sink (or source) reflections, then
    undo them on the simple representation."""
    pick = _is_sink if mode == "sink" else _is_source
    cur_q, cur = q, dict(d)
    steps = []
    limit = len(q.vertices) * (2 * sum(d.values()) + 3)
    for _ in range(limit):
        k = min(v for v in cur_q.vertices if pick(cur_q, v))
        if cur[k] == 1 and sum(cur.values()) == 1:
            M = Representation(cur_q, {k: 1}, field=F)
            for s in reversed(steps):
                M = reflect_at_source(M, s) if mode == "sink" else reflect_at_sink(M, s)
            return M
        steps.append(k)
        cur = _reflect_vector(cur_q, cur, k)
        cur_q = sigma(cur_q, k)
        if min(cur.values()) < 0:
            return None
    return None


def _random_rep(q: Quiver, d: dict[str, int], rng: random.Random, F: Field) -> Representation:
    mats = {a.id: [[F(rng.randint(-2, 2)) for _ in range(d[a.src])] for _ in range(d[a.tgt])]
            for a in q.arrows}
    return Representation(q, d, mats, F)


def _ext_middle(X: Representation, Y: Representation, rng: random.Random) -> Representation:
    """A random extension 0 -> Y -> E -> X -> 0 (block upper triangular)."""
    F = X.field
    q = X.quiver
    dims = {v: Y.dims[v] + X.dims[v] for v in q.vertices}
    mats = {}
    for a in q.arrows:
        ys, yt, xs, xt = Y.dims[a.src], Y.dims[a.tgt], X.dims[a.src], X.dims[a.tgt]
        m = linalg.zeros(yt + xt, ys + xs, F)
        for i in range(yt):
            for j in range(ys):
                m[i][j] = Y.mats[a.id][i][j]
            for j in range(xs):
                m[i][ys + j] = F(rng.randint(-3, 3))
        for i in range(xt):
            for j in range(xs):
                m[yt + i][ys + j] = X.mats[a.id][i][j]
        mats[a.id] = m
    return Representation(q, dims, mats, F)


def construct_for_root(q: Quiver, d: PositiveRoot | Mapping[str, int], seed: int = 0,
                       depth: int = 2) -> tuple[Representation, str]:
    """An indecomposable with dimension vector d and the method that found it.

    Tried in order: reflection functors (sinks, then sources), a random search
    for a representation with one-dimensional End, and random extensions of
    indecomposables of smaller roots.
    """
    vec = d.as_dict() if isinstance(d, PositiveRoot) else {v: int(d.get(v, 0)) for v in q.vertices}
    if tits_form(q, vec) != 1 or min(vec.values()) < 0:
        raise ValueError(f"{vec} is not a real positive root")
    F = linalg.get_field()
    for mode in ("sink", "source"):
        M = _bgp(q, vec, mode, F)
        if M is not None and M.quiver == q and M.dims == vec:
            return M, f"reflection-{mode}"
    rng = random.Random(seed)
    for _ in range(12):
        M = _random_rep(q, vec, rng, F)
        if hom_space(M, M).dim == 1:
            return M, "brick-search"
    if depth > 0:
        for r in positive_roots(q, sum(vec.values())):
            a = r.as_dict()
            b = {v: vec[v] - a[v] for v in q.vertices}
            if not r.real or a == vec or min(b.values()) < 0 or tits_form(q, b) != 1:
                continue
            try:
                X, _ = construct_for_root(q, a, seed, depth - 1)
                Y, _ = construct_for_root(q, b, seed, depth - 1)
            except RootConstructionError:
                continue
            for _ in range(4):
                E = _ext_middle(X, Y, rng)
                if is_indecomposable_rep(E):
                    return E, "extension-search"
    raise RootConstructionError(f"no indecomposable found for root {vec}")


def indecomposable_for_root(q: Quiver, d: PositiveRoot | Mapping[str, int],
                            seed: int = 0) -> Representation:
    return construct_for_root(q, d, seed)[0]


# ---------------------------------------------------------------- strings and bands

def string_module(q: Quiver, walk: Walk, field: Field | None = None) -> Representation:
    """The string module of a walk: one basis vector per visited position."""
    F = linalg.get_field() if field is None else field
    verts = walk.vertices(q)
    dims: dict[str, int] = defaultdict(int)
    pos = []
    for v in verts:
        pos.append(dims[v])
        dims[v] += 1
    mats = {a.id: linalg.zeros(dims[a.tgt], dims[a.src], F) for a in q.arrows}
    for i, (aid, d) in enumerate(walk.letters):
        if d == DIRECT:
            mats[aid][pos[i + 1]][pos[i]] = F.one()
        else:
            mats[aid][pos[i]][pos[i + 1]] = F.one()
    return Representation(q, dict(dims), mats, F)


def band_module(q: Quiver, m: int, lam, field: Field | None = None) -> Representation:
    """Constant dimension m, identities on every arrow except the least arrow id,
    which carries the Jordan block J_m(lam)."""
    F = linalg.get_field() if field is None else field
    if recognize_shape(q).tag is not ShapeTag.A_CYCLE:
        raise ValueError("band modules live on a single cycle")
    if m < 1:
        raise ValueError("band multiplicity must be at least 1")
    lam = F(lam)
    if not lam:
        raise ValueError("band parameter must be nonzero")
    first = q.sorted_arrows()[0].id
    mats = {a.id: linalg.identity(m, F) for a in q.arrows}
    mats[first] = linalg.jordan_block(m, lam, F)
    return Representation(q, {v: m for v in q.vertices}, mats, F)


def reduced_walks(q: Quiver, max_len: int) -> list[Walk]:
    """Walks without a letter followed by its inverse, one from each pair {w, w^-1}.

    Length-0 walks (one per vertex) are included.
    """
    letters = defaultdict(list)
    for a in q.sorted_arrows():
        letters[a.src].append((a.id, DIRECT, a.tgt))
        letters[a.tgt].append((a.id, -DIRECT, a.src))
    found = {}

    def grow(w: Walk, cur: str):
        inv = w.inverse(q)
        key = min((w.start, w.letters), (inv.start, inv.letters))
        found.setdefault(key, Walk(*key))
        if len(w) == max_len:
            return
        for aid, d, nxt in letters[cur]:
            if w.letters and w.letters[-1] == (aid, -d):
                continue
            grow(Walk(w.start, w.letters + ((aid, d),)), nxt)

    for v in q.sorted_vertices():
        grow(Walk(v), v)
    return [found[k] for k in sorted(found, key=lambda k: (len(k[1]), k))]


# ---------------------------------------------------------------- companion quiver reps

class BoxRep:
    """A finitely supported representation of the companion quiver.

    ``dims[(x, n)]`` is dim M(x, n); ``mats[(alpha, n)]`` for ``alpha: x -> y``
    is the matrix of M(y, n) -> M(x, n - 1).  Only the support is stored.
    ``copy``, ``family`` and ``params`` record where an enumerated object
    came from.
    """

    __slots__ = ("base", "dims", "mats", "field", "copy", "family", "params")

    def __init__(self, base: Quiver, dims: Mapping[tuple[str, int], int],
                 mats: Mapping[tuple[str, int], Sequence[Sequence]] | None = None, *,
                 copy: int | None = None, family: str = "custom", params: tuple = (),
                 field: Field | None = None):
        F = linalg.get_field() if field is None else field
        vs = set(base.vertices)
        d = {}
        for (x, n), k in dims.items():
            if x not in vs:
                raise ValueError(f"unknown vertex {x}")
            if k < 0:
                raise ValueError("dimensions must be nonnegative")
            if k:
                d[(x, int(n))] = int(k)
        m = {}
        mats = dict(mats or {})
        for (aid, n), mat in mats.items():
            a = base.arrow(aid)
            nr, nc = d.get((a.src, n - 1), 0), d.get((a.tgt, n), 0)
            fm = _freeze(mat, nr, nc, F, f"arrow {aid}@{n}")
            if nr and nc:
                m[(aid, n)] = fm
        for (y, n) in d:
            for a in base.arrows_to(y):
                if (a.src, n - 1) in d and (a.id, n) not in m:
                    m[(a.id, n)] = _zero(d[(a.src, n - 1)], d[(y, n)], F)
        self.base, self.field = base, F
        self.dims = dict(sorted(d.items(), key=lambda kv: (kv[0][1], kv[0][0])))
        self.mats = dict(sorted(m.items(), key=lambda kv: (kv[0][1], kv[0][0])))
        self.copy, self.family, self.params = copy, family, params

    def dim(self, x: str, n: int) -> int:
        return self.dims.get((x, n), 0)

    def mat(self, alpha: str, n: int) -> Matrix:
        a = self.base.arrow(alpha)
        m = self.mats.get((alpha, n))
        if m is None:
            return _zero(self.dim(a.src, n - 1), self.dim(a.tgt, n), self.field)
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def levels(self) -> list[int]:
        return sorted({n for _, n in self.dims})

    def key(self):
        return (self.base, tuple(self.dims.items()), tuple(self.mats.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, BoxRep) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        dims = ", ".join(f"{vertex_name(x, n)}:{k}" for (x, n), k in self.dims.items())
        return f"BoxRep({{{dims}}})"

    def shift(self, j: int) -> "BoxRep":
        """M[j](x, i) = M(x, i - j)."""
        return BoxRep(self.base, {(x, n + j): k for (x, n), k in self.dims.items()},
                      {(a, n + j): m for (a, n), m in self.mats.items()},
                      copy=None if self.copy is None else self.copy + j,
                      family=self.family, params=self.params, field=self.field)

    def window(self) -> BoxWindow:
        lv = self.levels or [0]
        return BoxWindow(self.base, lv[0], lv[-1])

    def to_representation(self, w: BoxWindow | None = None) -> Representation:
        w = self.window() if w is None else w
        if w.base != self.base:
            raise ValueError("window of a different quiver")
        for (x, n) in self.dims:
            if not w.contains((x, n)):
                raise WindowError(f"support vertex {vertex_name(x, n)} outside window "
                                  f"{w.lo}..{w.hi}; widen the window")
        dims = {vertex_name(x, n): k for (x, n), k in self.dims.items()}
        mats = {arrow_name(a, n): m for (a, n), m in self.mats.items() if n > w.lo}
        return Representation(w.quiver, dims, mats, self.field)

    @classmethod
    def from_representation(cls, w: BoxWindow, M: Representation, **kw) -> "BoxRep":
        if M.quiver != w.quiver:
            raise ValueError("representation of a different quiver")
        names = dict(zip(w.quiver.vertices, w.vertices))
        anames = dict(zip((a.id for a in w.quiver.arrows), w.arrows))
        dims = {names[v]: k for v, k in M.dims.items() if k}
        mats = {anames[a]: m for a, m in M.mats.items()}
        return cls(w.base, dims, mats, field=M.field, **kw)

    def direct_sum(self, other: "BoxRep") -> "BoxRep":
        o = other.window()
        w = self.window().widen(o.lo, o.hi)
        s = rep_direct_sum(self.to_representation(w), other.to_representation(w))
        return BoxRep.from_representation(w, s)


def _common_window(M: BoxRep, N: BoxRep) -> BoxWindow:
    lv = (M.levels or [0]) + (N.levels or [0])
    return BoxWindow(M.base, min(lv) - 1, max(lv) + 1)


class BoxMorphism:
    """A morphism of box representations M -> N.

    ``diag[(z, n)]``: M(z, n) -> N(z, n), a morphism of companion-quiver
    representations; ``kern[(alpha, n)]`` for ``alpha: x -> y``: M(y, n) -> N(x, n),
    unconstrained.
    """

    __slots__ = ("source", "target", "diag", "kern")

    def __init__(self, source: BoxRep, target: BoxRep,
                 diag: Mapping[tuple[str, int], Sequence[Sequence]] | None = None,
                 kern: Mapping[tuple[str, int], Sequence[Sequence]] | None = None,
                 check: bool = True):
        if source.base != target.base:
            raise ValueError("box representations of different quivers")
        F = source.field
        self.source, self.target = source, target
        self.diag, self.kern = {}, {}
        for (z, n), m in (diag or {}).items():
            r, c = target.dim(z, n), source.dim(z, n)
            fm = _freeze(m, r, c, F, f"diagonal part at {vertex_name(z, n)}")
            if r and c:
                self.diag[(z, n)] = fm
        for (aid, n), m in (kern or {}).items():
            a = source.base.arrow(aid)
            r, c = target.dim(a.src, n), source.dim(a.tgt, n)
            fm = _freeze(m, r, c, F, f"kernel part at {arrow_name(aid, n)}")
            if r and c:
                self.kern[(aid, n)] = fm
        if check and not self.commutes():
            raise ValueError("diagonal parts do not commute with the arrow maps")

    def d(self, z: str, n: int) -> Matrix:
        return self.diag.get((z, n)) or _zero(self.target.dim(z, n), self.source.dim(z, n),
                                               self.source.field)

    def k(self, aid: str, n: int) -> Matrix:
        a = self.source.base.arrow(aid)
        return self.kern.get((aid, n)) or _zero(self.target.dim(a.src, n),
                                                self.source.dim(a.tgt, n), self.source.field)

    def commutes(self) -> bool:
        M, N, F = self.source, self.target, self.source.field
        lv = set(M.levels) | set(N.levels)
        for n in lv:
            for a in M.base.arrows:
                x, y = a.src, a.tgt
                r, c = N.dim(x, n - 1), M.dim(y, n)
                if not (r and c):
                    continue
                left = linalg.matmul(N.mat(a.id, n), self.d(y, n), N.dim(y, n), c, F)
                right = linalg.matmul(self.d(x, n - 1), M.mat(a.id, n), M.dim(x, n - 1), c, F)
                if left != right:
                    return False
        return True

    @classmethod
    def identity(cls, M: BoxRep) -> "BoxMorphism":
        return cls(M, M, {v: _ident(k, M.field) for v, k in M.dims.items()}, {}, check=False)

    def compose(self, other: "BoxMorphism") -> "BoxMorphism":
        """self o other, for other: L -> M and self: M -> N."""
        if other.target != self.source:
            raise ValueError("morphisms are not composable")
        L, M, N, F = other.source, self.source, self.target, self.source.field
        diag = {}
        for (z, n), c in L.dims.items():
            if N.dim(z, n):
                diag[(z, n)] = linalg.matmul(self.d(z, n), other.d(z, n), M.dim(z, n), c, F)
        kern = {}
        lv = set(L.levels)
        for n in lv:
            for a in L.base.arrows:
                x, y = a.src, a.tgt
                r, c = N.dim(x, n), L.dim(y, n)
                if not (r and c):
                    continue
                t1 = linalg.matmul(self.d(x, n), other.k(a.id, n), M.dim(x, n), c, F)
                t2 = linalg.matmul(self.k(a.id, n), other.d(y, n), M.dim(y, n), c, F)
                kern[(a.id, n)] = linalg.matadd(t1, t2, F)
        return BoxMorphism(L, N, diag, kern, check=False)


@dataclass(frozen=True)
class BoxHom:
    """Dimensions of the box-morphism space M -> N modulo homotopy."""

    diagonal: int
    kernel_slots: int
    homotopy_rank: int

    @property
    def dim(self) -> int:
        return self.diagonal + self.kernel_slots - self.homotopy_rank


def box_hom(M: BoxRep, N: BoxRep) -> BoxHom:
    """Hom between box representations modulo the maps ``H(z, n): M(z, n) -> N(z, n+1)``.

    Such an H contributes zero diagonal part and the kernel part
    ``N(alpha, n+1) H(y, n) + H(x, n-1) M(alpha, n)`` at ``(alpha, n)``.
    """
    if M.base != N.base:
        raise ValueError("box representations of different quivers")
    F = M.field
    w = _common_window(M, N)
    diag = hom_space(M.to_representation(w), N.to_representation(w)).dim
    q = M.base
    slots, sidx = {}, 0
    for n in w.levels:
        for a in q.sorted_arrows():
            r, c = N.dim(a.src, n), M.dim(a.tgt, n)
            if r and c:
                slots[(a.id, n)] = sidx
                sidx += r * c
    hidx, hn = {}, 0
    for n in w.levels:
        for z in q.sorted_vertices():
            r, c = N.dim(z, n + 1), M.dim(z, n)
            if r and c:
                hidx[(z, n)] = hn
                hn += r * c
    rows = [defaultdict(F.zero) for _ in range(sidx)]
    for (aid, n), base in slots.items():
        a = q.arrow(aid)
        x, y = a.src, a.tgt
        r, c = N.dim(x, n), M.dim(y, n)
        if (y, n) in hidx:
            Na = N.mat(aid, n + 1)
            hc = M.dim(y, n)
            for i in range(r):
                for j in range(c):
                    for k in range(N.dim(y, n + 1)):
                        if Na[i][k]:
                            rows[base + i * c + j][hidx[(y, n)] + k * hc + j] += Na[i][k]
        if (x, n - 1) in hidx:
            Ma = M.mat(aid, n)
            hc = M.dim(x, n - 1)
            for i in range(r):
                for j in range(c):
                    for k in range(hc):
                        if Ma[k][j]:
                            rows[base + i * c + j][hidx[(x, n - 1)] + i * hc + k] += Ma[k][j]
    rk = linalg.rank([{c: v for c, v in row.items() if F.norm(v)} for row in rows], hn, F)
    return BoxHom(diag, sidx, rk)


# ---------------------------------------------------------------- enumeration

class WildInputError(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_total_dim: int = 12
    max_band_mult: int = 3
    lambda_samples: tuple = (1, 2, 3)
    seed: int = 0

    def __post_init__(self):
        if self.max_total_dim < 1 or self.max_band_mult < 0:
            raise ValueError("bounds must be positive")


@dataclass
class Enumeration:
    window: BoxWindow
    bounds: Bounds
    objects: list[BoxRep]
    notes: list[str]
    missing: list[str]

    @property
    def complete(self) -> bool:
        return not self.missing


def _embed(base: Quiver, M: Representation, delta: Mapping[str, int], copy: int,
           family: str, params: tuple) -> BoxRep:
    """Place a representation of the opposite of a component on the copy Q[copy]."""
    dims = {(b, copy + delta[b]): k for b, k in M.dims.items() if k}
    mats = {}
    for a in M.quiver.arrows:
        # in the opposite quiver a: b -> a0 for the original a: a0 -> b
        b = a.src
        mats[(a.id, copy + delta[b])] = M.mats[a.id]
    return BoxRep(base, dims, mats, copy=copy, family=family, params=params, field=M.field)


def _dedup(mods: list[tuple[Representation, str, tuple]], seed: int):
    out: list[tuple[Representation, str, tuple]] = []
    by_dim = defaultdict(list)
    for M, fam, par in mods:
        dv = M.dim_vector()
        if any(rep_equal_upto_iso(M, N, seed) for N in by_dim[dv]):
            continue
        by_dim[dv].append(M)
        out.append((M, fam, par))
    return out


def _opposite_component_modules(comp: Quiver, bounds: Bounds, notes: list, missing: list):
    """Indecomposables of the opposite of a walk-condition component."""
    op = comp.opposite()
    shape = recognize_shape(comp)
    cap = bounds.max_total_dim
    mods = []
    if shape.tag is ShapeTag.A_CYCLE:
        for w in reduced_walks(op, cap - 1):
            mods.append((string_module(op, w), "string", (str(w) if w.letters else f"e_{w.start}",)))
        F = linalg.get_field()
        for m in range(1, bounds.max_band_mult + 1):
            if m * len(op.vertices) > cap:
                notes.append(f"bands of multiplicity {m} exceed max_total_dim {cap}")
                break
            for lam in bounds.lambda_samples:
                if not F(lam):
                    continue
                mods.append((band_module(op, m, lam), "band", (m, F(lam))))
        lams = ", ".join(linalg.format_scalar(x) for x in bounds.lambda_samples)
        notes.append(f"{shape.name}: strings of total dimension <= {cap} and bands "
                     f"m <= {bounds.max_band_mult}, t in {{{lams}}}; "
                     f"each band family P(m, t) is sampled, not exhausted")
        return _dedup(mods, bounds.seed)
    roots = positive_roots(op, None if shape.tag.is_dynkin else cap)
    skipped = [r for r in roots if r.total > cap]
    if skipped:
        missing.append(f"{shape.name}: {len(skipped)} roots of total dimension > {cap} skipped")
    if not shape.tag.is_dynkin:
        notes.append(f"{shape.name}: real roots of total dimension <= {cap}; "
                     f"imaginary-root families not enumerated")
    for r in roots:
        if r.total > cap or not r.real:
            continue
        try:
            M, how = construct_for_root(op, r, bounds.seed)
        except RootConstructionError:
            missing.append(f"{shape.name}: root {r} not constructed")
            continue
        mods.append((M, "root", (str(r), how)))
    return _dedup(mods, bounds.seed)


def _line_order(piece: list, w: BoxWindow) -> tuple[list, list]:
    """Order the vertices of a line-shaped window piece; returns (vertices, arrows)."""
    vs = set(piece)
    adj = defaultdict(list)
    for a in w.arrows:
        s, t = w.source(a), w.target(a)
        if s in vs and t in vs:
            adj[s].append((t, a))
            adj[t].append((s, a))
    if any(len(v) > 2 for v in adj.values()):
        raise ValueError("window piece is not a line")
    ends = sorted((v for v in piece if len(adj[v]) <= 1), key=lambda v: (v[1], v[0]))
    start = ends[0] if ends else min(piece, key=lambda v: (v[1], v[0]))
    order, arrows, prev = [start], [], None
    while True:
        nxt = [(u, a) for u, a in adj[order[-1]] if u != prev]
        if not nxt or nxt[0][0] == start:
            break
        prev = order[-1]
        order.append(nxt[0][0])
        arrows.append(nxt[0][1])
    return order, arrows


def enumerate_indecomposables(w: BoxWindow, bounds: Bounds | None = None) -> Enumeration:
    """Indecomposable companion-quiver representations for the window.

    For a component satisfying the walk condition the window bounds select the
    shift copies Q[lo], ..., Q[hi]; each copy gets every indecomposable of the
    opposite quiver within the bounds.  For a component with epsilon > 0 the
    bounds are levels and the output is every interval of every line piece of
    the window.
    """
    from .classify import Label, classify

    bounds = Bounds() if bounds is None else bounds
    q = w.base
    verdict = classify(q)
    if verdict.label is Label.WILD:
        raise WildInputError("derived wild quiver; indecomposables are not enumerable")
    objects, notes, missing = [], [], []
    F = linalg.get_field()
    for ci, vs in enumerate(connected_components(q)):
        comp = q.full_subquiver(vs)
        eps = epsilon(comp)
        if eps.epsilon == 0:
            delta = eps.potentials.delta
            mods = _opposite_component_modules(comp, bounds, notes, missing)
            for i in w.levels:
                for M, fam, par in mods:
                    objects.append(_embed(q, M, delta, i, fam, par))
            continue
        cw = BoxWindow(comp, w.lo, w.hi)
        labels = {(v, j): (j - eps.potentials.delta[v]) % eps.epsilon for v, j in cw.vertices}
        too_long = 0
        for piece in window_components(cw):
            order, arrows = _line_order(piece, cw)
            for i in range(len(order)):
                for j in range(i, len(order)):
                    if j - i + 1 > bounds.max_total_dim:
                        too_long += 1
                        continue
                    dims = {v: 1 for v in order[i:j + 1]}
                    mats = {a: [[F.one()]] for a in arrows[i:j]}
                    objects.append(BoxRep(
                        q, dims, mats, copy=labels[order[0]], family="interval",
                        params=tuple(vertex_name(*v) for v in order[i:j + 1]), field=F))
        if too_long:
            missing.append(f"component {{{', '.join(vs)}}}: {too_long} intervals longer than "
                           f"max_total_dim {bounds.max_total_dim} skipped")
        notes.append(f"component {{{', '.join(vs)}}}: epsilon = {eps.epsilon}, all intervals "
                     f"inside levels {w.lo}..{w.hi}")
    return Enumeration(w, bounds, objects, notes, missing)
