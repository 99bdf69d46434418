"""Complexes of projective modules over A = kQ/rad^2.

The indecomposable projective A^x = A(x, -) has basis e_x and the arrows
starting at x.  A map A^y -> A^x is left multiplication by an element of
A(x, y), so a map between sums of projectives is a block matrix whose
blocks are indexed by basis elements of A.  Products are taken in path
order: ``a . b`` is a followed by b.

The underlying representation of a projective P = sum A^x (x) V_x has
P(z) = sum_x A(x, z) (x) V_x; an arrow g: z -> w acts by c -> c . g.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import linalg
from .linalg import Field
from .quiver import Quiver
from .reps import BoxMorphism, BoxRep, Representation

__all__ = [
    "BasisElement", "Algebra", "algebra_from_quiver", "AMatrix", "ProjComplex", "ChainMap",
    "F_obj", "F_mor", "shift", "shift_box", "vector_rank", "direct_sum", "underlying_basis",
    "underlying_map", "underlying_action", "BetaObject", "beta", "syzygy", "pd_is_finite",
    "module_pd_is_finite", "is_in_X", "projective_cover", "beta_resolution",
    "NonMinimalError", "homology", "vector_rank_key", "underlying_rep",
    "amatrix_from_images", "identity_amatrix",
]

Rank = dict[str, int]
Matrix = tuple


class NonMinimalError(ValueError):
    pass


# ---------------------------------------------------------------- the algebra

@dataclass(frozen=True)
class BasisElement:
    kind: str           # "e" or "a"
    id: str
    left: str
    right: str

    def __str__(self) -> str:
        return f"e_{self.id}" if self.kind == "e" else self.id


class Algebra:
    """The algebra kQ/rad^2 with its multiplication table on the path basis."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        basis = [BasisElement("e", x, x, x) for x in quiver.sorted_vertices()]
        basis += [BasisElement("a", a.id, a.src, a.tgt) for a in quiver.sorted_arrows()]
        self.basis = tuple(basis)
        self.index = {(b.kind, b.id): i for i, b in enumerate(basis)}
        n = len(basis)
        prod: list[list[tuple]] = [[() for _ in range(n)] for _ in range(n)]
        for i, b in enumerate(basis):
            for j, c in enumerate(basis):
                if b.right != c.left:
                    continue
                if b.kind == "e":
                    prod[i][j] = ((j, 1),)
                elif c.kind == "e":
                    prod[i][j] = ((i, 1),)
        self.products = prod
        by_pair = defaultdict(list)
        for i, b in enumerate(basis):
            by_pair[(b.left, b.right)].append(i)
        self._between = dict(by_pair)
        self._left = defaultdict(list)
        self._right = defaultdict(list)
        for i, b in enumerate(basis):
            self._left[b.left].append(i)
            self._right[b.right].append(i)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def e(self, x: str) -> int:
        return self.index[("e", x)]

    def arrow(self, aid: str) -> int:
        return self.index[("a", aid)]

    def between(self, x: str, y: str) -> list[int]:
        """Basis of A(x, y)."""
        return self._between.get((x, y), [])

    def starting_at(self, x: str) -> list[int]:
        return self._left.get(x, [])

    def ending_at(self, y: str) -> list[int]:
        return self._right.get(y, [])

    def mul(self, i: int, j: int) -> tuple:
        return self.products[i][j]

    def is_radical(self, i: int) -> bool:
        return self.basis[i].kind == "a"

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.quiver == other.quiver

    def __hash__(self) -> int:
        return hash(self.quiver)


def algebra_from_quiver(q: Quiver) -> Algebra:
    return Algebra(q)


def _clean_rank(r: Mapping[str, int]) -> Rank:
    return {x: int(m) for x, m in sorted(r.items()) if m}


# ---------------------------------------------------------------- matrices over A

class AMatrix:
    """A map sum_y A^y (x) k^src[y] -> sum_x A^x (x) k^tgt[x].

    ``entries[b]`` for b in A(x, y) is a ``tgt[x] x src[y]`` matrix.
    """

    __slots__ = ("alg", "src", "tgt", "entries")

    def __init__(self, alg: Algebra, src: Mapping[str, int], tgt: Mapping[str, int],
                 entries: Mapping[int, Sequence[Sequence]] | None = None,
                 field: Field | None = None):
        F = linalg.get_field() if field is None else field
        self.alg, self.src, self.tgt = alg, _clean_rank(src), _clean_rank(tgt)
        self.entries = {}
        for b, m in sorted((entries or {}).items()):
            be = alg.basis[b]
            r, c = self.tgt.get(be.left, 0), self.src.get(be.right, 0)
            rows = [list(map(F, row)) for row in m]
            if len(rows) != r or any(len(row) != c for row in rows):
                raise ValueError(f"entry {be}: expected a {r}x{c} matrix")
            if r and c and not linalg.is_zero(rows):
                self.entries[b] = tuple(tuple(row) for row in rows)

    def key(self):
        return (tuple(self.src.items()), tuple(self.tgt.items()), tuple(self.entries.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, AMatrix) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.entries

    def is_radical(self) -> bool:
        return all(self.alg.is_radical(b) for b in self.entries)

    def compose(self, other: "AMatrix", field: Field | None = None) -> "AMatrix":
        """self o other."""
        F = linalg.get_field() if field is None else field
        if other.tgt != self.src:
            raise ValueError("A-matrices are not composable")
        acc: dict[int, list[list]] = {}
        for b1, G in self.entries.items():
            for b, Fm in other.entries.items():
                for b2, c in self.alg.mul(b1, b):
                    be = self.alg.basis[b2]
                    r, cc = self.tgt[be.left], other.src[be.right]
                    prod = linalg.matmul(G, Fm, len(Fm), cc, F)
                    if b2 not in acc:
                        acc[b2] = linalg.zeros(r, cc, F)
                    tgt = acc[b2]
                    for i in range(r):
                        for j in range(cc):
                            if prod[i][j]:
                                tgt[i][j] = F.norm(tgt[i][j] + c * prod[i][j])
        return AMatrix(self.alg, other.src, self.tgt, acc, F)

    def add(self, other: "AMatrix", coeff=1, field: Field | None = None) -> "AMatrix":
        F = linalg.get_field() if field is None else field
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("A-matrices of different shapes")
        out = {b: [list(r) for r in m] for b, m in self.entries.items()}
        for b, m in other.entries.items():
            if b in out:
                out[b] = [[F.norm(x + coeff * y) for x, y in zip(r1, r2)]
                          for r1, r2 in zip(out[b], m)]
            else:
                out[b] = [[F.norm(coeff * y) for y in r] for r in m]
        return AMatrix(self.alg, self.src, self.tgt, out, F)

    def __repr__(self) -> str:
        parts = [f"{self.alg.basis[b]}:{[list(map(str, r)) for r in m]}"
                 for b, m in self.entries.items()]
        return f"AMatrix({self.src}->{self.tgt}; {', '.join(parts)})"


def zero_amatrix(alg: Algebra, src: Mapping[str, int], tgt: Mapping[str, int]) -> AMatrix:
    return AMatrix(alg, src, tgt)


def identity_amatrix(alg: Algebra, rank: Mapping[str, int], F: Field) -> AMatrix:
    return AMatrix(alg, rank, rank, {alg.e(x): linalg.identity(m, F)
                                     for x, m in _clean_rank(rank).items()}, F)


# ---------------------------------------------------------------- underlying reps

def underlying_basis(alg: Algebra, rank: Mapping[str, int], z: str) -> list[tuple[str, int, int]]:
    """Basis ``(x, b, g)`` of P(z): b in A(x, z), g a generator of the A^x block."""
    out = []
    for x, m in sorted(rank.items()):
        for b in alg.between(x, z):
            out.extend((x, b, g) for g in range(m))
    return out


def _basis_index(alg: Algebra, rank, z) -> dict[tuple[str, int, int], int]:
    return {t: i for i, t in enumerate(underlying_basis(alg, rank, z))}


def underlying_map(f: AMatrix, z: str, field: Field | None = None) -> list[list]:
    """Matrix of f at the vertex z, from P(z) to Q(z)."""
    F = linalg.get_field() if field is None else field
    alg = f.alg
    cols = underlying_basis(alg, f.src, z)
    ridx = _basis_index(alg, f.tgt, z)
    out = linalg.zeros(len(ridx), len(cols), F)
    for j, (y, c, g) in enumerate(cols):
        for b in alg.ending_at(y):
            m = f.entries.get(b)
            if m is None:
                continue
            x = alg.basis[b].left
            for b2, coeff in alg.mul(b, c):
                for g2 in range(f.tgt[x]):
                    if m[g2][g]:
                        i = ridx[(x, b2, g2)]
                        out[i][j] = F.norm(out[i][j] + coeff * m[g2][g])
    return out


def underlying_action(alg: Algebra, rank: Mapping[str, int], aid: str,
                      field: Field | None = None) -> list[list]:
    """Matrix of the arrow aid: z -> w on P(z) -> P(w) (right multiplication)."""
    F = linalg.get_field() if field is None else field
    a = alg.quiver.arrow(aid)
    cols = underlying_basis(alg, rank, a.src)
    ridx = _basis_index(alg, rank, a.tgt)
    out = linalg.zeros(len(ridx), len(cols), F)
    g_idx = alg.arrow(aid)
    for j, (x, c, g) in enumerate(cols):
        for b2, coeff in alg.mul(c, g_idx):
            i = ridx[(x, b2, g)]
            out[i][j] = F.norm(out[i][j] + coeff)
    return out


def underlying_rep(alg: Algebra, rank: Mapping[str, int], field: Field | None = None) -> Representation:
    F = linalg.get_field() if field is None else field
    q = alg.quiver
    dims = {z: len(underlying_basis(alg, rank, z)) for z in q.vertices}
    mats = {a.id: underlying_action(alg, rank, a.id, F) for a in q.arrows}
    return Representation(q, dims, mats, F)


def amatrix_from_images(alg: Algebra, src: Mapping[str, int], tgt: Mapping[str, int],
                        images: Mapping[tuple[str, int], Sequence],
                        field: Field | None = None) -> AMatrix:
    """The A-linear map sending generator g of the A^y block to the vector
    ``images[(y, g)]`` of the target's underlying space at y."""
    F = linalg.get_field() if field is None else field
    src, tgt = _clean_rank(src), _clean_rank(tgt)
    entries: dict[int, list[list]] = {}
    for y, m in src.items():
        basis = underlying_basis(alg, tgt, y)
        for g in range(m):
            vec = images[(y, g)]
            for (x, b, g2), v in zip(basis, vec):
                if v:
                    if b not in entries:
                        entries[b] = linalg.zeros(tgt[x], m, F)
                    entries[b][g2][g] = v
    return AMatrix(alg, src, tgt, entries, F)


# ---------------------------------------------------------------- complexes

class ProjComplex:
    """A bounded complex of projectives; ``diffs[n]: P_n -> P_{n-1}``.

    Minimality (every entry radical) is enforced unless ``minimal=False``.
    """

    __slots__ = ("alg", "ranks", "diffs", "field")

    def __init__(self, alg: Algebra, ranks: Mapping[int, Mapping[str, int]],
                 diffs: Mapping[int, AMatrix | Mapping[int, Sequence[Sequence]]] | None = None,
                 field: Field | None = None, minimal: bool = True, check: bool = True):
        F = linalg.get_field() if field is None else field
        self.alg, self.field = alg, F
        unknown = {x for r in ranks.values() for x in r} - set(alg.quiver.vertices)
        if unknown:
            raise ValueError(f"unknown vertices {sorted(unknown)}")
        self.ranks = {int(n): _clean_rank(r) for n, r in sorted(ranks.items()) if _clean_rank(r)}
        self.diffs = {}
        for n, d in sorted((diffs or {}).items()):
            n = int(n)
            src, tgt = self.rank(n), self.rank(n - 1)
            if isinstance(d, AMatrix):
                if (d.src, d.tgt) != (src, tgt):
                    raise ValueError(f"differential at level {n} has the wrong shape")
            else:
                d = AMatrix(alg, src, tgt, d, F)
            if not d.is_zero():
                self.diffs[n] = d
        if check:
            if minimal and not all(d.is_radical() for d in self.diffs.values()):
                raise NonMinimalError("a differential has an entry outside the radical")
            for n, d in self.diffs.items():
                if n - 1 in self.diffs and not self.diffs[n - 1].compose(d, F).is_zero():
                    raise ValueError(f"d_{n - 1} d_{n} is not zero")

    def rank(self, n: int) -> Rank:
        return self.ranks.get(n, {})

    def d(self, n: int) -> AMatrix:
        return self.diffs.get(n) or AMatrix(self.alg, self.rank(n), self.rank(n - 1))

    @property
    def levels(self) -> list[int]:
        return list(self.ranks)

    def is_zero(self) -> bool:
        return not self.ranks

    @property
    def is_minimal(self) -> bool:
        return all(d.is_radical() for d in self.diffs.values())

    def key(self):
        return (self.alg.quiver, tuple((n, tuple(r.items())) for n, r in self.ranks.items()),
                tuple((n, d.key()) for n, d in self.diffs.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjComplex) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"ProjComplex({vector_rank(self)})"

    def total_rank(self) -> int:
        return sum(sum(r.values()) for r in self.ranks.values())

    def dim_at(self, n: int) -> int:
        """Dimension of P_n as a vector space."""
        return sum(m * len(self.alg.starting_at(x)) for x, m in self.rank(n).items())


def vector_rank(P: ProjComplex) -> dict[int, dict[str, int]]:
    return {n: dict(r) for n, r in sorted(P.ranks.items(), reverse=True)}


def vector_rank_key(P: ProjComplex) -> tuple:
    return tuple((n, x, m) for n, r in sorted(P.ranks.items()) for x, m in r.items())


def shift(P: ProjComplex, j: int) -> ProjComplex:
    """P[j] with P[j]_n = P_{n-j}."""
    ranks = {n + j: r for n, r in P.ranks.items()}
    diffs = {n + j: AMatrix(P.alg, d.src, d.tgt, d.entries, P.field) for n, d in P.diffs.items()}
    return ProjComplex(P.alg, ranks, diffs, P.field, minimal=False, check=False)


def shift_box(M: BoxRep, j: int) -> BoxRep:
    return M.shift(j)


def _block_sum(alg: Algebra, d1: AMatrix, d2: AMatrix, F: Field) -> AMatrix:
    src = {x: d1.src.get(x, 0) + d2.src.get(x, 0) for x in set(d1.src) | set(d2.src)}
    tgt = {x: d1.tgt.get(x, 0) + d2.tgt.get(x, 0) for x in set(d1.tgt) | set(d2.tgt)}
    entries = {}
    for b in set(d1.entries) | set(d2.entries):
        be = alg.basis[b]
        x, y = be.left, be.right
        blocks = []
        for d in (d1, d2):
            m = d.entries.get(b)
            r, c = d.tgt.get(x, 0), d.src.get(y, 0)
            blocks.append((m if m is not None else linalg.zeros(r, c, F), r, c))
        entries[b] = linalg.block_diag(blocks, F)
    return AMatrix(alg, src, tgt, entries, F)


def direct_sum(P: ProjComplex, Q: ProjComplex) -> ProjComplex:
    if P.alg != Q.alg:
        raise ValueError("complexes over different algebras")
    F = P.field
    levels = sorted(set(P.ranks) | set(Q.ranks))
    ranks = {n: {x: P.rank(n).get(x, 0) + Q.rank(n).get(x, 0)
                 for x in set(P.rank(n)) | set(Q.rank(n))} for n in levels}
    diffs = {n: _block_sum(P.alg, P.d(n), Q.d(n), F) for n in levels if n - 1 in ranks}
    return ProjComplex(P.alg, ranks, diffs, F, minimal=P.is_minimal and Q.is_minimal)


# ---------------------------------------------------------------- chain maps

class ChainMap:
    __slots__ = ("source", "target", "maps")

    def __init__(self, source: ProjComplex, target: ProjComplex, maps: Mapping[int, AMatrix]):
        self.source, self.target = source, target
        self.maps = {n: m for n, m in sorted(maps.items()) if not m.is_zero()}

    def at(self, n: int) -> AMatrix:
        return self.maps.get(n) or AMatrix(self.source.alg, self.source.rank(n), self.target.rank(n))

    def is_chain_map(self) -> bool:
        F = self.source.field
        for n in set(self.source.levels) | set(self.target.levels):
            lhs = self.target.d(n).compose(self.at(n), F)
            rhs = self.at(n - 1).compose(self.source.d(n), F)
            if lhs != rhs:
                return False
        return True

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self o other."""
        F = self.source.field
        return ChainMap(other.source, self.target,
                        {n: self.at(n).compose(other.at(n), F) for n in other.source.levels})

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainMap) and self.maps == other.maps \
            and self.source == other.source and self.target == other.target

    __hash__ = None


# ---------------------------------------------------------------- the functor F

def F_obj(M: BoxRep, alg: Algebra | None = None) -> ProjComplex:
    """P_n = sum_x A^x (x) M(x, n), with the block A^y -> A^x of d_n equal to
    sum over alpha: x -> y of alpha (x) M(alpha, n)."""
    alg = Algebra(M.base) if alg is None else alg
    if alg.quiver != M.base:
        raise ValueError("box representation of a different quiver")
    ranks: dict[int, dict[str, int]] = defaultdict(dict)
    for (x, n), k in M.dims.items():
        ranks[n][x] = k
    diffs: dict[int, dict[int, Matrix]] = defaultdict(dict)
    for (aid, n), m in M.mats.items():
        diffs[n][alg.arrow(aid)] = m
    return ProjComplex(alg, ranks, {n: AMatrix(alg, ranks.get(n, {}), ranks.get(n - 1, {}), e, M.field)
                                    for n, e in diffs.items()}, M.field)



def F_mor(psi: BoxMorphism, alg: Algebra | None = None) -> ChainMap:
    """Level n: identity blocks Psi(x, n) and arrow blocks alpha (x) Psi(phi_{alpha, n})."""
    M, N = psi.source, psi.target
    alg = Algebra(M.base) if alg is None else alg
    P, Q = F_obj(M, alg), F_obj(N, alg)
    F = M.field
    entries: dict[int, dict[int, Matrix]] = defaultdict(dict)
    for (z, n), m in psi.diag.items():
        entries[n][alg.e(z)] = m
    for (aid, n), m in psi.kern.items():
        entries[n][alg.arrow(aid)] = m
    return ChainMap(P, Q, {n: AMatrix(alg, P.rank(n), Q.rank(n), e, F) for n, e in entries.items()})


# ---------------------------------------------------------------- modules, syzygies, beta

def _coords_solver(vectors: list[list], dim: int, F: Field):
    """Coordinates with respect to independent ``vectors`` of a vector in their span."""
    k = len(vectors)
    if k == 0:
        return lambda v: []
    rows = linalg.transpose(vectors, dim)     # dim x k
    sel = linalg.column_space_basis(rows, k, F)[:k]
    S = [rows[i] for i in sel]
    Sinv = linalg.inverse(S, F)
    return lambda v: [F.norm(sum((Sinv[i][j] * v[sel[j]] for j in range(k)), F.zero()))
                      for i in range(k)]


def _submodule(alg: Algebra, rank: Mapping[str, int], vecs: Mapping[str, list[list]],
               F: Field) -> Representation:
    """The submodule of P with basis ``vecs[z]`` of U(z) inside P(z)."""
    q = alg.quiver
    solvers = {z: _coords_solver(vecs.get(z, []), len(underlying_basis(alg, rank, z)), F)
               for z in q.vertices}
    mats = {}
    for a in q.arrows:
        act = underlying_action(alg, rank, a.id, F)
        ncols = len(underlying_basis(alg, rank, a.src))
        cols = []
        for u in vecs.get(a.src, []):
            img = [F.norm(sum((row[j] * u[j] for j in range(ncols)), F.zero())) for row in act]
            cols.append(solvers[a.tgt](img))
        mats[a.id] = linalg.transpose(cols, len(vecs.get(a.tgt, []))) if cols else \
            linalg.zeros(len(vecs.get(a.tgt, [])), 0, F)
    return Representation(q, {z: len(vecs.get(z, [])) for z in q.vertices}, mats, F)


def _act(M: Representation, alg: Algebra, b: int, v: list, F: Field) -> list:
    """The element v of M(left(b)) moved along the basis element b."""
    be = alg.basis[b]
    if be.kind == "e":
        return list(v)
    m = M.mats[be.id]
    return [F.norm(sum((row[j] * v[j] for j in range(len(v))), F.zero())) for row in m]


def projective_cover(M: Representation, alg: Algebra | None = None):
    """Returns (rank of the cover, generator images ``{(x, g): vector in M(x)}``)."""
    alg = Algebra(M.quiver) if alg is None else alg
    F = M.field
    rank, images = {}, {}
    for x in M.quiver.sorted_vertices():
        d = M.dims[x]
        rad = []
        for a in M.quiver.arrows_to(x):
            mat = M.mats[a.id]
            rad.extend([mat[i][j] for i in range(d)] for j in range(M.dims[a.src]))
        span = [rad[i] for i in linalg.column_space_basis(rad, d, F)] if rad else []
        gens = []
        for i in range(d):
            e = [F.one() if j == i else F.zero() for j in range(d)]
            if linalg.rank(linalg.transpose(span + [e], d), len(span) + 1, F) > len(span):
                span.append(e)
                gens.append(e)
        if gens:
            rank[x] = len(gens)
            for g, v in enumerate(gens):
                images[(x, g)] = v
    return rank, images


def _cover_map(M: Representation, alg: Algebra, rank: Rank, images, z: str, F: Field) -> list[list]:
    """Underlying matrix at z of the cover map onto M."""
    cols = underlying_basis(alg, rank, z)
    out = linalg.zeros(M.dims[z], len(cols), F)
    for j, (x, b, g) in enumerate(cols):
        v = _act(M, alg, b, images[(x, g)], F)
        for i, val in enumerate(v):
            out[i][j] = val
    return out


def syzygy(M: Representation, alg: Algebra | None = None) -> tuple[Representation, Rank]:
    """The first syzygy of M with the rank of its projective cover."""
    alg = Algebra(M.quiver) if alg is None else alg
    F = M.field
    rank, images = projective_cover(M, alg)
    vecs = {}
    for z in M.quiver.vertices:
        pi = _cover_map(M, alg, rank, images, z, F)
        vecs[z] = linalg.nullspace(pi, len(underlying_basis(alg, rank, z)), F)
    return _submodule(alg, rank, vecs, F), rank


def pd_is_finite(q: Quiver, x: str) -> bool:
    """pd S_x < infinity iff no path from x reaches an oriented cycle."""
    return not (q.reachable_from(x) & q.vertices_on_oriented_cycles())


def module_pd_is_finite(M: Representation, alg: Algebra | None = None) -> bool:
    if M.total_dim == 0:
        return True
    omega, _ = syzygy(M, alg)
    # the syzygy lies in the radical of a projective, so it is semisimple
    return all(pd_is_finite(M.quiver, y) for y in omega.support)


@dataclass
class BetaObject:
    """P together with K = Ker d_t at level t + 1 (t the top level of P)."""

    complex: ProjComplex
    t: int
    kernel: Representation
    embedding: dict[str, list[list]]     # basis of K(z) inside P_t(z)

    def summary(self) -> str:
        dims = ", ".join(f"{v}:{k}" for v, k in self.kernel.dims.items() if k) or "0"
        return f"beta(P) with Ker d_{self.t} = ({dims}) at level {self.t + 1}"


def beta(P: ProjComplex) -> BetaObject:
    if P.is_zero():
        raise ValueError("beta of the zero complex")
    F, alg = P.field, P.alg
    t = max(P.levels)
    d = P.d(t)
    vecs = {}
    for z in alg.quiver.vertices:
        n = len(underlying_basis(alg, P.rank(t), z))
        vecs[z] = linalg.nullspace(underlying_map(d, z, F), n, F) if n else []
    return BetaObject(P, t, _submodule(alg, P.rank(t), vecs, F), vecs)


def is_in_X(P: ProjComplex) -> bool:
    """Whether the kernel above the top level has infinite projective dimension."""
    b = beta(P)
    return not module_pd_is_finite(b.kernel, P.alg)


def beta_resolution(b: BetaObject, cap: int) -> tuple[ProjComplex, bool]:
    """The minimal complex of beta(P): P followed by a minimal projective
    resolution of K placed at levels t+1, t+2, ... and cut above ``cap``.

    Returns the complex and whether the cut was needed.
    """
    P, alg, F = b.complex, b.complex.alg, b.complex.field
    ranks = dict(P.ranks)
    diffs = dict(P.diffs)
    level, below_rank, U, emb = b.t + 1, P.rank(b.t), b.kernel, b.embedding
    while U.total_dim:
        if level > cap:
            return ProjComplex(alg, ranks, diffs, F), True
        rank, images = projective_cover(U, alg)
        # images in coordinates of the projective below
        amb = {}
        for (x, g), v in images.items():
            basis = emb[x]
            amb[(x, g)] = [F.norm(sum((c * u[i] for c, u in zip(v, basis)), F.zero()))
                           for i in range(len(underlying_basis(alg, below_rank, x)))]
        d = amatrix_from_images(alg, rank, below_rank, amb, F)
        if not d.is_radical():
            raise NonMinimalError("the kernel is not contained in the radical; "
                                  "the attached resolution is not minimal")
        ranks[level] = rank
        diffs[level] = d
        vecs = {z: linalg.nullspace(underlying_map(d, z, F),
                                    len(underlying_basis(alg, rank, z)), F)
                for z in alg.quiver.vertices}
        U = _submodule(alg, rank, vecs, F)
        emb, below_rank, level = vecs, rank, level + 1
    return ProjComplex(alg, ranks, diffs, F), False


def homology(P: ProjComplex) -> dict[int, dict[str, int]]:
    """dim H_n(P)(z) = dim Ker d_n(z) - rank d_{n+1}(z)."""
    F, alg = P.field, P.alg
    out = {}
    for n in P.levels:
        h = {}
        for z in alg.quiver.sorted_vertices():
            dim = len(underlying_basis(alg, P.rank(n), z))
            if not dim:
                continue
            r_out = linalg.rank(underlying_map(P.d(n), z, F), dim, F)
            nin = len(underlying_basis(alg, P.rank(n + 1), z))
            r_in = linalg.rank(underlying_map(P.d(n + 1), z, F), nin, F) if nin else 0
            if dim - r_out - r_in:
                h[z] = dim - r_out - r_in
        if h:
            out[n] = h
    return out
