"""Brute-force exact computations in the homotopy category.

Chain maps P -> Q are solved for directly in the coordinates of their
A-matrix entries, using only the structure constants of the algebra.  The
null-homotopic ones are the image of ``s -> d s + s d``.  Everything else
(Hom dimensions, endomorphism algebras, locality, isomorphism) is linear
algebra on top of these two systems.
"""
from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass

from . import linalg
from .complexes import AMatrix, ChainMap, NonMinimalError, ProjComplex, homology, vector_rank
from .finite_algebra import FiniteAlgebra
from .reps import IsoResult

__all__ = ["HomSpace", "hom_complex", "endo_algebra", "is_indecomposable", "iso_in_homotopy",
           "homology", "chain_map_space", "ISO_SEED"]

ISO_SEED = 20240531


class _Layout:
    """Coordinates of level-wise A-matrices S_n -> T_{n+offset}."""

    def __init__(self, P: ProjComplex, Q: ProjComplex, offset: int):
        alg = P.alg
        self.P, self.Q, self.offset = P, Q, offset
        self.blocks: dict[tuple[int, int], int] = {}
        n_total = 0
        for n in P.levels:
            tgt = Q.rank(n + offset)
            if not tgt:
                continue
            for y, cy in P.rank(n).items():
                for b in alg.ending_at(y):
                    x = alg.basis[b].left
                    if x in tgt:
                        self.blocks[(n, b)] = n_total
                        n_total += tgt[x] * cy
        self.size = n_total

    def shape(self, n: int, b: int) -> tuple[int, int]:
        be = self.P.alg.basis[b]
        return self.Q.rank(n + self.offset)[be.left], self.P.rank(n)[be.right]

    def decode(self, vec) -> dict[int, AMatrix]:
        P, Q = self.P, self.Q
        F = P.field
        per_level: dict[int, dict[int, list]] = defaultdict(dict)
        for (n, b), off in self.blocks.items():
            r, c = self.shape(n, b)
            per_level[n][b] = [[vec[off + i * c + j] for j in range(c)] for i in range(r)]
        return {n: AMatrix(P.alg, P.rank(n), Q.rank(n + self.offset), e, F)
                for n, e in per_level.items()}

    def encode(self, maps: dict[int, AMatrix]) -> list:
        F = self.P.field
        vec = [F.zero()] * self.size
        for n, m in maps.items():
            for b, mat in m.entries.items():
                if (n, b) not in self.blocks:
                    raise ValueError("map outside the coordinate layout")
                off = self.blocks[(n, b)]
                c = len(mat[0]) if mat else 0
                for i, row in enumerate(mat):
                    for j, v in enumerate(row):
                        vec[off + i * c + j] = v
        return vec


def _chain_equations(L: _Layout) -> list[dict]:
    """Rows of d^Q_n f_n - f_{n-1} d^P_n = 0."""
    P, Q = L.P, L.Q
    alg, F = P.alg, P.field
    eqs: dict[tuple, dict] = defaultdict(lambda: defaultdict(F.zero))
    for n in P.levels:
        DQ = Q.d(n)
        for b1, G in DQ.entries.items():
            for (m, b), off in L.blocks.items():
                if m != n:
                    continue
                for b2, coeff in alg.mul(b1, b):
                    r, k = len(G), len(G[0])
                    _, c = L.shape(n, b)
                    for i in range(r):
                        for kk in range(k):
                            if G[i][kk]:
                                for j in range(c):
                                    eqs[(n, b2, i, j)][off + kk * c + j] += coeff * G[i][kk]
        DP = P.d(n)
        for b2_, D in DP.entries.items():
            for (m, b), off in L.blocks.items():
                if m != n - 1:
                    continue
                for b3, coeff in alg.mul(b, b2_):
                    r, k = L.shape(n - 1, b)
                    c = len(D[0])
                    for i in range(r):
                        for kk in range(k):
                            for j in range(c):
                                if D[kk][j]:
                                    eqs[(n, b3, i, j)][off + i * k + kk] -= coeff * D[kk][j]
    rows = []
    for key in sorted(eqs):
        row = {c: F.norm(v) for c, v in eqs[key].items() if F.norm(v)}
        if row:
            rows.append(row)
    return rows


def _homotopy_images(L: _Layout, H: _Layout) -> list[dict]:
    """Image of each coordinate vector of s under s -> d s + s d, in L's coordinates."""
    P, Q = L.P, L.Q
    alg, F = P.alg, P.field
    cols = []
    for (n, b), off in sorted(H.blocks.items(), key=lambda kv: kv[1]):
        r, c = H.shape(n, b)
        for i in range(r):
            for j in range(c):
                img: dict[int, object] = defaultdict(F.zero)
                # d^Q_{n+1} s_n lands at level n
                for b1, G in Q.d(n + 1).entries.items():
                    for b2, coeff in alg.mul(b1, b):
                        if (n, b2) not in L.blocks:
                            continue
                        base = L.blocks[(n, b2)]
                        _, cc = L.shape(n, b2)
                        for ii in range(len(G)):
                            if G[ii][i]:
                                img[base + ii * cc + j] += coeff * G[ii][i]
                # s_n d^P_{n+1} lands at level n + 1
                for b1, D in P.d(n + 1).entries.items():
                    for b2, coeff in alg.mul(b, b1):
                        if (n + 1, b2) not in L.blocks:
                            continue
                        base = L.blocks[(n + 1, b2)]
                        _, cc = L.shape(n + 1, b2)
                        for jj in range(cc):
                            if D[j][jj]:
                                img[base + i * cc + jj] += coeff * D[j][jj]
                cols.append({k: F.norm(v) for k, v in img.items() if F.norm(v)})
    return cols


@dataclass
class HomSpace:
    """Chain maps P -> Q, null-homotopic ones, and the quotient."""

    source: ProjComplex
    target: ProjComplex
    layout: _Layout
    cycles: list[list]             # basis of chain maps (coordinate vectors)
    boundaries: list[list]         # independent null-homotopic maps
    witnesses: list[dict[int, AMatrix]]   # s with d s + s d = boundaries[i]
    quotient: list[list]           # chain maps spanning a complement of the boundaries

    @property
    def dim(self) -> int:
        return len(self.quotient)

    @property
    def cycle_dim(self) -> int:
        return len(self.cycles)

    def chain_map(self, vec) -> ChainMap:
        return ChainMap(self.source, self.target, self.layout.decode(vec))

    def basis(self) -> list[ChainMap]:
        return [self.chain_map(v) for v in self.quotient]

    def check(self) -> bool:
        """Every stored chain map commutes and every witness reproduces its map."""
        F = self.source.field
        for v in self.cycles:
            if not self.chain_map(v).is_chain_map():
                return False
        for v, s in zip(self.boundaries, self.witnesses):
            f = self.chain_map(v)
            for n in set(self.source.levels) | set(self.target.levels):
                ds = self.target.d(n + 1).compose(_at(s, n, self.source, self.target, 1), F)
                sd = _at(s, n - 1, self.source, self.target, 1).compose(self.source.d(n), F)
                if ds.add(sd, 1, F) != f.at(n):
                    return False
        return True


def _at(s: dict[int, AMatrix], n: int, P: ProjComplex, Q: ProjComplex, offset: int) -> AMatrix:
    return s.get(n) or AMatrix(P.alg, P.rank(n), Q.rank(n + offset))


def chain_map_space(P: ProjComplex, Q: ProjComplex) -> tuple[_Layout, list[list], list[int]]:
    L = _Layout(P, Q, 0)
    basis, free = linalg.kernel(_chain_equations(L), L.size, P.field)
    return L, basis, free


def hom_complex(P: ProjComplex, Q: ProjComplex) -> HomSpace:
    if P.alg != Q.alg:
        raise ValueError("complexes over different algebras")
    F = P.field
    L, Z, _ = chain_map_space(P, Q)
    H = _Layout(P, Q, 1)
    images = _homotopy_images(L, H)
    dense = [[v.get(k, F.zero()) for k in range(L.size)] for v in images]
    keep = linalg.column_space_basis(dense, L.size, F) if dense else []
    boundaries = [dense[i] for i in keep]
    witnesses = []
    for i in keep:
        unit = [F.zero()] * H.size
        unit[i] = F.one()
        witnesses.append(H.decode(unit))
    both = boundaries + Z
    idx = linalg.column_space_basis(both, L.size, F) if both else []
    quotient = [both[i] for i in idx if i >= len(boundaries)]
    return HomSpace(P, Q, L, Z, boundaries, witnesses, quotient)


def _projector(hom: HomSpace):
    """Coordinates of a chain map along ``hom.quotient`` modulo boundaries."""
    F = hom.source.field
    cols = hom.boundaries + hom.quotient
    k = len(cols)
    n = hom.layout.size
    rows = linalg.transpose(cols, n)
    sel = linalg.column_space_basis(rows, k, F)[:k]
    Sinv = linalg.inverse([rows[i] for i in sel], F)
    nb = len(hom.boundaries)

    def coords(v):
        x = [F.norm(sum((Sinv[i][j] * v[sel[j]] for j in range(k)), F.zero())) for i in range(k)]
        return x[nb:]
    return coords


def endo_algebra(P: ProjComplex, hom: HomSpace | None = None) -> FiniteAlgebra:
    """End(P) in the homotopy category, on the quotient basis of hom_complex(P, P)."""
    hom = hom_complex(P, P) if hom is None else hom
    F = P.field
    maps = hom.basis()
    proj = _projector(hom) if maps else None
    table = []
    for f in maps:
        row = []
        for g in maps:
            fg = f.compose(g)
            row.append(proj(hom.layout.encode(fg.maps)))
        table.append(row)
    return FiniteAlgebra(table, F)


def is_indecomposable(P: ProjComplex) -> bool:
    """End(P) modulo its radical is one-dimensional."""
    if P.is_zero():
        raise ValueError("the zero complex is not indecomposable")
    return endo_algebra(P).is_local()


def _invertible_at_every_level(maps: dict[int, AMatrix], P: ProjComplex, F) -> bool:
    alg = P.alg
    for n in P.levels:
        m = maps.get(n)
        for x, c in P.rank(n).items():
            blk = m.entries.get(alg.e(x)) if m is not None else None
            if blk is None or not linalg.det(blk, F):
                return False
    return True


def iso_in_homotopy(P: ProjComplex, Q: ProjComplex, seed: int = ISO_SEED, tries: int = 8,
                    exhaustive_budget: int = 20_000) -> IsoResult:
    """For minimal complexes, homotopy equivalence is isomorphism of complexes.

    Search the chain maps P -> Q for one whose identity blocks are invertible
    at every level.
    """
    if not (P.is_minimal and Q.is_minimal):
        raise NonMinimalError("iso_in_homotopy needs minimal complexes")
    if P.alg != Q.alg:
        raise ValueError("complexes over different algebras")
    if vector_rank(P) != vector_rank(Q):
        return IsoResult(False, True, "vector ranks differ")
    if P.is_zero():
        return IsoResult(True, True, "both zero")
    F = P.field
    L, Z, _ = chain_map_space(P, Q)
    if not Z:
        return IsoResult(False, True, "no nonzero chain maps")
    if len(Z) != len(chain_map_space(P, P)[1]) or len(Z) != len(chain_map_space(Q, Q)[1]):
        return IsoResult(False, True, "chain map spaces have different dimensions")

    def combo(coeffs):
        vec = [F.zero()] * L.size
        for c, z in zip(coeffs, Z):
            if c:
                for j, x in enumerate(z):
                    if x:
                        vec[j] = F.norm(vec[j] + c * x)
        return L.decode(vec)

    rng = random.Random(seed)
    for _ in range(tries):
        if F.p:
            coeffs = [rng.randrange(F.p) for _ in Z]
        else:
            coeffs = [F(rng.randint(-10 ** 6, 10 ** 6)) for _ in Z]
        if _invertible_at_every_level(combo(coeffs), P, F):
            return IsoResult(True, True, "chain map invertible at every level")
    if F.p and F.p ** len(Z) <= exhaustive_budget:
        for coeffs in itertools.product(range(F.p), repeat=len(Z)):
            if _invertible_at_every_level(combo(coeffs), P, F):
                return IsoResult(True, True, "chain map invertible at every level")
        return IsoResult(False, True, "exhaustive search found no invertible chain map")
    return IsoResult(False, False, "no invertible chain map among random samples")
