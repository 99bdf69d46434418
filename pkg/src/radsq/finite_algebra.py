"""Finite-dimensional associative algebras given by structure constants."""
from __future__ import annotations

import itertools
from typing import Sequence

from . import linalg
from .linalg import Field

__all__ = ["FiniteAlgebra", "SearchBudgetExceeded"]


class SearchBudgetExceeded(RuntimeError):
    pass


class FiniteAlgebra:
    """Algebra with basis e_0..e_{n-1} and ``table[i][j]`` = coordinates of e_i e_j.

    The algebra is assumed unital (endomorphism algebras are).
    """

    def __init__(self, table: Sequence[Sequence[Sequence]], field: Field | None = None):
        self.field = linalg.get_field() if field is None else field
        self.dim = len(table)
        self.table = [[list(map(self.field, v)) for v in row] for row in table]
        self._rad = None

    def mul(self, x: Sequence, y: Sequence) -> list:
        F = self.field
        out = [F.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] = F.norm(out[k] + c * t)
        return out

    def left_matrix(self, x: Sequence) -> list[list]:
        """Matrix of y -> x y in the basis (column j is x e_j)."""
        n = self.dim
        cols = [self.mul(x, [1 if k == j else 0 for k in range(n)]) for j in range(n)]
        return linalg.transpose(cols, n) if n else []

    def is_associative(self) -> bool:
        n = self.dim
        basis = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
        for a, b, c in itertools.product(basis, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
        return True

    # -- radical

    def _trace_form_valid(self) -> bool:
        p = self.field.p
        return p == 0 or p > self.dim

    def radical_basis(self) -> list[list]:
        """Basis of the Jacobson radical as the kernel of (x, y) -> Tr(L_{xy}).

        Exact in characteristic 0 and in characteristic p > dim.
        """
        if self._rad is not None:
            return self._rad
        if not self._trace_form_valid():
            raise SearchBudgetExceeded(
                f"trace-form radical needs characteristic 0 or > {self.dim}; use is_local()")
        F = self.field
        n = self.dim
        tr = [sum((self.table[k][j][j] for j in range(n)), F.zero()) for k in range(n)]
        gram = [[F.norm(sum((c * t for c, t in zip(self.table[i][j], tr)), F.zero()))
                 for j in range(n)] for i in range(n)]
        self._rad = linalg.nullspace(gram, n, F)
        return self._rad

    def semisimple_dim(self) -> int:
        return self.dim - len(self.radical_basis())

    def is_local(self, budget: int = 200_000) -> bool:
        """True when the algebra modulo its radical is the ground field."""
        if self.dim == 0:
            return False
        if self._trace_form_valid():
            return self.semisimple_dim() == 1
        p, n = self.field.p, self.dim
        if p ** n > budget:
            raise SearchBudgetExceeded(f"{p}^{n} elements exceed the search budget {budget}")
        nilpotent = 0
        for x in itertools.product(range(p), repeat=n):
            L = self.left_matrix(list(x))
            if _is_nilpotent(L, n, self.field):
                nilpotent += 1
            elif not linalg.det(L, self.field):
                return False
        return nilpotent == p ** (n - 1)


def _is_nilpotent(L: list[list], n: int, F: Field) -> bool:
    M = L
    for _ in range(n):
        if linalg.is_zero(M):
            return True
        M = linalg.matmul(M, L, n, n, F)
    return linalg.is_zero(M)
