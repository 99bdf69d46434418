"""Exact linear algebra over the rationals or a prime field.

Matrices are plain lists of rows.  Since a matrix with no rows carries no
width, every routine that needs the column count takes it explicitly.

The default field is the rationals.  Elimination over ``QQ`` is done on
sparse row dictionaries with :class:`fractions.Fraction` entries; dense
systems above a size threshold go through a certified multimodular route
(row reduction modulo word-size primes in the compiled kernel, CRT,
rational reconstruction, exact verification).
"""
from __future__ import annotations

import contextlib
import math
from fractions import Fraction
from typing import Iterator, Sequence

from . import kernels

__all__ = [
    "Field", "QQ", "GF", "get_field", "set_field", "use_field",
    "zeros", "identity", "matmul", "matadd", "matsub", "scale", "transpose",
    "block_diag", "is_zero", "rref", "nullspace", "kernel", "rank", "det", "inverse",
    "solve", "column_space_basis", "jordan_block", "format_scalar",
    "parse_scalar",
]


class Field:
    """An exact field: the rationals (``p == 0``) or GF(p)."""

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> Fraction | int:
        if self.p == 0:
            return x if isinstance(x, Fraction) else Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, x):
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    def norm(self, x):
        return x % self.p if self.p else x

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


_current = QQ


def get_field() -> Field:
    return _current


def set_field(field: Field) -> None:
    global _current
    _current = field


@contextlib.contextmanager
def use_field(field: Field) -> Iterator[Field]:
    previous = get_field()
    set_field(field)
    try:
        yield field
    finally:
        set_field(previous)


def _f(field: Field | None) -> Field:
    return _current if field is None else field


# ---------------------------------------------------------------- basics

def zeros(nrows: int, ncols: int, field: Field | None = None) -> list[list]:
    z = _f(field).zero()
    return [[z] * ncols for _ in range(nrows)]


def identity(n: int, field: Field | None = None) -> list[list]:
    F = _f(field)
    m = zeros(n, n, F)
    for i in range(n):
        m[i][i] = F.one()
    return m


def jordan_block(m: int, lam, field: Field | None = None) -> list[list]:
    """Upper triangular m x m Jordan block with eigenvalue ``lam``."""
    F = _f(field)
    J = zeros(m, m, F)
    for i in range(m):
        J[i][i] = F(lam)
        if i + 1 < m:
            J[i][i + 1] = F.one()
    return J


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None,
           ncols: int | None = None, field: Field | None = None) -> list[list]:
    F = _f(field)
    if inner is None:
        inner = len(B) if B else (len(A[0]) if A else 0)
    if ncols is None:
        ncols = len(B[0]) if B else 0
    z = F.zero()
    out = []
    for row in A:
        acc = [z] * ncols
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(ncols):
                    b = bk[j]
                    if b:
                        acc[j] = acc[j] + a * b
        if F.p:
            acc = [x % F.p for x in acc]
        out.append(acc)
    return out


def matadd(A, B, field: Field | None = None) -> list[list]:
    F = _f(field)
    return [[F.norm(a + b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(A, B, field: Field | None = None) -> list[list]:
    F = _f(field)
    return [[F.norm(a - b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, A, field: Field | None = None) -> list[list]:
    F = _f(field)
    return [[F.norm(c * a) for a in row] for row in A]


def transpose(A, ncols: int) -> list[list]:
    return [[row[j] for row in A] for j in range(ncols)]


def block_diag(blocks: Sequence[tuple[Sequence[Sequence], int, int]],
               field: Field | None = None) -> list[list]:
    """Block diagonal matrix; each block is given as ``(rows, nrows, ncols)``."""
    nr = sum(b[1] for b in blocks)
    nc = sum(b[2] for b in blocks)
    out = zeros(nr, nc, field)
    r0 = c0 = 0
    for rows, r, c in blocks:
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = rows[i][j]
        r0 += r
        c0 += c
    return out


def is_zero(A) -> bool:
    return not any(any(row) for row in A)


# ---------------------------------------------------------------- elimination

def _sparse_rref(rows: Sequence[Sequence], ncols: int, F: Field):
    """Gauss-Jordan on sparse row dicts.  Returns (pivot rows, pivot columns).

    Input rows may be dense sequences or ``{column: value}`` dicts.
    """
    p = F.p
    work = []
    for row in rows:
        items = row.items() if isinstance(row, dict) else enumerate(row)
        d = {j: F(v) for j, v in items if v}
        if p:
            d = {j: v for j, v in d.items() if v}
        if d:
            work.append(d)
    pivots: list[int] = []
    prow: list[dict] = []
    active = work
    for col in range(ncols):
        best = None
        for i, r in enumerate(active):
            if col in r and (best is None or len(r) < len(active[best])):
                best = i
        if best is None:
            continue
        piv = active.pop(best)
        inv = F.inv(piv[col])
        if inv != 1:
            piv = {j: F.norm(v * inv) for j, v in piv.items()}
        for group in (active, prow):
            for r in group:
                c = r.get(col)
                if c:
                    for j, v in piv.items():
                        nv = F.norm(r.get(j, 0) - c * v)
                        if nv:
                            r[j] = nv
                        else:
                            r.pop(j, None)
        active = [r for r in active if r]
        pivots.append(col)
        prow.append(piv)
        if not active:
            break
    return prow, pivots


def rref(rows: Sequence[Sequence], ncols: int, field: Field | None = None):
    """Reduced row echelon form: ``(nonzero rows, pivot columns)``."""
    F = _f(field)
    prow, pivots = _sparse_rref(rows, ncols, F)
    z = F.zero()
    dense = []
    for r in prow:
        row = [z] * ncols
        for j, v in r.items():
            row[j] = v
        dense.append(row)
    return dense, pivots


def _nullspace_from_rref(prow: list[dict], pivots: list[int], ncols: int, F: Field):
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    z = F.zero()
    basis = []
    for fcol in free:
        v = [z] * ncols
        v[fcol] = F.one()
        for r, pc in zip(prow, pivots):
            c = r.get(fcol)
            if c:
                v[pc] = F.norm(-c)
        basis.append(v)
    return basis


MODULAR_THRESHOLD = 6000


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field | None = None,
              method: str = "auto") -> list[list]:
    """Basis of ``{v : A v = 0}`` as a list of column vectors.

    ``method`` is ``"sparse"``, ``"modular"`` (rationals only) or ``"auto"``.
    """
    F = _f(field)
    if method == "auto":
        dense = sum(len(row) if isinstance(row, dict) else sum(1 for v in row if v)
                    for row in rows)
        big = len(rows) * ncols >= MODULAR_THRESHOLD and dense * 4 >= len(rows) * ncols
        method = "modular" if (F.p == 0 and big) else "sparse"
    if method == "modular":
        if F.p != 0:
            raise ValueError("modular nullspace applies to the rationals only")
        if any(isinstance(row, dict) for row in rows):
            rows = [_densify(row, ncols) if isinstance(row, dict) else row for row in rows]
        basis = _modular_nullspace(rows, ncols)
        if basis is not None:
            return basis
    prow, pivots = _sparse_rref(rows, ncols, F)
    return _nullspace_from_rref(prow, pivots, ncols, F)


def kernel(rows: Sequence[Sequence], ncols: int, field: Field | None = None):
    """Nullspace basis together with its free columns.

    Each basis vector is 1 at its own free column and 0 at the others, so the
    coordinates of any kernel vector are its entries at the free columns.
    """
    basis = nullspace(rows, ncols, field)
    free = [max(j for j, x in enumerate(v) if x) for v in basis]
    return basis, free


def _densify(row: dict, ncols: int) -> list:
    out = [0] * ncols
    for j, v in row.items():
        out[j] = v
    return out


def rank(rows: Sequence[Sequence], ncols: int, field: Field | None = None) -> int:
    return len(_sparse_rref(rows, ncols, _f(field))[1])


def column_space_basis(vectors: Sequence[Sequence], dim: int,
                       field: Field | None = None) -> list[int]:
    """Indices of a maximal independent subfamily of ``vectors`` (greedy, in order)."""
    F = _f(field)
    if not vectors:
        return []
    cols = transpose(list(vectors), dim) if dim else []
    _, pivots = _sparse_rref(cols, len(vectors), F)
    return pivots


def solve(A: Sequence[Sequence], b: Sequence, ncols: int, field: Field | None = None):
    """One solution x of A x = b, or None if inconsistent."""
    F = _f(field)
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    prow, pivots = _sparse_rref(aug, ncols + 1, F)
    if pivots and pivots[-1] == ncols:
        return None
    x = [F.zero()] * ncols
    for r, pc in zip(prow, pivots):
        x[pc] = r.get(ncols, F.zero())
    return x


def det(A: Sequence[Sequence], field: Field | None = None):
    F = _f(field)
    n = len(A)
    M = [[F(v) for v in row] for row in A]
    d = F.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return F.zero()
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = F.norm(-d)
        d = F.norm(d * M[c][c])
        inv = F.inv(M[c][c])
        for r in range(c + 1, n):
            f = M[r][c]
            if f:
                f = F.norm(f * inv)
                M[r] = [F.norm(a - f * b) for a, b in zip(M[r], M[c])]
    return d


def inverse(A: Sequence[Sequence], field: Field | None = None) -> list[list]:
    F = _f(field)
    n = len(A)
    aug = [list(row) + ident for row, ident in zip(A, identity(n, F))]
    dense, pivots = rref(aug, 2 * n, F)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in dense[:n]]


# ---------------------------------------------------------------- modular route

_PRIMES = (2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
           2147483543, 2147483497, 2147483489, 2147483477, 2147483423)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction) and v.denominator != 1:
                den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def _ratrecon(a: int, m: int) -> Fraction | None:
    """Rational reconstruction of a mod m with |num|, den <= sqrt(m/2)."""
    a %= m
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _better_profile(a: list[int], b: list[int]) -> bool:
    # a good prime sees the largest rank and the earliest pivot columns
    return (len(a), [-c for c in a]) > (len(b), [-c for c in b])


def _modular_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list] | None:
    A = _integer_rows(rows)
    nrows = len(A)
    best_piv = None
    residues: list[list[list[int]]] = []
    moduli: list[int] = []
    for p in _PRIMES:
        flat = [v % p for row in A for v in row]
        red, piv = kernels.rref_mod_p(flat, nrows, ncols, p)
        if best_piv is None or _better_profile(piv, best_piv):
            best_piv = piv
            residues, moduli = [], []
        elif piv != best_piv:
            continue
        residues.append([red[i * ncols:(i + 1) * ncols] for i in range(len(piv))])
        moduli.append(p)
        # combine by CRT
        M = 1
        comb = [[0] * ncols for _ in best_piv]
        for res, p_ in zip(residues, moduli):
            for i, row in enumerate(res):
                crow = comb[i]
                for j, v in enumerate(row):
                    # x = crow[j] mod M, x = v mod p_
                    t = ((v - crow[j]) * pow(M, -1, p_)) % p_
                    crow[j] = crow[j] + M * t
            M *= p_
        recon = []
        ok = True
        for crow in comb:
            rr = {}
            for j, v in enumerate(crow):
                if v:
                    f = _ratrecon(v, M)
                    if f is None:
                        ok = False
                        break
                    rr[j] = f
            if not ok:
                break
            recon.append(rr)
        if not ok:
            continue
        basis = _nullspace_from_rref(recon, best_piv, ncols, QQ)
        if _verify_kernel(A, basis):
            return basis
    return None


def _verify_kernel(A: list[list[int]], basis: list[list[Fraction]]) -> bool:
    for v in basis:
        den = 1
        for x in v:
            if x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
        iv = [(int(x * den), j) for j, x in enumerate(v) if x]
        for row in A:
            if sum(row[j] * x for x, j in iv):
                return False
    return True


# ---------------------------------------------------------------- scalars io

def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_scalar(s: str | int, field: Field | None = None):
    F = _f(field)
    return F(Fraction(s) if isinstance(s, str) else s)
