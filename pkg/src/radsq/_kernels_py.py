"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_kernels`` extension; selected
by :mod:`radsq.kernels` when the extension is unavailable or disabled.
"""
from __future__ import annotations


def rref_mod_p(flat: list[int], nrows: int, ncols: int, p: int):
    """Row reduce a row-major matrix over GF(p).

    Entries must already lie in ``[0, p)``.  Returns the reduced matrix (same
    layout, pivot rows first) and the list of pivot columns.
    """
    rows = [flat[i * ncols:(i + 1) * ncols] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [v * inv % p for v in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return [v for row in rows for v in row], pivots


def closed_walk_weight_masks(nv: int, src: list[int], tgt: list[int], max_len: int) -> list[int]:
    """Signed weights of nonempty closed walks of length <= max_len.

    For each start vertex returns a bitmask whose bit ``w + max_len`` is set
    when some closed walk at that vertex has (#direct - #inverse) = w.  Every
    arrow contributes a direct letter src -> tgt (+1) and an inverse letter
    tgt -> src (-1).
    """
    L = max_len
    out = []
    for s in range(nv):
        reach = [0] * nv
        reach[s] = 1 << L
        closed = 0
        for _ in range(L):
            nxt = [0] * nv
            for a, b in zip(src, tgt):
                if reach[a]:
                    nxt[b] |= reach[a] << 1
                if reach[b]:
                    nxt[a] |= reach[b] >> 1
            reach = nxt
            closed |= reach[s]
        out.append(closed)
    return out
