"""JSON serializations of quivers, representations, box representations and complexes.

Scalars are written as strings ``"p/q"`` (or integers modulo p in a prime field).
"""
from __future__ import annotations

import json
from collections import defaultdict
from typing import Any

from . import linalg
from .box import BoxWindow, arrow_name, vertex_name
from .complexes import Algebra, AMatrix, ProjComplex
from .linalg import Field, format_scalar, parse_scalar
from .quiver import Arrow, Quiver, parse_quiver, recognize_shape
from .reps import BoxRep, Representation

__all__ = [
    "quiver_to_dict", "quiver_from_dict", "rep_to_dict", "rep_from_dict", "boxrep_to_dict",
    "boxrep_from_dict", "complex_to_dict", "complex_from_dict", "window_to_dict", "dumps",
    "load_quiver",
]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def quiver_to_dict(q: Quiver, with_shape: bool = False) -> dict:
    out: dict[str, Any] = {
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in q.arrows],
    }
    if with_shape and q.vertices and q.is_connected():
        s = recognize_shape(q)
        out["shape"] = {"tag": s.name, "params": s.params()}
    return out


def quiver_from_dict(d: dict) -> Quiver:
    try:
        return Quiver(tuple(d["vertices"]),
                      tuple(Arrow(a["id"], a["src"], a["tgt"]) for a in d["arrows"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quiver: {exc}") from exc


def load_quiver(text: str) -> Quiver:
    """Parse either the line format or a JSON quiver."""
    if text.lstrip().startswith("{"):
        return quiver_from_dict(json.loads(text))
    return parse_quiver(text)


def _mat_out(m) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m]


def _mat_in(rows, F: Field) -> list[list]:
    return [[parse_scalar(x, F) for x in row] for row in rows]


def rep_to_dict(M: Representation) -> dict:
    return {
        "quiver": quiver_to_dict(M.quiver),
        "dims": {v: M.dims[v] for v in M.quiver.vertices},
        "mats": {a.id: _mat_out(M.mats[a.id]) for a in M.quiver.arrows},
    }


def rep_from_dict(d: dict, field: Field | None = None) -> Representation:
    F = linalg.get_field() if field is None else field
    q = quiver_from_dict(d["quiver"])
    return Representation(q, d["dims"], {a: _mat_in(m, F) for a, m in d.get("mats", {}).items()}, F)


def _split_name(name: str) -> tuple[str, int]:
    base, _, lvl = name.rpartition("@")
    if not base:
        raise ValueError(f"expected id@level, got {name!r}")
    return base, int(lvl)


def boxrep_to_dict(M: BoxRep) -> dict:
    out = {
        "quiver": quiver_to_dict(M.base),
        "dims": {vertex_name(x, n): k for (x, n), k in M.dims.items()},
        "mats": {arrow_name(a, n): _mat_out(m) for (a, n), m in M.mats.items()},
    }
    if M.copy is not None:
        out["copy"] = M.copy
    out["family"] = M.family
    out["params"] = [format_scalar(p) if not isinstance(p, (str, int)) else p for p in M.params]
    return out


def boxrep_from_dict(d: dict, field: Field | None = None) -> BoxRep:
    F = linalg.get_field() if field is None else field
    q = quiver_from_dict(d["quiver"])
    dims = {_split_name(k): v for k, v in d["dims"].items()}
    mats = {_split_name(k): _mat_in(m, F) for k, m in d.get("mats", {}).items()}
    return BoxRep(q, dims, mats, copy=d.get("copy"), family=d.get("family", "custom"),
                  params=tuple(d.get("params", ())), field=F)


def window_to_dict(w: BoxWindow) -> dict:
    q = w.quiver
    return {
        "lo": w.lo,
        "hi": w.hi,
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in q.arrows],
    }


def complex_to_dict(P: ProjComplex) -> dict:
    alg = P.alg
    levels = {str(n): dict(r) for n, r in sorted(P.ranks.items(), reverse=True)}
    diff = {}
    for n, d in sorted(P.diffs.items(), reverse=True):
        blocks: dict[tuple[str, str], list] = defaultdict(list)
        for b, m in d.entries.items():
            be = alg.basis[b]
            if be.kind != "a":
                raise ValueError("only minimal complexes are serialized")
            for i, row in enumerate(m):
                for j, v in enumerate(row):
                    if v:
                        blocks[(be.right, be.left)].append(
                            {"arrow": be.id, "coeff": format_scalar(v), "row": i, "col": j})
        diff[str(n)] = [{"from_vertex": y, "to_vertex": x, "entries": e}
                        for (y, x), e in sorted(blocks.items())]
    return {"quiver": quiver_to_dict(alg.quiver), "levels": levels, "diff": diff}


def complex_from_dict(d: dict, field: Field | None = None, alg: Algebra | None = None) -> ProjComplex:
    F = linalg.get_field() if field is None else field
    q = quiver_from_dict(d["quiver"])
    alg = Algebra(q) if alg is None or alg.quiver != q else alg
    ranks = {int(n): {x: int(m) for x, m in r.items()}
             for n, r in d.get("levels", {}).items()}
    diffs = {}
    for n, blocks in d.get("diff", {}).items():
        n = int(n)
        src, tgt = ranks.get(n, {}), ranks.get(n - 1, {})
        entries: dict[int, list[list]] = {}
        for blk in blocks:
            y, x = blk["from_vertex"], blk["to_vertex"]
            for e in blk["entries"]:
                a = q.arrow(e["arrow"])
                if (a.src, a.tgt) != (x, y):
                    raise ValueError(f"arrow {a.id} does not go from {x} to {y}")
                b = alg.arrow(a.id)
                if b not in entries:
                    entries[b] = linalg.zeros(tgt.get(x, 0), src.get(y, 0), F)
                try:
                    entries[b][e["row"]][e["col"]] = parse_scalar(e["coeff"], F)
                except IndexError as exc:
                    raise ValueError(f"entry outside the block at level {n}") from exc
        diffs[n] = AMatrix(alg, src, tgt, entries, F)
    return ProjComplex(alg, ranks, diffs, F)
