"""Command-line interface.

Exit status: 0 on success, 1 on input errors (unreadable or malformed files,
unknown options, wild input to ``indec``/``derived``), 2 when a window or
search budget is exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import BACKEND, __version__, linalg
from .box import WindowError, build_window, component_labels, epsilon, epsilon_bruteforce, window_components
from .catalog import CATALOG
from .classify import Label, classify, explain
from .complexes import NonMinimalError, beta, beta_resolution, is_in_X, vector_rank
from .derived import indec_derived_objects
from .finite_algebra import SearchBudgetExceeded
from .oracle import ISO_SEED, endo_algebra, hom_complex, homology, is_indecomposable, iso_in_homotopy
from .quiver import QuiverParseError
from .reps import Bounds, WildInputError, enumerate_indecomposables
from .serialize import (boxrep_to_dict, complex_from_dict, complex_to_dict, dumps, load_quiver,
                        quiver_to_dict, window_to_dict)

__all__ = ["main", "RunConfig", "render_report"]


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    field: linalg.Field
    fmt: str
    seed: int | None
    window: tuple[int, int] | None = None
    bounds: Bounds | None = None


def _parse_window(s: str) -> tuple[int, int]:
    try:
        lo, hi = s.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like LO..HI, got {s!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window {s} has lo > hi")
    return lo, hi


def _parse_field(s: str) -> linalg.Field:
    if s.upper() in ("Q", "QQ", "0"):
        return linalg.QQ
    try:
        return linalg.GF(int(s.upper().removeprefix("GF(").removesuffix(")")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"field must be QQ or a prime, got {s!r}: {exc}")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _lambdas(s: str) -> tuple:
    try:
        return tuple(Fraction(x) for x in s.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad lambda list {s!r}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")


def _quiver(path: str):
    try:
        return load_quiver(_read(path))
    except QuiverParseError as exc:
        raise InputError(f"{path}: {exc}")
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}")


def _complex(path: str, cfg: RunConfig):
    try:
        return complex_from_dict(json.loads(_read(path)), cfg.field)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: malformed complex: {exc}")


# ---------------------------------------------------------------- rendering

def render_report(result: dict, fmt: str) -> str:
    """Structured results are JSON; text mode uses the ``text`` field or a
    flat key/value listing."""
    if fmt == "json":
        return dumps({k: v for k, v in result.items() if k != "text"})
    if "text" in result:
        return result["text"].rstrip("\n") + "\n"
    return "".join(f"{k}: {v}\n" for k, v in result.items())


def _ranks_text(P) -> str:
    """e.g. ``P2=a P1=2a+b``: the projectives at each level, top first."""
    def term(r):
        return "+".join(f"{m}{x}" if m > 1 else x for x, m in sorted(r.items()))
    return " ".join(f"P{n}={term(r)}" for n, r in vector_rank(P).items()) or "0"


def _bounds_text(b: Bounds) -> str:
    lam = ",".join(str(x) for x in b.lambda_samples)
    return f"max_total_dim={b.max_total_dim} max_band_mult={b.max_band_mult} lambda={lam}"


# ---------------------------------------------------------------- commands

def cmd_classify(args, cfg):
    v = classify(_quiver(args.file))
    out = v.as_dict()
    if args.explain:
        out["explanation"] = explain(v)
    text = explain(v) if args.explain else f"{v.label.name}"
    return {**out, "text": text}


def cmd_epsilon(args, cfg):
    q = _quiver(args.file)
    if not q.is_connected():
        raise InputError("epsilon needs a connected quiver")
    r = epsilon(q)
    out = {"epsilon": r.epsilon, "has_closed_walks": r.has_closed_walks,
           "certificate": r.certificate_text(), "walk_condition": r.epsilon == 0}
    lines = [f"epsilon = {r.epsilon}", f"certificate: {r.certificate_text()}"]
    if args.brute is not None:
        b = epsilon_bruteforce(q, args.brute)
        out["bruteforce"] = {"max_len": args.brute, "epsilon": b}
        lines.append(f"brute force (walks of length <= {args.brute}): {b}")
    out["text"] = "\n".join(lines)
    return out


def cmd_box(args, cfg):
    q = _quiver(args.file)
    w = build_window(q, *args.window)
    out = window_to_dict(w)
    text = [f"window {w.lo}..{w.hi}: {len(w.vertices)} vertices, {len(w.arrows)} arrows"]
    text += [f"  {a['id']}: {a['src']} -> {a['tgt']}" for a in out["arrows"]]
    return {**out, "text": "\n".join(text)}


def cmd_components(args, cfg):
    q = _quiver(args.file)
    w = build_window(q, *args.window)
    pieces = window_components(w)
    labels = {}
    if q.is_connected():
        labels = {f"{x}@{n}": lab for (x, n), lab in component_labels(w).items()}
    out = {"epsilon": epsilon(q).epsilon if q.is_connected() else None,
           "labels": labels,
           "components": [[f"{x}@{n}" for x, n in p] for p in pieces]}
    text = [f"{len(pieces)} window components"]
    for p in out["components"]:
        lab = {labels.get(v) for v in p} if labels else set()
        text.append(f"  label {','.join(map(str, sorted(lab)))}: {' '.join(p)}")
    return {**out, "text": "\n".join(text)}


def _check_tame(q):
    v = classify(q)
    if v.label is Label.WILD:
        raise InputError("derived wild quiver; nothing to enumerate\n" + explain(v))


def cmd_indec(args, cfg):
    q = _quiver(args.file)
    _check_tame(q)
    en = enumerate_indecomposables(build_window(q, *args.window), cfg.bounds)
    objs = []
    text = [f"{len(en.objects)} objects ({_bounds_text(cfg.bounds)})"]
    for M in en.objects:
        d = boxrep_to_dict(M)
        d.pop("quiver")
        objs.append(d)
        dims = " ".join(f"{k}:{v}" for k, v in d["dims"].items())
        text.append(f"  [{M.family}] copy {M.copy}: {dims}")
    text += _band_lines(en.objects)
    text += [f"note: {n}" for n in en.notes] + [f"missing: {m}" for m in en.missing]
    return {"count": len(objs), "bounds": _bounds_dict(cfg.bounds), "objects": objs,
            "notes": en.notes, "missing": en.missing, "complete": en.complete,
            "text": "\n".join(text)}


def _band_lines(reps) -> list[str]:
    fams: dict[tuple, list] = {}
    for M in reps:
        if M.family == "band":
            m, lam = M.params
            fams.setdefault((M.copy, m), []).append(linalg.format_scalar(lam))
    out = []
    for (copy, m), lams in sorted(fams.items(), key=lambda kv: (kv[0][0] or 0, kv[0][1])):
        shift = "" if copy in (None, 0) else f"[{copy}]"
        out.append(f"band family P•({m}, t){shift}, samples t = {','.join(lams)}")
    return out


def _bounds_dict(b: Bounds) -> dict:
    return {"max_total_dim": b.max_total_dim, "max_band_mult": b.max_band_mult,
            "lambda_samples": [linalg.format_scalar(x) for x in b.lambda_samples]}


def cmd_derived(args, cfg):
    q = _quiver(args.file)
    _check_tame(q)
    res = indec_derived_objects(build_window(q, *args.window), cfg.bounds, args.depth)
    objs = []
    text = [f"{len(res.objects)} complexes, {len(res.beta_classes)} beta objects "
            f"({_bounds_text(cfg.bounds)})"]
    for o in res.objects:
        objs.append({"name": o.name, "in_X": o.in_X,
                     "vector_rank": {str(n): r for n, r in vector_rank(o.complex).items()},
                     "complex": complex_to_dict(o.complex)})
        text.append(f"  {o.name}  {_ranks_text(o.complex)}{'  in X' if o.in_X else ''}")
    betas = []
    for c in res.beta_classes:
        rep = res.objects[c.representative_index]
        betas.append({"name": f"β({rep.name})", "representative": c.representative_index,
                      "members": c.members, "kernel": {k: v for k, v in c.representative.kernel.dims.items() if v},
                      "attached_level": c.representative.t + 1,
                      "window_limited": c.window_limited})
        text.append(f"  β({rep.name}): {c.representative.summary()}; class of {len(c.members)}"
                    f"{', window-limited' if c.window_limited else ''}")
    text += _band_lines(o.source for o in res.objects)
    text += [f"note: {n}" for n in res.enumeration.notes + res.notes]
    text += [f"missing: {m}" for m in res.enumeration.missing]
    return {"count": len(objs), "bounds": _bounds_dict(cfg.bounds), "resolution_cap": res.cap,
            "complexes": objs, "beta": betas, "notes": res.enumeration.notes + res.notes,
            "missing": res.enumeration.missing, "text": "\n".join(text)}


def cmd_beta(args, cfg):
    P = _complex(args.file, cfg)
    if P.is_zero():
        raise InputError("beta of the zero complex")
    b = beta(P)
    inx = is_in_X(P)
    out = {"top_level": b.t, "kernel": {k: v for k, v in b.kernel.dims.items() if v},
           "in_X": inx}
    text = [b.summary(), f"in X: {inx}"]
    if args.resolve is not None:
        try:
            R, cut = beta_resolution(b, b.t + args.resolve)
        except NonMinimalError as exc:
            raise InputError(str(exc))
        out["resolution"] = {k: v for k, v in complex_to_dict(R).items() if k != "quiver"}
        out["resolution_cut"] = cut
        text.append("resolution: " + _ranks_text(R) + (" (cut)" if cut else ""))
    return {**out, "text": "\n".join(text)}


def cmd_oracle(args, cfg):
    Ps = [_complex(f, cfg) for f in args.files]
    need = {"hom": 2, "iso": 2, "end": 1, "indec": 1, "homology": 1}[args.sub]
    if len(Ps) != need:
        raise InputError(f"oracle {args.sub} takes {need} complex file(s)")
    if args.sub == "hom":
        H = hom_complex(*Ps)
        out = {"chain_maps": H.cycle_dim, "null_homotopic": len(H.boundaries), "dim": H.dim}
        text = f"dim Hom = {H.dim} (chain maps {H.cycle_dim}, null-homotopic {len(H.boundaries)})"
    elif args.sub == "end":
        E = endo_algebra(Ps[0])
        out = {"dim": E.dim}
        if E.field.p == 0 or E.field.p > E.dim:
            out["radical_dim"] = len(E.radical_basis())
            out["semisimple_dim"] = E.semisimple_dim()
        text = ", ".join(f"{k} = {v}" for k, v in out.items())
    elif args.sub == "indec":
        if Ps[0].is_zero():
            raise InputError("the zero complex is not indecomposable")
        ind = is_indecomposable(Ps[0])
        out = {"indecomposable": ind}
        text = f"indecomposable: {ind}"
    elif args.sub == "iso":
        try:
            r = iso_in_homotopy(*Ps, seed=ISO_SEED if cfg.seed is None else cfg.seed)
        except NonMinimalError as exc:
            raise InputError(str(exc))
        out = {"iso": r.iso, "certified": r.certified, "reason": r.reason}
        text = f"isomorphic: {r.iso} ({r.reason})"
    else:
        h = homology(Ps[0])
        out = {"homology": {str(n): v for n, v in h.items()}}
        text = "\n".join(f"H_{n}: {v}" for n, v in h.items()) or "acyclic"
    return {**out, "text": text}


def cmd_catalog(args, cfg):
    entries = []
    text = []
    for e in CATALOG:
        v = classify(e.quiver)
        entries.append({"name": e.name, "description": e.description,
                        "quiver": quiver_to_dict(e.quiver), "label": v.label.name})
        text.append(f"{e.name:16s} {v.label.name:9s} {e.description}")
    return {"count": len(entries), "catalog": entries, "text": "\n".join(text)}


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_parse_field, default=linalg.QQ,
                        help="QQ (default) or a prime p for GF(p)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized searches (library defaults when omitted)")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    p = argparse.ArgumentParser(prog="radsq", description="Derived representation type and "
                                "indecomposable complexes of radical-square-zero algebras.")
    p.add_argument("--version", action="version", version=f"radsq {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("classify", parents=[common], help="derived representation type")
    s.add_argument("file")
    s.add_argument("--explain", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("epsilon", parents=[common], help="the walk invariant epsilon")
    s.add_argument("file")
    s.add_argument("--brute", type=_positive, metavar="L", help="cross-check with walks of length <= L")
    s.set_defaults(func=cmd_epsilon)

    for name, func, hlp in (("box", cmd_box, "a window of the companion quiver"),
                            ("components", cmd_components, "components of a window")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.add_argument("--window", type=_parse_window, required=True, metavar="LO..HI")
        s.set_defaults(func=func)

    for name, func, hlp in (("indec", cmd_indec, "indecomposable companion-quiver representations"),
                            ("derived", cmd_derived, "indecomposable objects of the derived category")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.add_argument("--window", type=_parse_window, default=(0, 5), metavar="LO..HI")
        s.add_argument("--max-dim", type=_positive, default=12)
        s.add_argument("--max-band", type=int, default=3)
        s.add_argument("--lambda", type=_lambdas, default=(1, 2, 3), dest="lambdas", metavar="L1,L2,...")
        if name == "derived":
            s.add_argument("--depth", type=int, default=None,
                           help="resolution levels computed above the highest complex")
        s.set_defaults(func=func)

    s = sub.add_parser("beta", parents=[common], help="attach the kernel above the top level")
    s.add_argument("file")
    s.add_argument("--resolve", type=int, default=None, metavar="K",
                   help="also resolve the kernel up to K levels above the top")
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("oracle", parents=[common], help="homotopy-category oracle")
    s.add_argument("sub", choices=("hom", "end", "indec", "iso", "homology"))
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("catalog", parents=[common], help="the bundled quiver catalog")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    bounds = None
    if hasattr(args, "max_dim"):
        try:
            bounds = Bounds(args.max_dim, args.max_band, args.lambdas,
                            0 if args.seed is None else args.seed)
        except ValueError as exc:
            print(f"radsq: {exc}", file=sys.stderr)
            return 1
    cfg = RunConfig(args.field, args.fmt, args.seed, getattr(args, "window", None), bounds)
    try:
        with linalg.use_field(cfg.field):
            result = args.func(args, cfg)
    except (InputError, WildInputError) as exc:
        print(f"radsq: {exc}", file=sys.stderr)
        return 1
    except (WindowError, SearchBudgetExceeded) as exc:
        print(f"radsq: budget exhausted: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render_report(result, cfg.fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
