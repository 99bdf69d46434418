"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both implementations are checked to agree on every input before timing.
"""
from __future__ import annotations

import argparse
import random
import timeit

from radsq import _kernels_py

try:
    from radsq import _kernels
except ImportError:
    _kernels = None

P = 2147483629


def rref_case(n: int, m: int, seed: int):
    rng = random.Random(seed)
    # rank-deficient: rows are combinations of n // 2 random rows
    base = [[rng.randrange(P) for _ in range(m)] for _ in range(n // 2)]
    rows = []
    for _ in range(n):
        cs = [rng.randrange(P) for _ in base]
        rows.append([sum(c * r[j] for c, r in zip(cs, base)) % P for j in range(m)])
    return [v for r in rows for v in r], n, m, P


def walk_case(nv: int, na: int, max_len: int, seed: int):
    rng = random.Random(seed)
    src = [rng.randrange(nv) for _ in range(na)]
    tgt = [rng.randrange(nv) for _ in range(na)]
    return nv, src, tgt, max_len


CASES = {
    "rref_mod_p 40x40": ("rref_mod_p", rref_case(40, 40, 1)),
    "rref_mod_p 120x90": ("rref_mod_p", rref_case(120, 90, 2)),
    "closed_walk_weight_masks 8v/12a L=12": ("closed_walk_weight_masks", walk_case(8, 12, 12, 3)),
    "closed_walk_weight_masks 20v/30a L=24": ("closed_walk_weight_masks", walk_case(20, 30, 24, 4)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the pure-Python timings are shown")
    print(f"{'case':42s} {'python (ms)':>12s} {'compiled (ms)':>14s} {'speedup':>8s}")
    for label, (fn, inp) in CASES.items():
        py = getattr(_kernels_py, fn)
        t_py = min(timeit.repeat(lambda: py(*inp), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{label:42s} {t_py:12.2f} {'-':>14s} {'-':>8s}")
            continue
        cy = getattr(_kernels, fn)
        if py(*inp) != cy(*inp):
            raise SystemExit(f"{label}: backends disagree")
        t_cy = min(timeit.repeat(lambda: cy(*inp), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:42s} {t_py:12.2f} {t_cy:14.2f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
