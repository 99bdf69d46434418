import itertools

import pytest
from hypothesis import settings

from radsq import linalg
from radsq.quiver import Arrow, Quiver, parse_quiver
from radsq.reps import BoxRep

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _rational_field():
    with linalg.use_field(linalg.QQ):
        yield


def quiver_from_pairs(n, pairs):
    vs = tuple(chr(ord("a") + i) for i in range(n))
    return Quiver(vs, tuple(Arrow(f"x{k}", vs[s], vs[t]) for k, (s, t) in enumerate(pairs)))


def all_connected_quivers(max_vertices, max_arrows):
    """Every connected quiver (as an arrow multiset on labelled vertices)."""
    for n in range(1, max_vertices + 1):
        slots = list(itertools.product(range(n), repeat=2))
        for m in range(n - 1, max_arrows + 1):
            for pairs in itertools.combinations_with_replacement(slots, m):
                q = quiver_from_pairs(n, pairs)
                if q.is_connected():
                    yield q


def random_box_rep(q, rng, levels=(-1, 0, 1, 2), max_dim=2, density=0.6):
    """A random finitely supported companion-quiver representation."""
    dims = {(x, n): rng.randint(0, max_dim) for x in q.vertices for n in levels}
    mats = {}
    for a in q.arrows:
        for n in levels:
            r, c = dims.get((a.src, n - 1), 0), dims.get((a.tgt, n), 0)
            if r and c:
                mats[(a.id, n)] = [[rng.randint(-2, 2) if rng.random() < density else 0
                                    for _ in range(c)] for _ in range(r)]
    return BoxRep(q, dims, mats)


Q = parse_quiver
LOOP = Q("vertex a\narrow x: a -> a")
A2 = Q("vertex a b\narrow x: a -> b")
A3 = Q("vertex a b c\narrow x1: a -> b\narrow x2: b -> c")
KRONECKER = Q("vertex a b\narrow x: a -> b\narrow y: a -> b")
CYCLE2 = Q("vertex a b\narrow x: a -> b\narrow y: b -> a")
CYCLE3 = Q("vertex a b c\narrow x: a -> b\narrow y: b -> c\narrow z: c -> a")
D4 = Q("vertex c p q r\narrow y1: p -> c\narrow y2: q -> c\narrow y3: r -> c")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
