"""Corpus construction: named fixtures, parametric families, random triangulations.

Randomness comes from a 64-bit SplitMix generator so that corpora are
reproducible from ``(family, n, seed, steps)`` on any platform::

    state <- state + 0x9E3779B97F4A7C15        (mod 2**64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2**64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB (mod 2**64)
    output z xor (z >> 31)

``below(k)`` draws ``output mod k``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .errors import UnknownFixture
from .plane_graph import Dart, PlaneGraph, _components, _trace, build

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return self.next() % k


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    seed: int = 0
    steps: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("stacked", "flipwalk") and self.n < 3:
            raise ValueError("stacked triangulations need n >= 3")
        if self.family == "wheel" and self.n < 3:
            raise ValueError("wheel rim needs at least 3 vertices")
        if self.family == "fan_strip" and self.n < 1:
            raise ValueError("fan_strip needs k >= 1")
        if self.steps < 0:
            raise ValueError("steps must be non-negative")

    def generate(self) -> PlaneGraph:
        if self.family == "stacked":
            return stacked(self.n, self.seed)
        if self.family == "flipwalk":
            return flip_walk(stacked(self.n, self.seed), self.steps, self.seed ^ 0x5DEECE66D)
        if self.family == "wheel":
            return wheel(self.n)
        if self.family == "fan_strip":
            return fan_strip(self.n)
        raise ValueError("fixtures are generated with fixture(name)")


FAMILIES = ("stacked", "flipwalk", "wheel", "fan_strip", "fixture")


# ---------------------------------------------------------------------------
# embedding helpers
# ---------------------------------------------------------------------------


def from_coordinates(coords: Mapping[int, tuple[float, float]], edges: Iterable[tuple[int, int]]) -> PlaneGraph:
    """Embed a straight-line drawing: rotations by angle, outer face by signed area."""
    nbrs: dict[int, list[int]] = {v: [] for v in coords}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = {}
    for v, ws in nbrs.items():
        x0, y0 = coords[v]
        rot[v] = tuple(sorted(ws, key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0)))
    cycles, _ = _trace(rot)
    best: dict[int, tuple[float, Dart]] = {}
    where = {v: i for i, comp in enumerate(_components(rot)) for v in comp}
    for cyc in cycles:
        area = 0.0
        for a, b in cyc:
            (xa, ya), (xb, yb) = coords[a], coords[b]
            area += xa * yb - xb * ya
        ci = where[cyc[0][0]]
        if ci not in best or area < best[ci][0]:
            best[ci] = (area, cyc[0])
    return build(rot, [d for _, d in best.values()])


def from_triangles(triangles: Sequence[tuple[int, int, int]], outer: tuple[int, int, int]) -> PlaneGraph:
    """Triangulated sphere given by counterclockwise triangles; ``outer`` becomes unbounded.

    Each triangle ``(a, b, c)`` must be oriented consistently (counterclockwise
    seen from outside); it contributes "c follows b" at ``a`` and so on.
    """
    nxt: dict[int, dict[int, int]] = {}
    for a, b, c in triangles:
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            nxt.setdefault(p, {})[q] = r
    rot = {}
    for v, m in nxt.items():
        start = min(m)
        seq = [start]
        w = m[start]
        while w != start:
            seq.append(w)
            w = m[w]
        if len(seq) != len(m):
            raise ValueError(f"triangles around {v} do not form a disc")
        rot[v] = tuple(seq)
    a, b, _ = outer
    return build(rot, [(a, b)])


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

# Figure-2 labels share ids across the four cases.
U, X1, X2, Y, W1, W2, X = 0, 1, 2, 3, 4, 5, 6

_FIG2_COORDS = {
    U: (0.0, 0.0),
    X1: (-1.0, 1.0),
    X2: (1.0, 1.0),
    W1: (-2.0, -2.0),
    W2: (2.0, -2.0),
    Y: (0.0, -3.0),
    X: (0.0, -1.0),
}
_FIG2_BASE = [(U, X1), (U, X2), (U, W1), (U, W2), (X1, X2), (X2, W2), (W1, X1), (W1, W2)]
_FIG2_EDGES = {
    "fig2a": _FIG2_BASE + [(Y, W1), (Y, W2)],
    "fig2b": _FIG2_BASE + [(U, X), (X, W1), (X, W2)],
    "fig2c": list(_FIG2_BASE),
    "fig2d": _FIG2_BASE + [(U, X), (X, W1), (X, W2), (Y, W1), (Y, W2)],
}

# octahedron: outer a b c, inner d e f with d near ab, e near bc, f near ca
_OCTA = [
    (0, 1, 3), (1, 4, 3), (1, 2, 4), (2, 5, 4), (2, 0, 5), (0, 3, 5), (3, 4, 5), (0, 2, 1),
]


def _icosahedron_triangles() -> list[tuple[int, int, int]]:
    top, bottom = 0, 11
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    tris = []
    for i in range(5):
        j = (i + 1) % 5
        tris.append((top, up[i], up[j]))
        tris.append((up[i], lo[i], up[j]))
        tris.append((up[j], lo[i], lo[j]))
        tris.append((bottom, lo[j], lo[i]))
    return tris


def _fixture_table():
    return {
        "k4": lambda: from_triangles([(0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 2, 1)], (0, 2, 1)),
        "octahedron": lambda: from_triangles(_OCTA, (0, 2, 1)),
        "icosahedron": lambda: from_triangles(_icosahedron_triangles(), (0, 1, 2)),
        "stack5": lambda: from_coordinates(
            {0: (0, 0), 1: (8, 0), 2: (4, 8), 3: (4, 3), 4: (4, 1)},
            [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 3)],
        ),
        "pinwheel8": lambda: from_coordinates(
            {0: (0, 0), 1: (0, -1), 2: (1, 0), 3: (0, 1), 4: (-1, 0), 5: (1, -1), 6: (1, 1), 7: (-1, 1)},
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
             (5, 1), (5, 2), (6, 2), (6, 3), (7, 3), (7, 4)],
        ),
        "octastack7": lambda: from_triangles(
            [t for t in _OCTA if t != (3, 4, 5)] + [(3, 4, 6), (4, 5, 6), (5, 3, 6)], (0, 2, 1)
        ),
        **{
            name: (lambda e=edges: from_coordinates({v: _FIG2_COORDS[v] for v in {w for ed in e for w in ed}}, e))
            for name, edges in _FIG2_EDGES.items()
        },
    }


FIXTURE_NAMES = (
    "k4", "octahedron", "icosahedron", "fig2a", "fig2b", "fig2c", "fig2d",
    "stack5", "pinwheel8", "octastack7",
)


def fixture(name: str) -> PlaneGraph:
    table = _fixture_table()
    if name not in table:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return table[name]()


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------


def wheel(rim: int) -> PlaneGraph:
    """Hub 0 with rim 1..rim."""
    if rim < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    coords = {0: (0.0, 0.0)}
    for i in range(rim):
        t = 2 * math.pi * i / rim
        coords[i + 1] = (math.cos(t), math.sin(t))
    edges = [(0, i + 1) for i in range(rim)] + [(i + 1, (i + 1) % rim + 1) for i in range(rim)]
    return from_coordinates(coords, edges)


def fan_strip(k: int) -> PlaneGraph:
    """Square of a path on 2k+1 vertices: a triangulated strip, all vertices external."""
    if k < 1:
        raise ValueError("fan_strip needs k >= 1")
    n = 2 * k + 1
    coords = {i: (float(i), float(i % 2)) for i in range(n)}
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    return from_coordinates(coords, edges)


def stacked(n: int, seed: int) -> PlaneGraph:
    """Random stacked triangulation: insert vertices into uniformly chosen bounded faces."""
    if n < 3:
        raise ValueError("stacked triangulations need n >= 3")
    rng = SplitMix64(seed)
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    bounded = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.below(len(bounded))
        a, b, c = bounded[i]
        for p, q in ((a, b), (b, c), (c, a)):
            r = rot[p]
            r.insert(r.index(q) + 1, v)
        rot[v] = [a, b, c]
        bounded[i] = (a, b, v)
        bounded.append((b, c, v))
        bounded.append((c, a, v))
    return build({v: tuple(r) for v, r in rot.items()}, [(0, 2)])


def flip_walk(g: PlaneGraph, steps: int, seed: int) -> PlaneGraph:
    """Attempt ``steps`` random flips of internal edges of a triangulation.

    Each attempt picks an edge uniformly from the sorted edge list; external
    edges and flips that would duplicate an existing edge are skipped.
    """
    if steps <= 0:
        return g
    rng = SplitMix64(seed)
    rot = {v: list(r) for v, r in g.rotation.items()}
    adj = {v: set(r) for v, r in rot.items()}
    outer = set()
    for f in g.unbounded_faces():
        for a, b in f.darts:
            outer.add((a, b) if a < b else (b, a))
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    for _ in range(steps):
        i = rng.below(len(edges))
        a, b = edges[i]
        if (a, b) in outer:
            continue
        ra, rb = rot[a], rot[b]
        # faces: (a, b, c) left of a->b and (b, a, d) left of b->a
        c = rb[rb.index(a) - 1]
        d = ra[ra.index(b) - 1]
        if c == d or d in adj[c]:
            continue
        ra.remove(b)
        rb.remove(a)
        adj[a].discard(b)
        adj[b].discard(a)
        rc, rd = rot[c], rot[d]
        rc.insert(rc.index(a) + 1, d)
        rd.insert(rd.index(b) + 1, c)
        adj[c].add(d)
        adj[d].add(c)
        new = (c, d) if c < d else (d, c)
        del index[(a, b)]
        edges[i] = new
        index[new] = i
    return build({v: tuple(r) for v, r in rot.items()}, g.outer_darts)


# ---------------------------------------------------------------------------
# small WNT corpus
# ---------------------------------------------------------------------------


def corpus_bases(max_n: int = 12, seeds: int = 10) -> list[tuple[str, PlaneGraph]]:
    """Named base graphs with at most ``max_n`` vertices."""
    out = [(name, fixture(name)) for name in FIXTURE_NAMES]
    out += [(f"wheel{r}", wheel(r)) for r in range(3, max_n)]
    out += [(f"fan_strip{k}", fan_strip(k)) for k in range(1, (max_n - 1) // 2 + 1)]
    for n in range(4, max_n + 1):
        for s in range(seeds):
            out.append((f"stacked{n}s{s}", stacked(n, s)))
            if n >= 6:
                out.append((f"flipwalk{n}s{s}", GenSpec("flipwalk", n, s, 3 * n).generate()))
    return [(name, g) for name, g in out if len(g) <= max_n]


def wnt_corpus(max_n: int = 12, seeds: int = 10, max_deleted: int = 2) -> list[tuple[str, PlaneGraph]]:
    """Distinct WNTs: the bases plus every deletion of up to ``max_deleted`` vertices
    that leaves a WNT.  Names record the base and the deleted vertices."""
    from itertools import combinations

    from .plane_graph import delete_vertices
    from .wnt import is_wnt

    seen: set = set()
    out = []
    for name, g in corpus_bases(max_n, seeds):
        verts = sorted(g.vertices)
        for k in range(max_deleted + 1):
            for drop in combinations(verts, k):
                h = delete_vertices(g, drop) if drop else g
                if h.key() in seen or not is_wnt(h):
                    continue
                seen.add(h.key())
                out.append((f"{name}-{'.'.join(map(str, drop))}" if drop else name, h))
    return out
