"""Dominating 3-colorings: three vertex classes, each a dominating set.

Near-triangulations are colored by peeling.  Repeatedly delete an outer
vertex that carries no chord until a triangle remains, color the triangle with
three colors, then put the vertices back in reverse order.  A returning vertex
``v`` sees a properly colored boundary path ``a = p0, ..., pk = b``; it gets the
third color of ``a, b`` when those differ and otherwise the color missing from
``{c(a), c(p1)}``.  The outer cycle stays properly colored, and every closed
neighbourhood contains all three colors, so each class dominates.

Weak near-triangulations are handled block by block: bridges are ignored,
every other block is a near-triangulation, and blocks are glued along the
block-cut tree by permuting colors so that shared cutvertices agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ColoringFailed, NotNearTriangulation, NotWnt
from .plane_graph import PlaneGraph, blocks, induced
from .wnt import is_near_triangulation, is_wnt

EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class ThreeColoring:
    classes: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def color_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)

    def smallest(self) -> frozenset[int]:
        return min(self.classes, key=len)

    def to_json(self) -> dict:
        return {"classes": [sorted(c) for c in self.classes]}


def is_dominating_coloring(g: PlaneGraph, coloring: ThreeColoring) -> bool:
    cs = coloring.classes
    if sum(len(c) for c in cs) != len(g) or frozenset().union(*cs) != g.vertices:
        return False
    adj = g.adjacency
    for c in cs:
        for v in g.vertices:
            if v not in c and c.isdisjoint(adj[v]):
                return False
    return True


def _from_colors(color: dict[int, int]) -> ThreeColoring:
    cls: list[set[int]] = [set(), set(), set()]
    for v, c in color.items():
        cls[c].add(v)
    return ThreeColoring(tuple(frozenset(c) for c in cls))


def _outer_cycle(g: PlaneGraph) -> list[int]:
    (f,) = g.unbounded_faces()
    return [a for a, _ in f.darts]


def _peel_coloring(g: PlaneGraph) -> dict[int, int]:
    rot = g.rotation
    alive = set(g.vertices)
    cycle = _outer_cycle(g)
    on_cycle = set(cycle)
    history: list[tuple[int, list[int]]] = []

    def chordless(i: int) -> bool:
        v = cycle[i]
        a, b = cycle[i - 1], cycle[(i + 1) % len(cycle)]
        return all(w in (a, b) or w not in on_cycle for w in rot[v] if w in alive)

    while len(alive) > 3:
        k = len(cycle)
        i = next((i for i in range(k) if chordless(i)), None)
        if i is None:
            raise ColoringFailed("no chordless outer vertex in a near-triangulation")
        v = cycle[i]
        a, b = cycle[i - 1], cycle[(i + 1) % k]
        r = [w for w in rot[v] if w in alive]
        ia, ib = r.index(a), r.index(b)
        # the fan from a to b avoiding the outer wedge
        fwd = [r[(ia + j) % len(r)] for j in range((ib - ia) % len(r) + 1)]
        bwd = [r[(ia - j) % len(r)] for j in range((ia - ib) % len(r) + 1)]
        # the outer wedge is the empty arc between a and b
        path = fwd if len(fwd) >= len(bwd) else bwd
        history.append((v, path))
        alive.discard(v)
        on_cycle.discard(v)
        inner = path[1:-1]
        on_cycle.update(inner)
        cycle[i : i + 1] = inner
    color = {}
    tri = sorted(alive)
    for c, v in enumerate(tri):
        color[v] = c
    for v, path in reversed(history):
        a, b = path[0], path[-1]
        if len(path) == 2 or color[a] != color[b]:
            color[v] = 3 - color[a] - color[b]
        else:
            color[v] = 3 - color[a] - color[path[1]]
    return color


def _exhaustive(g: PlaneGraph) -> ThreeColoring | None:
    verts = sorted(g.vertices)
    for combo in product(range(3), repeat=len(verts)):
        col = _from_colors(dict(zip(verts, combo)))
        if is_dominating_coloring(g, col):
            return col
    return None


def nt_dominating_coloring(g: PlaneGraph) -> ThreeColoring:
    if not is_near_triangulation(g):
        raise NotNearTriangulation("graph is not a near-triangulation")
    col = None
    try:
        col = _from_colors(_peel_coloring(g))
    except ColoringFailed:
        col = None
    if col is not None and is_dominating_coloring(g, col):
        return col
    if len(g) <= EXHAUSTIVE_LIMIT:
        col = _exhaustive(g)
        if col is not None:
            return col
    raise ColoringFailed(f"could not build a dominating 3-coloring of {g!r}")


def _permute_to(col: ThreeColoring, v: int, target: int) -> ThreeColoring:
    cur = col.color_of(v)
    if cur == target:
        return col
    cls = list(col.classes)
    cls[cur], cls[target] = cls[target], cls[cur]
    return ThreeColoring(tuple(cls))


def wnt_dominating_coloring(g: PlaneGraph) -> ThreeColoring:
    """Dominating 3-coloring of a weak near-triangulation."""
    if not is_wnt(g):
        raise NotWnt("graph is not a weak near-triangulation")
    dec = blocks(g)
    tri_blocks = [i for i, b in enumerate(dec.blocks) if b.order >= 3]
    color: dict[int, int] = {}
    done: set[int] = set()
    for root in tri_blocks:
        if root in done:
            continue
        queue = [(root, None)]
        while queue:
            bi, via = queue.pop(0)
            if bi in done:
                continue
            done.add(bi)
            b = dec.blocks[bi]
            col = nt_dominating_coloring(induced(g, b.vertices))
            if via is not None:
                col = _permute_to(col, via, color[via])
            for v in b.vertices:
                c = col.color_of(v)
                if v in color and color[v] != c:
                    raise ColoringFailed(f"cutvertex {v} received two colors")
                color[v] = c
            for v in sorted(b.vertices & dec.cutvertices):
                for bj in dec.tree.get(v, ()):
                    if bj not in done and dec.blocks[bj].order >= 3:
                        queue.append((bj, v))
    if set(color) != set(g.vertices):
        raise ColoringFailed("some vertex lies in no triangular block")
    out = _from_colors(color)
    if not is_dominating_coloring(g, out):
        raise ColoringFailed("glued coloring is not dominating")
    return out


def smallest_class_dominating_set(g: PlaneGraph) -> frozenset[int]:
    if len(g) == 0:
        raise ValueError("the empty graph has no dominating coloring classes")
    s = wnt_dominating_coloring(g).smallest()
    if len(s) > len(g) // 3:
        raise ColoringFailed(f"smallest class has {len(s)} > n/3 vertices")
    return s
