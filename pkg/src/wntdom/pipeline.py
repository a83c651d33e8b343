"""Dominating sets of size at most 17n/53 for plane triangulations.

Reduce the triangulation until no block qualifies, leaving an irreducible
residual ``G'`` on ``q`` vertices, then take the smaller of two candidates:

* ``ReduceThenColor``: the reduction centers plus the smallest class of a
  dominating 3-coloring of ``G'`` (at most ``(n - q)/4 + q/3``).
* ``ReduceThenBlockCover``: every removed vertex plus one vertex per order-6
  block of ``G'`` (at most ``n - q + q/5``).  Only valid once some external
  vertex of the input has been removed.

A residual that is a single order-6 block holding all three outer vertices is
covered by its centers plus a dominating pair (``SmallResidual``).  Inputs
with ``n <= 6`` are solved exactly (``ExactSmallInput``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .coloring import smallest_class_dominating_set
from .errors import BoundViolation, LemmaViolation, NoDominatorFound, NotNearTriangulation, NotTriangulation
from .oracle import minimum_dominating_set, verify_dominating_set
from .plane_graph import Block, PlaneGraph, blocks, induced
from .reduction import ReductionStep, apply_reduction, find_reduction
from .wnt import is_near_triangulation, is_triangulation


class Strategy(str, Enum):
    REDUCE_THEN_COLOR = "ReduceThenColor"
    REDUCE_THEN_BLOCK_COVER = "ReduceThenBlockCover"
    SMALL_RESIDUAL = "SmallResidual"
    EXACT_SMALL_INPUT = "ExactSmallInput"


@dataclass(frozen=True)
class DominationResult:
    dominating_set: frozenset[int]
    strategy: Strategy
    steps: tuple[ReductionStep, ...]
    q: int
    bound_ok: bool
    n: int = 0
    candidates: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.dominating_set)

    def to_json(self) -> dict:
        return {
            "set": sorted(self.dominating_set),
            "size": self.size,
            "bound": bound(self.n),
            "strategy": self.strategy.value,
            "steps": [s.to_json() for s in self.steps],
            "q": self.q,
        }


def bound(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return 17 * n // 53


def six_block_dominator(b: PlaneGraph) -> int:
    """Smallest vertex whose closed neighbourhood holds every internal vertex."""
    if len(b) != 6 or not is_near_triangulation(b):
        raise NotNearTriangulation("need a near-triangulation on 6 vertices")
    internal = b.vertices - b.external_vertices()
    for v in sorted(b.vertices):
        if internal <= b.neighbors(v) | {v}:
            return v
    raise NoDominatorFound(f"no vertex covers the internal vertices {sorted(internal)}")


def six_block_pair(b: PlaneGraph) -> frozenset[int]:
    """Lexicographically first dominating pair of an order-6 block."""
    if len(b) != 6:
        raise NotNearTriangulation("need a block on 6 vertices")
    for p in combinations(sorted(b.vertices), 2):
        if verify_dominating_set(b, p):
            return frozenset(p)
    raise NoDominatorFound("no dominating pair in an order-6 block")


def _check_residual(g: PlaneGraph, h: PlaneGraph, removed: frozenset[int]) -> list[Block]:
    """Assert the structure of the irreducible residual; return its order-6 blocks."""
    ext = h.external_vertices()
    six = []
    for b in blocks(h).blocks:
        outer = b.vertices <= ext
        if not outer and b.order != 6:
            raise LemmaViolation(f"irreducible residual has a qualifying block {sorted(b.vertices)}", graph=h)
        if not outer:
            six.append(b)
    if removed & g.external_vertices():
        adj = g.adjacency
        for v in ext:
            if adj[v].isdisjoint(removed):
                raise LemmaViolation(f"external residual vertex {v} has no removed neighbour", graph=g)
    return six


def reduce_to_fixpoint(g: PlaneGraph) -> tuple[PlaneGraph, list[ReductionStep]]:
    steps = []
    h = g
    while True:
        step = find_reduction(h)
        if step is None:
            return h, steps
        steps.append(step)
        h = apply_reduction(h, step)


def dominate(g: PlaneGraph) -> DominationResult:
    if not is_triangulation(g):
        raise NotTriangulation("dominate expects a plane triangulation")
    n = len(g)
    if n <= 6:
        # outside the bound's scope: bound_ok just reports the comparison
        s = minimum_dominating_set(g)
        return DominationResult(s, Strategy.EXACT_SMALL_INPUT, (), n, len(s) <= bound(n), n)

    h, steps = reduce_to_fixpoint(g)
    q = len(h)
    centers = frozenset(s.center for s in steps)
    removed = g.vertices - h.vertices
    six = _check_residual(g, h, removed)

    cands: dict[Strategy, frozenset[int]] = {}
    s1 = centers | (smallest_class_dominating_set(h) if q else frozenset())
    if len(s1) > len(steps) + q // 3:
        raise LemmaViolation("color strategy exceeds (n - q)/4 + q/3", graph=g)
    cands[Strategy.REDUCE_THEN_COLOR] = s1
    if removed & g.external_vertices():
        s2 = removed | {six_block_dominator(induced(h, b.vertices)) for b in six}
        if len(s2) > (n - q) + q // 5:
            raise LemmaViolation("block-cover strategy exceeds n - q + q/5", graph=g)
        cands[Strategy.REDUCE_THEN_BLOCK_COVER] = s2
    if q == 6 and len(blocks(h).blocks) == 1 and g.external_vertices() <= h.vertices:
        cands[Strategy.SMALL_RESIDUAL] = centers | six_block_pair(h)

    strategy = min(cands, key=lambda k: len(cands[k]))
    best = cands[strategy]
    if not verify_dominating_set(g, best):
        raise LemmaViolation(f"{strategy.value} candidate does not dominate", graph=g)
    ok = len(best) <= bound(n)
    if not ok:
        raise BoundViolation(f"|D| = {len(best)} exceeds 17n/53 = {bound(n)} for n = {n}")
    return DominationResult(
        best, strategy, tuple(steps), q, ok, n, {k.value: len(v) for k, v in cands.items()}
    )
