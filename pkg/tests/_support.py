"""Shared helpers for the test suite: the cached corpus and the lemma audit."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from wntdom.generators import SplitMix64, wnt_corpus
from wntdom.plane_graph import PlaneGraph
from wntdom.reduction import apply_reduction, find_reduction
from wntdom.wnt import (
    bad_vertices,
    classify_blocks,
    external_deletion_check,
    gluing_check,
    neighbourhood_deletion_check,
    remove_center_with_bad,
)

# seeded pipeline inputs known to reach the two rarest ladder exits
RARE_TAG_INPUTS = {
    "TwoBad.NonAdjacentOnlyU": ("flipwalk", 16, 7, 80),
    "TwoBad.CommonNeighbor": ("flipwalk", 30, 10, 150),
}


@lru_cache(maxsize=1)
def small_corpus() -> tuple[tuple[str, PlaneGraph], ...]:
    return tuple(wnt_corpus(max_n=12, seeds=10, max_deleted=2))


def audit_lemmas(g: PlaneGraph, *, samples: int = 3, seed: int = 0) -> dict[str, int]:
    """Run every structural lemma check that applies to the WNT ``g``.

    Returns how many times each check ran; any failure raises LemmaViolation.
    """
    counts = dict.fromkeys(("blocks", "bad", "center_removal", "external", "neighbourhood", "gluing", "reduction"), 0)
    classify_blocks(g)
    counts["blocks"] += 1
    ext = g.external_vertices()
    rng = SplitMix64(seed)
    for u in sorted(g.vertices):
        bs = bad_vertices(g, u)
        counts["bad"] += 1
        if bs.problematic and (u in ext or bs.bad):
            remove_center_with_bad(g, u)
            counts["center_removal"] += 1
        if u in ext:
            external_deletion_check(g, u)
            counts["external"] += 1
        nbrs = sorted(g.neighbors(u))
        cands = [{u}, {u} | set(nbrs)] + [{u, w} for w in nbrs]
        for _ in range(samples if nbrs else 0):
            cands.append({u} | {w for w in nbrs if rng.below(2)})
        for d in cands:
            if d & ext:
                neighbourhood_deletion_check(g, d)
                counts["neighbourhood"] += 1
    step = find_reduction(g, fallback=False)
    if step is not None:
        apply_reduction(g, step)
        counts["reduction"] += 1
        if step.removed & ext:
            neighbourhood_deletion_check(g, step.removed)
        for k in range(1, len(step.removed) + 1):
            for sub in combinations(sorted(step.removed), k):
                s = frozenset(sub)
                if s & ext and any(s <= g.neighbors(y) | {y} for y in s):
                    gluing_check(g, step.removed, s)
                    counts["gluing"] += 1
    return counts
