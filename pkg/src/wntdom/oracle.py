"""Independent ground truth for small graphs.

Nothing here shares code with the constructive modules beyond the graph
representation: domination is solved exactly by branch and bound, reductions
are found by brute-force enumeration, and the WNT test re-traces faces and
scans all vertex triples.
"""

from __future__ import annotations

import time
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, EmbeddingAmbiguity
from .plane_graph import PlaneGraph, _trace, delete_vertices
from .reduction import CaseTag, ReductionStep


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 25
    max_neighborhood: int = 16
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_neighborhood <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


def verify_dominating_set(g: PlaneGraph, s: Iterable[int]) -> bool:
    ss = set(s)
    if not ss <= g.vertices:
        return False
    return all(v in ss or not ss.isdisjoint(g.neighbors(v)) for v in g.vertices)


def exact_domination_number(g: PlaneGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact domination number by branch and bound over closed neighbourhoods.

    Branches on the undominated vertex with the fewest dominators; prunes with
    ``ceil(undominated / max closed-neighbourhood size)``.  Greedy cover gives
    the initial upper bound.
    """
    return len(minimum_dominating_set(g, budget))


def minimum_dominating_set(g: PlaneGraph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[int]:
    n = len(g)
    if n > budget.max_vertices:
        raise BudgetExceeded(f"{n} vertices exceed the oracle budget of {budget.max_vertices}")
    if n == 0:
        return frozenset()
    order = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(order)}
    closed = [1 << i for i in range(n)]
    for v in order:
        for w in g.neighbors(v):
            closed[idx[v]] |= 1 << idx[w]
    # dominators[i]: vertices whose closed neighbourhood contains i
    dominators = [[j for j in range(n) if closed[j] >> i & 1] for i in range(n)]
    full = (1 << n) - 1
    maxcover = max(bin(c).count("1") for c in closed)
    deadline = time.monotonic() + budget.time_limit

    # greedy upper bound
    covered, greedy = 0, []
    while covered != full:
        j = max(range(n), key=lambda k: (bin(closed[k] & ~covered).count("1"), -k))
        greedy.append(j)
        covered |= closed[j]
    best = list(greedy)
    calls = 0

    def rec(covered: int, chosen: list[int]) -> None:
        nonlocal best, calls
        calls += 1
        if calls & 1023 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("exact domination search exceeded its time limit")
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        left = bin(full & ~covered).count("1")
        if len(chosen) + -(-left // maxcover) >= len(best):
            return
        pick, opts = -1, None
        for i in range(n):
            if not covered >> i & 1:
                ds = dominators[i]
                if opts is None or len(ds) < len(opts):
                    pick, opts = i, ds
        assert opts is not None and pick >= 0
        for j in sorted(opts, key=lambda k: -bin(closed[k] & ~covered).count("1")):
            chosen.append(j)
            rec(covered | closed[j], chosen)
            chosen.pop()

    rec(0, [])
    return frozenset(order[j] for j in best)


def _wnt_full(g: PlaneGraph, d: Iterable[int]) -> bool:
    try:
        return is_wnt_reference(delete_vertices(g, d))
    except EmbeddingAmbiguity:
        return False


def exhaustive_reduction_search(
    g: PlaneGraph, budget: OracleBudget = DEFAULT_BUDGET, *, strict: bool = True
) -> ReductionStep | None:
    """First ``(x, D)`` with ``x in D ⊆ N[x]``, ``|D| >= 4`` and ``G - D`` a WNT.

    Centers ascend by id; for each center, ``D`` ascends by size and then
    lexicographically.  With ``strict`` a closed neighbourhood above the
    budget raises :class:`BudgetExceeded`; otherwise that center is skipped.
    """
    if not is_wnt_reference(g):
        raise ValueError("exhaustive reduction search needs a weak near-triangulation")
    if len(g) > budget.max_vertices:
        raise BudgetExceeded(f"{len(g)} vertices exceed the oracle budget of {budget.max_vertices}")
    deadline = time.monotonic() + budget.time_limit
    for x in sorted(g.vertices):
        nb = sorted(g.neighbors(x))
        if len(nb) + 1 > budget.max_neighborhood:
            if strict:
                raise BudgetExceeded(f"|N[{x}]| = {len(nb) + 1} exceeds {budget.max_neighborhood}")
            continue
        for k in range(3, len(nb) + 1):
            for rest in combinations(nb, k):
                if time.monotonic() > deadline:
                    raise BudgetExceeded("reduction search exceeded its time limit")
                d = frozenset(rest) | {x}
                if _wnt_full(g, d):
                    return ReductionStep(x, d, CaseTag.FALLBACK_SEARCH, {}, hash(g.key()))
    return None


def is_wnt_reference(g: PlaneGraph) -> bool:
    """WNT test by a fresh face trace and a cubic scan for triangles."""
    verts = sorted(g.vertices)
    in_tri = set()
    adj = {v: set(g.rotation[v]) for v in verts}
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            b = verts[j]
            if b not in adj[a]:
                continue
            for c in verts[j + 1:]:
                if c in adj[a] and c in adj[b]:
                    in_tri.update((a, b, c))
    if len(in_tri) != len(verts):
        return False
    rot = {v: tuple(g.rotation[v]) for v in verts}
    cycles, face_of = _trace(rot)
    unbounded = {face_of[d] for d in g.outer_darts}
    return all(len(c) == 3 for i, c in enumerate(cycles) if i not in unbounded)
