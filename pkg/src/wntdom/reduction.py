"""Reductions of weak near-triangulations.

A WNT ``G`` is reducible when some ``x`` and ``D`` satisfy ``x in D``,
``D ⊆ N[x]``, ``|D| >= 4`` and ``G - D`` is again a WNT.  Every WNT with a
block that is neither outerplanar nor of order 6 is reducible; this module
finds such reductions constructively.

The search is a decision ladder over the number of ``u``-bad vertices of a
well-chosen internal vertex ``u``.  Each exit proposes a candidate ``(x, D)``
and :meth:`_Ladder.accept` re-verifies it; a failed verification is a
:class:`~wntdom.errors.LemmaViolation`.  Where the construction admits a
symmetric choice we try every orientation before giving up, and a ladder that
fails outright falls back to exhaustive search (tagged ``FallbackSearch``).

All adjacency, facial and external-ness tests are relative to the input graph.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from .errors import LemmaViolation, NoCenterFound, NotWnt, StaleStep
from .plane_graph import Block, Dart, PlaneGraph, blocks, delete_vertices, interior_vertices
from .wnt import in_triangle, is_wnt, wnt_minus_local

log = logging.getLogger(__name__)


class CaseTag(str, Enum):
    THREE_PLUS_BAD = "ThreePlusBad"
    TWO_BAD_COMMON_NEIGHBOR = "TwoBad.CommonNeighbor"
    TWO_BAD_ADJACENT_ONLY_U = "TwoBad.AdjacentOnlyU"
    TWO_BAD_NON_ADJACENT_ONLY_U = "TwoBad.NonAdjacentOnlyU"
    ONE_BAD = "OneBad"
    ZERO_BAD_DEGREE_THREE = "ZeroBad.DegreeThree"
    ZERO_BAD_U1_NOT_PROBLEMATIC_DIRECT = "ZeroBad.U1NotProblematic.Direct"
    ZERO_BAD_U1_NOT_PROBLEMATIC_CASE_A = "ZeroBad.U1NotProblematic.CaseA"
    ZERO_BAD_U1_NOT_PROBLEMATIC_CASE_B = "ZeroBad.U1NotProblematic.CaseB"
    ZERO_BAD_U1_PROBLEMATIC_DIRECT = "ZeroBad.U1Problematic.Direct"
    ZERO_BAD_U1_PROBLEMATIC_CASE_1 = "ZeroBad.U1Problematic.Case1"
    ZERO_BAD_U1_PROBLEMATIC_CASE_2 = "ZeroBad.U1Problematic.Case2"
    FALLBACK_SEARCH = "FallbackSearch"


@dataclass(frozen=True)
class RegionFan:
    center: int
    spokes: tuple[int, ...]
    regions: tuple[frozenset[int], ...]

    def occupied(self) -> int:
        return sum(1 for r in self.regions if r)


@dataclass(frozen=True)
class ReductionStep:
    center: int
    removed: frozenset[int]
    case_tag: CaseTag
    trace: dict = field(default_factory=dict, compare=False)
    source: int = field(default=0, compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "removed": sorted(self.removed),
            "case_tag": self.case_tag.value,
            "trace": {k: (sorted(v) if isinstance(v, (set, frozenset)) else v) for k, v in self.trace.items()},
        }


def _fingerprint(g: PlaneGraph) -> int:
    return hash(g.key())


# ---------------------------------------------------------------------------
# block and center selection
# ---------------------------------------------------------------------------


def qualifying_blocks(g: PlaneGraph) -> list[Block]:
    """Blocks that are not outerplanar and whose order is not 6, in block order."""
    if not is_wnt(g):
        raise NotWnt("reductions need a weak near-triangulation")
    ext = g.external_vertices()
    # In a WNT a block's outer face lies on the unbounded face of G, so the
    # block is outerplanar exactly when all its vertices are external.
    return [b for b in blocks(g).blocks if b.order >= 3 and b.order != 6 and not b.vertices <= ext]


def qualifying_block(g: PlaneGraph) -> int | None:
    """Index (into ``blocks(g).blocks``) of the first qualifying block, or None."""
    qs = qualifying_blocks(g)
    if not qs:
        return None
    return blocks(g).blocks.index(qs[0])


def _region(g: PlaneGraph, u: int, spoke: int, walls: set[Dart], ext: frozenset[int], probe: bool) -> frozenset[int]:
    """Internal vertices between ``spoke`` and the next spoke counterclockwise.

    With ``probe`` the walk stops at the first internal vertex found.
    """
    faces_ = g.face_list
    start = g.face_index((u, spoke))
    seen = {start}
    stack = [start]
    verts: set[int] = set()
    while stack:
        f = faces_[stack.pop()]
        for a, b in f.darts:
            if a not in ext and a != u:
                verts.add(a)
                if probe:
                    return frozenset(verts)
            if (a, b) in walls or g.is_external_edge(a, b):
                continue
            fj = g.face_index((b, a))
            if fj not in seen:
                seen.add(fj)
                stack.append(fj)
    return frozenset(verts)


def _spoke_walls(u: int, spokes: Iterable[int]) -> set[Dart]:
    walls: set[Dart] = set()
    for s in spokes:
        walls.add((u, s))
        walls.add((s, u))
    return walls


def region_fan(g: PlaneGraph, u: int) -> RegionFan:
    """Split the block around internal vertex ``u`` along its external spokes."""
    ext = g.external_vertices()
    spokes = tuple(w for w in g.rotation[u] if w in ext)
    if len(spokes) < 2:
        return RegionFan(u, spokes, ())
    walls = _spoke_walls(u, spokes)
    return RegionFan(u, spokes, tuple(_region(g, u, s, walls, ext, False) for s in spokes))


def _admissible(g: PlaneGraph, u: int, ext: frozenset[int]) -> bool:
    rot = g.rotation[u]
    spokes = [w for w in rot if w in ext]
    if len(spokes) < 2:
        return False
    # a non-spoke neighbour of u is internal, so wedges holding one are occupied
    occupied = 0
    k = len(rot)
    for i, w in enumerate(rot):
        if w in ext and rot[(i + 1) % k] not in ext:
            occupied += 1
    if occupied > 1:
        return False
    walls = _spoke_walls(u, spokes)
    for s in spokes:
        i = rot.index(s)
        if rot[(i + 1) % k] not in ext:
            continue
        if _region(g, u, s, walls, ext, True):
            occupied += 1
            if occupied > 1:
                return False
    return True


def select_center(g: PlaneGraph, block: Block) -> tuple[int, RegionFan]:
    """Smallest internal vertex of ``block`` with two or more external neighbours
    and at most one region holding other internal vertices."""
    ext = g.external_vertices()
    for u in sorted(block.vertices - ext):
        if _admissible(g, u, ext):
            fan = region_fan(g, u)
            if fan.occupied() > 1:
                raise LemmaViolation(f"region probe and full fan disagree at {u}", graph=g)
            return u, fan
    raise NoCenterFound(f"no admissible center in block {sorted(block.vertices)}")


# ---------------------------------------------------------------------------
# the ladder
# ---------------------------------------------------------------------------


class _Ladder:
    def __init__(self, g: PlaneGraph, block: Block, u: int):
        self.g = g
        self.adj = g.adjacency
        self.ext = g.external_vertices()
        self.B = block.vertices
        self.u = u
        self._wnt_cache: dict[frozenset[int], bool] = {}
        self.trace: dict = {"u": u}

    # -- predicates relative to G -------------------------------------------

    def wnt_minus(self, s: Iterable[int]) -> bool:
        key = frozenset(s)
        hit = self._wnt_cache.get(key)
        if hit is None:
            hit = wnt_minus_local(self.g, key)
            self._wnt_cache[key] = hit
        return hit

    def problematic(self, x_set: Iterable[int], v: int) -> bool:
        """Is ``v`` problematic in ``G - X``?"""
        return not self.wnt_minus(set(x_set) | {v})

    def bad(self, x_set: Iterable[int], v: int) -> frozenset[int]:
        """``v``-bad vertices of ``G - X``."""
        s = set(x_set) | {v}
        cand = {w for a in s for w in self.adj[a] if w not in s}
        return frozenset(w for w in cand if not in_triangle(self.adj, w, s))

    def thirds(self, a: int, b: int) -> list[int]:
        """Third corners of the bounded triangular faces on edge ``ab``."""
        out = set()
        for d in ((a, b), (b, a)):
            f = self.g.face_of(d)
            if f.bounded and len(f) == 3:
                out.update(v for v in f.vertices if v != a and v != b)
        return sorted(out)

    def facial(self, a: int, b: int, c: int) -> bool:
        return c in self.thirds(a, b)

    def external_edge(self, a: int, b: int) -> bool:
        return self.g.is_external_edge(a, b)

    def inside(self, cycle: tuple[int, ...]) -> frozenset[int]:
        return interior_vertices(self.g, cycle)

    def deg_b(self, v: int) -> int:
        return sum(1 for w in self.adj[v] if w in self.B)

    def nbr(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    # -- exits ----------------------------------------------------------------

    def fail(self, msg: str) -> LemmaViolation:
        return LemmaViolation(msg, graph=self.g, trace=self.trace)

    def accept(self, center: int, d: Iterable[int], tag: CaseTag, **roles) -> ReductionStep:
        ds = frozenset(d)
        self.trace.update(roles)
        closed = self.adj[center] | {center}
        if center not in ds or not ds <= closed or len(ds) < 4 or not self.wnt_minus(ds):
            why = []
            if center not in ds:
                why.append("center not in D")
            if not ds <= closed:
                why.append(f"D not inside N[{center}]: {sorted(ds - closed)}")
            if len(ds) < 4:
                why.append("|D| < 4")
            if not why:
                why.append("G - D is not a WNT")
            raise self.fail(f"{tag.value}: candidate x={center} D={sorted(ds)} rejected ({'; '.join(why)})")
        trace = {k: v for k, v in self.trace.items() if v is not None}
        return ReductionStep(center, ds, tag, trace)

    def accept_any(self, d: Iterable[int], tag: CaseTag, prefer: int, **roles) -> ReductionStep:
        """Accept with ``prefer`` as center, or the smallest member whose closed
        neighbourhood covers ``D`` when the proof leaves the center implicit."""
        ds = frozenset(d)
        if prefer in ds and ds <= self.adj[prefer] | {prefer}:
            return self.accept(prefer, ds, tag, **roles)
        for x in sorted(ds):
            if ds <= self.adj[x] | {x}:
                return self.accept(x, ds, tag, **roles)
        return self.accept(prefer, ds, tag, **roles)

    def reduce_or_bad(self, x_set: frozenset[int], v: int, center: int, tag: CaseTag, bad_center: int | None = None, **roles):
        """``X + v`` if ``v`` is not problematic in ``G - X``, else ``X + v + bad``."""
        if not self.problematic(x_set, v):
            return self.accept(center, x_set | {v}, tag, **roles)
        t = self.bad(x_set, v)
        return self.accept(center if bad_center is None else bad_center, x_set | {v} | t, tag, T=t, **roles)

    # -- dispatch -------------------------------------------------------------

    def run(self) -> ReductionStep:
        u = self.u
        t = self.bad((), u)
        self.trace["T"] = t
        if len(t) >= 3:
            return self.accept(u, {u} | t, CaseTag.THREE_PLUS_BAD)
        if len(t) == 2:
            return self.two_bad(*sorted(t))
        if len(t) == 1:
            (x1,) = t
            return _first_success(
                lambda w1, z1: self.one_bad(x1, w1, z1), _orientations(self.thirds(u, x1)), self
            )
        return self.zero_bad()

    # -- exactly two bad vertices ---------------------------------------------

    def two_bad(self, x1: int, x2: int) -> ReductionStep:
        u = self.u
        x0 = frozenset((u, x1, x2))
        self.trace.update(x1=x1, x2=x2)
        common = sorted((self.adj[x1] & self.adj[x2]) - {u})
        if common:
            t = common[0]
            tag = CaseTag.TWO_BAD_COMMON_NEIGHBOR
            return self.reduce_or_bad(x0, t, t, tag, t=t)
        if self.nbr(x1, x2):
            return _first_success(
                lambda a, b: self.adjacent_only_u(a, b), [(x1, x2), (x2, x1)], self
            )
        return _first_success(
            lambda a, b, w1, z2: self.non_adjacent_only_u(a, b, w1, z2),
            [
                (a, b, w1, z2)
                for a, b in ((x1, x2), (x2, x1))
                for w1 in self.thirds(u, a)
                for z2 in self.thirds(u, b)
            ],
            self,
        )

    def adjacent_only_u(self, x1: int, x2: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.TWO_BAD_ADJACENT_ONLY_U
        x0 = frozenset((u, x1, x2))
        w1s = [w for w in self.thirds(u, x1) if w != x2]
        w2s = [w for w in self.thirds(u, x2) if w != x1]
        if len(w1s) != 1 or len(w2s) != 1:
            raise self.fail("edges ux1, ux2 must each carry one triangle besides ux1x2")
        w1, w2 = w1s[0], w2s[0]
        self.trace.update(x1=x1, x2=x2, w1=w1, w2=w2)
        for w in (w1, w2):
            if not self.problematic(x0, w):
                return self.accept(u, x0 | {w}, tag)
        b1 = self.bad(x0, w1)
        b2 = self.bad(x0, w2)
        if w2 in b1 and w1 in b2:
            # mutual badness: the only non-order-6 shape has a vertex x inside uw1w2
            xs = sorted(c for c in b1 - {w2} if self.nbr(c, u) and self.nbr(c, w2))
            if not xs:
                raise self.fail("mutually bad w1, w2 without an inner common neighbour (order-6 shape)")
            x = xs[0]
            rest = b1 - {x, w2}
            if rest:
                return self.accept(w1, ({w1, x1} | b1) - {w2}, tag, x=x, T=b1, z=min(rest))
            return self.accept(u, x0 | {w1, w2, x}, tag, x=x, T=b1)
        if w2 in b1:
            raise self.fail("orientation: w2 is w1-bad")
        t = b1
        self.trace["T"] = t
        if len(t) >= 2:
            return self.accept(w1, {x1, w1} | t, tag)
        if len(t) != 1:
            raise self.fail("problematic external w1 without bad vertices")
        (z,) = t
        self.trace["z"] = z
        y5 = x0 | {w1, z}
        ts = [c for c in self.thirds(w1, z) if c != w2 and c not in x0]
        if ts:
            tt = ts[0]
            if not self.problematic(y5, tt):
                return self.accept(w1, {x1, w1, z, tt}, tag, t=tt)
            tb = self.bad(y5, tt)
            return self.accept(tt, {w1, z, tt} | tb, tag, t=tt, T=tb)
        if self.nbr(z, u):
            return self.accept(u, x0 | {w1, z}, tag)
        if not self.nbr(w1, w2):
            raise self.fail("w1 and w2 are not adjacent although w1zw2 is the only face on w1z")
        inner = self.inside((u, w1, w2))
        ys = sorted(y for y in inner if self.nbr(y, u))
        if not ys:
            raise self.fail("no vertex inside uw1w2 (order-6 shape)")
        y = ys[0]
        if not self.problematic(x0, y):
            return self.accept(u, x0 | {y}, tag, y=y)
        tb = self.bad(x0, y)
        if not all(self.nbr(b, u) for b in tb):
            raise self.fail("bad vertex inside uw1w2 not adjacent to u")
        return self.accept(u, x0 | {y} | tb, tag, y=y, T=tb)

    def _disconnected(self, avoid: frozenset[int], a: int, b: int) -> bool:
        seen = {a}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                return False
            for w in self.adj[v]:
                if w not in seen and w not in avoid:
                    seen.add(w)
                    stack.append(w)
        return True

    def non_adjacent_only_u(self, x1: int, x2: int, w1: int, z2: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.TWO_BAD_NON_ADJACENT_ONLY_U
        x0 = frozenset((u, x1, x2))
        z1 = next((c for c in self.thirds(u, x1) if c != w1), None)
        w2 = next((c for c in self.thirds(u, x2) if c != z2), None)
        self.trace.update(x1=x1, x2=x2, w1=w1, z1=z1, w2=w2, z2=z2)
        if not self._disconnected(x0, w1, z2):
            raise self.fail("orientation: w1 and z2 connected outside {u, x1, x2}")
        if not self.problematic(x0, w1):
            return self.accept(u, x0 | {w1}, tag)
        t = self.bad(x0, w1)
        self.trace["T"] = t
        if len(t) >= 2:
            return self.accept(w1, {w1, x1} | t, tag)
        if len(t) != 1:
            raise self.fail("problematic external w1 without bad vertices")
        (z,) = t
        ts = [c for c in self.thirds(w1, z) if c not in x0]
        if not ts:
            raise self.fail("edge w1z lies on no facial triangle outside {u, x1, x2}")
        tt = ts[0]
        y5 = x0 | {w1, z}
        if not self.problematic(y5, tt):
            return self.accept(w1, {x1, w1, z, tt}, tag, z=z, t=tt)
        tb = self.bad(y5, tt)
        return self.accept(tt, {tt, z, w1} | tb, tag, z=z, t=tt, T=tb)

    # -- exactly one bad vertex -----------------------------------------------

    def one_bad(self, x1: int, w1: int, z1: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.ONE_BAD
        self.trace.update(x1=x1, w1=w1, z1=z1)
        x0 = frozenset((u, x1))
        if self.problematic(x0, w1):
            t = self.bad(x0, w1)
            return self.accept(w1, x0 | {w1} | t, tag, T=t)
        x1s = x0 | {w1}
        if not self.problematic(x1s, z1):
            return self.accept(u, x1s | {z1}, tag)
        tz = self.bad(x1s, z1)
        self.trace["T"] = tz
        if self.nbr(z1, w1):
            return self.accept(z1, x1s | {z1} | tz, tag)
        dbw = self.deg_b(w1)
        if dbw < 3:
            raise self.fail(f"deg_B(w1) = {dbw} < 3")
        if dbw == 3:
            return self.accept(z1, {u, x1, z1} | tz, tag)
        far = frozenset(v for v in tz if not self.nbr(v, w1))
        if far:
            return self.accept(z1, {u, x1, z1} | far, tag)
        if all(self.nbr(v, u) for v in tz):
            return self.accept(u, x1s | {z1} | tz, tag)
        y = min(v for v in tz if not self.nbr(v, u))
        zs = [
            c
            for c in sorted(self.adj[y] & self.adj[w1] & self.adj[z1])
            if self.facial(c, y, w1) and self.facial(c, y, z1)
        ]
        if not zs:
            raise self.fail("no vertex z with zyw1 and zyz1 facial")
        z = zs[0]
        self.trace.update(y=y, z=z)
        if not self.nbr(z, u) or not self.facial(w1, u, z):
            y1s = [c for c in self.thirds(w1, z) if c != y]
            if not y1s:
                raise self.fail("edge w1z carries no second face")
            y1 = y1s[0]
            return self.accept(z1, ({u, x1, z1} | tz) - {z, y1}, tag, y1=y1)
        inner = self.inside((u, z, z1))
        xs = sorted(v for v in inner if self.nbr(v, u))
        if xs:
            xp = xs[0]
            if not self.problematic(x1s, xp):
                return self.accept(u, x1s | {xp}, tag, x=xp)
            tb = self.bad(x1s, xp)
            return self.accept(u, x1s | {xp} | tb, tag, x=xp, Tx=tb)
        if len(tz) > 2:
            return self.accept(z1, ({u, x1, z1} | tz) - {z, y}, tag)
        if not self.external_edge(w1, y):
            return self.accept(z1, {u, x1, z1, z}, tag)
        if not self.external_edge(y, z1):
            return self.accept(u, {u, x1, w1, z}, tag)
        raise self.fail("one-bad ladder exhausted (order-6 shape)")

    # -- no bad vertices --------------------------------------------------------

    def zero_bad(self) -> ReductionStep:
        u = self.u
        spokes = sorted(w for w in self.adj[u] if w in self.ext)
        for u1 in spokes:
            if self.deg_b(u1) == 3 and not self._outside_triangle(u1):
                return self.degree_three(u1)
        return _first_success(self.zero_bad_u1, [(u1,) for u1 in spokes], self)

    def _outside_triangle(self, v: int) -> bool:
        """Is ``v`` on a triangle ``vab`` with ``a, b`` outside the block?"""
        outs = [w for w in self.adj[v] if w not in self.B]
        return any(b in self.adj[a] for i, a in enumerate(outs) for b in outs[i + 1:])

    def degree_three(self, u1: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.ZERO_BAD_DEGREE_THREE
        zs = sorted(w for w in self.adj[u1] if w in self.B and w != u)
        if len(zs) != 2:
            raise self.fail("deg_B(u1) = 3 but not two block neighbours besides u")
        z1, z2 = zs
        self.trace.update(u1=u1, z1=z1, z2=z2)
        if not self.nbr(z1, z2):
            raise self.fail("u1 of block degree 3 lies on no triangle of G - u")
        if len(self.adj[u]) >= 4 or not self.external_edge(z1, z2):
            y = frozenset((u, u1))
            if self.problematic(y, z1):
                t = self.bad(y, z1)
                return self.accept(z1, y | {z1} | t, tag, T=t)
            if not self.problematic(y | {z1}, z2):
                return self.accept(u, y | {z1, z2}, tag)
            t = self.bad(y | {z1}, z2)
            return self.accept(z2, y | {z1, z2} | t, tag, T=t)
        for a in (z1, z2):
            t = self.bad({u}, a)
            if t - {u1}:
                return self.accept(a, {u, a} | t, tag, T=t)
        return self.accept(u, {u, u1, z1, z2}, tag)

    def zero_bad_u1(self, u1: int) -> ReductionStep:
        self.trace = {"u": self.u, "T": frozenset(), "u1": u1}
        if self.problematic({self.u}, u1):
            return self.u1_problematic(u1)
        xs = self.thirds(self.u, u1)
        if len(xs) != 2:
            raise self.fail("internal edge uu1 must carry two faces")
        options = [(u1, x, y) for x, y in (tuple(xs), tuple(reversed(xs))) if x in self.ext]
        if not options:
            raise self.fail("both faces on uu1 have internal third corners (center choice violated)")
        return _first_success(self.u1_not_problematic, options, self)

    def u1_not_problematic(self, u1: int, x: int, y: int) -> ReductionStep:
        u = self.u
        direct = CaseTag.ZERO_BAD_U1_NOT_PROBLEMATIC_DIRECT
        u2 = y if self.external_edge(u1, y) else x
        self.trace.update(u1=u1, u2=u2)
        y2 = frozenset((u, u1))
        if self.problematic(y2, u2):
            t = self.bad(y2, u2)
            return self.accept(u2, y2 | {u2} | t, direct, T=t)
        ts = [c for c in self.thirds(u, u2) if c != u1]
        if len(ts) != 1:
            raise self.fail("edge uu2 must carry exactly one face besides uu1u2")
        t = ts[0]
        self.trace["t"] = t
        y3 = y2 | {u2}
        if not self.problematic(y3, t):
            return self.accept(u, y3 | {t}, direct)
        tt = self.bad(y3, t)
        self.trace["T"] = tt
        if self.nbr(t, u1):
            return self.accept(t, y3 | {t} | tt, direct)
        near = sorted(v for v in tt if self.nbr(v, u1))
        if not near:
            return self.accept(t, {u, u2, t} | tt, direct)
        return _first_success(lambda t0: self._case_ab(u1, u2, t, tt, t0), [(t0,) for t0 in near], self)

    def _case_ab(self, u1: int, u2: int, t: int, tt: frozenset[int], t0: int) -> ReductionStep:
        self.trace["t0"] = t0
        if self.nbr(t0, self.u):
            return self.case_b(u1, u2, t, tt, t0)
        return self.case_a(u1, u2, t, tt, t0)

    def case_a(self, u1: int, u2: int, t: int, tt: frozenset[int], t0: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.ZERO_BAD_U1_NOT_PROBLEMATIC_CASE_A
        self.trace.update(u1=u1, u2=u2, t=t, t0=t0)
        y3 = frozenset((u, u1, u2))
        inner = self.inside((t0, u1, u, t))
        zs = sorted(v for v in inner if self.nbr(v, t0))
        if len(zs) != 1:
            raise self.fail(f"expected one neighbour of t0 inside t0u1ut, found {zs}")
        z = zs[0]
        self.trace["z"] = z

        def cut_zp() -> ReductionStep:
            zps = [c for c in self.thirds(u1, z) if c != t0]
            if not zps:
                raise self.fail("edge u1z carries no second face")
            zp = zps[0]
            return self.accept(t, ({u, u2, t} | tt) - {z, zp}, tag, zp=zp)

        if not self.nbr(z, u):
            return cut_zp()
        if self.inside((u1, u, z)):
            return cut_zp()
        ys = sorted(v for v in self.inside((u, t, z)) if self.nbr(v, u))
        if ys:
            y = ys[0]
            if not self.problematic(y3, y):
                return self.accept(u, y3 | {y}, tag, y=y)
            tb = self.bad(y3, y)
            return self.accept(u, y3 | {y} | tb, tag, y=y, Ty=tb)
        x = y3 | {t} | tt
        if len(tt) >= 3:
            return self.accept(t, x - {u1, z, t0}, tag)
        if tt != {z, t0}:
            raise self.fail(f"expected t-bad set {{z, t0}}, got {sorted(tt)}")
        if not self.external_edge(u1, t0):
            return self.accept_any(x - {u1, t0}, tag, u)
        if not self.external_edge(u1, u2):
            return self.accept_any(x - {u1, u2}, tag, t)
        if not self.external_edge(u2, t):
            xs = [c for c in self.thirds(u2, t) if c != u]
            if not xs:
                raise self.fail("edge u2t carries no second face")
            xx = xs[0]
            if xx == t0:
                if self.external_edge(u2, t0):
                    raise self.fail("case (a) closes into an order-6 block")
                return self.accept_any(x - {u2, t0}, tag, u)
            return self.accept(u1, {u, u1, z, t0}, tag, x=xx)
        if not self.external_edge(t0, t):
            return self.accept_any(x - {t, t0}, tag, u)
        raise self.fail("case (a) closes into an order-6 block")

    def case_b(self, u1: int, u2: int, t: int, tt: frozenset[int], t0: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.ZERO_BAD_U1_NOT_PROBLEMATIC_CASE_B
        self.trace.update(u1=u1, u2=u2, t=t, t0=t0)
        y3 = frozenset((u, u1, u2))
        inner = self.inside((u1, u, t0))
        if inner:
            for a in sorted(inner):
                if not self.nbr(a, u1):
                    continue
                for b in sorted(self.adj[a] & self.adj[u1] & inner):
                    return self.accept(t, {u, u2, t} | tt, tag, z=a, zp=b)
            raise self.fail("single vertex inside u1ut0 although u1 is not problematic in G - u")
        if tt == {t0}:
            return self.accept(u, y3 | {t, t0}, tag)
        x = y3 | {t} | tt
        if not self.external_edge(t0, u1):
            xs = [c for c in self.thirds(t0, u1) if c != u]
            if xs and xs[0] in tt:
                return self.case_a(u1, u2, t, tt, xs[0])
            return self.accept(t, x - {u1, t0}, tag)
        if not self.external_edge(u1, u2):
            return self.accept(t, x - {u1, u2}, tag)
        return self.accept(t, x - {u1}, tag)

    def u1_problematic(self, u1: int) -> ReductionStep:
        u = self.u
        direct = CaseTag.ZERO_BAD_U1_PROBLEMATIC_DIRECT
        tb = self.bad({u}, u1)
        self.trace.update(u1=u1, T=tb)
        if len(tb) >= 2:
            return self.accept(u1, {u, u1} | tb, direct)
        if len(tb) != 1:
            raise self.fail("u1 problematic in G - u without bad vertices")
        (xb,) = tb
        self.trace["x"] = xb
        ts = [c for c in self.thirds(u1, xb) if c != u]
        if not ts:
            raise self.fail("no facial triangle u1xt avoiding u")
        t = ts[0]
        self.trace["t"] = t
        x1 = frozenset((u, u1, xb))
        if self.nbr(t, u):
            tt = self.bad(x1, t)
            return self.accept(t, x1 | {t} | tt, direct, T=tt)
        if not self.problematic(x1, t):
            return self.accept(u1, x1 | {t}, direct)
        tt = self.bad(x1, t)
        self.trace["T"] = tt
        near_u = sorted(v for v in tt if self.nbr(v, u))
        if near_u:
            return _first_success(lambda t0: self.case_1(u1, xb, t, tt, t0), [(t0,) for t0 in near_u], self)
        return self.case_2(u1, xb, t, tt)

    def case_1(self, u1: int, xb: int, t: int, tt: frozenset[int], t0: int) -> ReductionStep:
        u = self.u
        tag = CaseTag.ZERO_BAD_U1_PROBLEMATIC_CASE_1
        self.trace.update(u1=u1, x=xb, t=t, t0=t0, T=tt)
        inner = self.inside((u, u1, t, t0))
        nu = sorted(v for v in inner if self.nbr(v, u))
        if len(nu) >= 2:
            for i, a in enumerate(nu):
                for b in nu[i + 1:]:
                    if self.nbr(a, b):
                        return self.accept(t, ({u1, xb, t} | tt) - {a, b}, tag, w1=a, w2=b)
            raise self.fail("two neighbours of u inside uu1tt0 without a triangle")
        if len([v for v in inner if self.nbr(v, t0)]) > 1:
            raise self.fail("t0 has two neighbours inside uu1tt0 although it is t-bad")
        zs = [v for v in nu if self.nbr(v, t0)]
        z = zs[0] if zs else None
        self.trace["z"] = z
        ws = [c for c in self.thirds(u, u1) if c != t]
        if len(tt) >= 3:
            for w in ws:
                if w not in ({xb, t} | tt):
                    continue
                return self.accept(t, ({xb, t} | tt) - {w}, tag, w=w)
            return self.accept(t, {xb, t} | tt, tag)
        if len(tt) == 2:
            (y,) = tt - {t0}
            self.trace["y"] = y
            if not inner:
                w = next((c for c in ws if c != t0), None)
                if w == y:
                    return self.accept(u1, {u, u1, xb, t, t0, y}, tag, w=w)
                return self.accept(t, {xb, t, t0, y}, tag, w=w)
            if z is None:
                raise self.fail("vertices inside uu1tt0 but none adjacent to both u and t0")
            if z == y and self.nbr(u1, t0):
                return self.accept(u1, {u, u1, xb, t, t0, y}, tag)
            return self.accept(t, {xb, t, t0, y}, tag)
        if self.nbr(u1, t0):
            return self.accept(u1, {u, u1, xb, t, t0}, tag)
        if z is None:
            raise self.fail("u1 and t0 non-adjacent but no vertex inside uu1tt0")
        y5 = frozenset((u, u1, xb, t, t0))
        if not self.problematic(y5, z):
            return self.accept(t, {t, xb, z, u1}, tag)
        tz = self.bad(y5, z)
        return self.accept(z, {z, u, t0} | tz, tag, Tz=tz)

    def case_2(self, u1: int, xb: int, t: int, tt: frozenset[int]) -> ReductionStep:
        u = self.u
        tag = CaseTag.ZERO_BAD_U1_PROBLEMATIC_CASE_2
        self.trace.update(u1=u1, x=xb, t=t, T=tt)
        if self.nbr(xb, u) and len(self.adj[u]) == 3:
            (w,) = self.adj[u] - {u1, xb}
            x1 = frozenset((u, u1, xb))
            tw = self.bad(x1, w)
            return self.accept(w, x1 | {w} | tw, tag, w=w, Tw=tw)
        return self.accept(t, {u1, xb, t} | tt, tag)


def _orientations(pair: list[int]) -> list[tuple[int, int]]:
    if len(pair) != 2:
        return [tuple(pair)] if pair else []
    a, b = pair
    return [(a, b), (b, a)]


def _first_success(fn: Callable[..., ReductionStep], options: Iterable[tuple], ladder: _Ladder) -> ReductionStep:
    """Try symmetric choices in order; re-raise the first failure if all fail."""
    first: LemmaViolation | None = None
    saved = dict(ladder.trace)
    for opt in options:
        ladder.trace = dict(saved)
        try:
            return fn(*opt)
        except LemmaViolation as exc:
            if first is None:
                first = exc
    if first is None:
        first = ladder.fail("no admissible orientation")
    raise first


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def _ladder_steps(g: PlaneGraph) -> Iterator[ReductionStep | Exception]:
    for b in qualifying_blocks(g):
        try:
            u, _ = select_center(g, b)
        except NoCenterFound as exc:
            yield exc
            continue
        try:
            yield _Ladder(g, b, u).run()
        except LemmaViolation as exc:
            yield exc


def find_reduction(g: PlaneGraph, *, fallback: bool = True) -> ReductionStep | None:
    """A verified reduction of the WNT ``g``, or None when no block qualifies.

    Qualifying blocks are tried in order.  If every one of them fails (no
    admissible center, or a rejected candidate), exhaustive search takes over
    and the step is tagged ``FallbackSearch``; with ``fallback=False`` the
    first failure is raised instead.
    """
    failures: list[Exception] = []
    for res in _ladder_steps(g):
        if isinstance(res, ReductionStep):
            return ReductionStep(res.center, res.removed, res.case_tag, res.trace, _fingerprint(g))
        failures.append(res)
    if not failures:
        return None
    first = failures[0]
    if not fallback:
        raise first
    log.warning("reduction ladder failed (%s); falling back to exhaustive search", first)
    from .oracle import OracleBudget, exhaustive_reduction_search

    step = exhaustive_reduction_search(g, OracleBudget(max_vertices=max(len(g), 1), max_neighborhood=16, time_limit=600), strict=False)
    if step is None:
        if isinstance(first, LemmaViolation):
            raise first
        raise LemmaViolation(f"no reduction found: {first}", graph=g)
    return ReductionStep(
        step.center,
        step.removed,
        CaseTag.FALLBACK_SEARCH,
        {"reason": str(first)},
        _fingerprint(g),
    )


def apply_reduction(g: PlaneGraph, step: ReductionStep) -> PlaneGraph:
    if step.source != _fingerprint(g):
        raise StaleStep("reduction step was produced from a different graph")
    h = delete_vertices(g, step.removed)
    if not is_wnt(h):
        raise LemmaViolation("G - D is not a WNT", graph=g, trace=step.trace)
    return h
