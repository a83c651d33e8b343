"""Weak near-triangulation predicates and the structural lemmas built on them.

A plane graph is a weak near-triangulation (WNT) when every bounded face is a
triangle and every vertex lies on some triangle.  Triangle membership is read
off the adjacency, not the faces.

The lemma operations here assert their conclusions; a failed conclusion is a
:class:`~wntdom.errors.LemmaViolation`, never a silent wrong answer.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

from .errors import EmbeddingAmbiguity, LemmaViolation, NotWnt, PreconditionViolated, VertexNotPresent
from .plane_graph import Block, PlaneGraph, blocks, delete_vertices, induced, interior_vertices


class WitnessKind(str, Enum):
    NON_TRIANGULAR_BOUNDED_FACE = "NonTriangularBoundedFace"
    TRIANGLE_FREE_VERTEX = "TriangleFreeVertex"


@dataclass(frozen=True)
class WntWitness:
    kind: WitnessKind
    face: tuple[int, ...] | None = None
    vertex: int | None = None

    def recheck(self, g: PlaneGraph) -> bool:
        """True if the witness still refutes the WNT property of ``g``."""
        if self.kind is WitnessKind.TRIANGLE_FREE_VERTEX:
            return self.vertex in g and not in_triangle(g.adjacency, self.vertex)
        return any(f.bounded and f.vertices == self.face and len(f) != 3 for f in g.faces())


@dataclass(frozen=True)
class BadSet:
    center: int
    bad: frozenset[int]
    problematic: bool


def in_triangle(adj: Mapping[int, Collection[int]], v: int, avoid: Collection[int] = ()) -> bool:
    """Does ``v`` lie on a triangle whose other corners avoid ``avoid``?"""
    nbrs = [w for w in adj[v] if w not in avoid]
    for i, a in enumerate(nbrs):
        na = adj[a]
        for b in nbrs[i + 1:]:
            if b in na:
                return True
    return False


def wnt_witness(g: PlaneGraph) -> WntWitness | None:
    for f in g.face_list:
        if f.bounded and len(f) != 3:
            return WntWitness(WitnessKind.NON_TRIANGULAR_BOUNDED_FACE, face=f.vertices)
    adj = g.adjacency
    for v in sorted(g.vertices):
        if not in_triangle(adj, v):
            return WntWitness(WitnessKind.TRIANGLE_FREE_VERTEX, vertex=v)
    return None


def is_wnt(g: PlaneGraph) -> bool:
    """Every bounded face triangular and every vertex on a triangle (empty graph: True)."""
    return wnt_witness(g) is None


def is_triangulation(g: PlaneGraph) -> bool:
    if len(g) < 3 or len(g.components()) != 1:
        return False
    return all(len(f) == 3 for f in g.face_list)


def is_near_triangulation(g: PlaneGraph) -> bool:
    if len(g) < 3 or len(g.components()) != 1:
        return False
    if blocks(g).cutvertices:
        return False
    return all(len(f) == 3 for f in g.face_list if f.bounded)


def is_wnt_minus(g: PlaneGraph, removed: Iterable[int]) -> bool:
    """``is_wnt(g - removed)``, treating an ambiguous outer face as a failure."""
    try:
        return is_wnt(delete_vertices(g, removed))
    except EmbeddingAmbiguity:
        return False


def wnt_minus_local(g: PlaneGraph, removed: Collection[int]) -> bool:
    """``is_wnt(g - removed)`` for a WNT ``g``, without rebuilding the graph.

    Only neighbours of the removed set can lose their triangles, and only the
    faces around removed vertices change.  Faces sharing a removed vertex merge
    into one class; a class that absorbed no unbounded face becomes a single
    bounded face, which must be a triangle (exactly three surviving darts).
    """
    rm = removed if isinstance(removed, (set, frozenset)) else frozenset(removed)
    adj = g.adjacency
    rot = g.rotation
    for v in rm:
        for w in adj[v]:
            if w not in rm and not in_triangle(adj, w, rm):
                return False
    face_of = g._face_of
    faces_ = g.face_list
    parent: dict[int, int] = {}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v in rm:
        r = rot[v]
        if not r:
            continue
        first = face_of[(v, r[0])]
        parent.setdefault(first, first)
        root = find(first)
        for w in r[1:]:
            fi = face_of[(v, w)]
            if fi not in parent:
                parent[fi] = root
            else:
                ri = find(fi)
                if ri != root:
                    parent[ri] = root
    classes: dict[int, list[int]] = {}
    for fi in parent:
        classes.setdefault(find(fi), []).append(fi)
    for members in classes.values():
        if any(not faces_[fi].bounded for fi in members):
            continue
        surviving = 0
        for fi in members:
            for a, b in faces_[fi].darts:
                if a not in rm and b not in rm:
                    surviving += 1
        if surviving not in (0, 3):
            return False
    return True


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockInfo:
    block: Block
    kind: str  # "K2" or "NearTriangulation"
    outerplanar: bool
    order: int


def classify_blocks(g: PlaneGraph) -> list[BlockInfo]:
    """Classify each block of a WNT as K2 or near-triangulation.

    Anything else would contradict the block lemma and raises LemmaViolation.
    """
    if not is_wnt(g):
        raise NotWnt("classify_blocks needs a weak near-triangulation")
    out = []
    for b in blocks(g).blocks:
        if b.order == 2:
            out.append(BlockInfo(b, "K2", True, 2))
            continue
        h = induced(g, b.vertices)
        if b.order < 3 or not all(len(f) == 3 for f in h.face_list if f.bounded):
            raise LemmaViolation(
                f"block {sorted(b.vertices)} is neither K2 nor a near-triangulation", graph=g
            )
        out.append(BlockInfo(b, "NearTriangulation", b.vertices <= h.external_vertices(), b.order))
    return out


# ---------------------------------------------------------------------------
# problematic and bad vertices
# ---------------------------------------------------------------------------


def bad_vertices(g: PlaneGraph, u: int) -> BadSet:
    """Vertices of ``g - u`` lying on no triangle of ``g - u``, plus whether ``u`` is problematic."""
    if u not in g:
        raise VertexNotPresent(f"vertex {u} is not in the graph")
    adj = g.adjacency
    avoid = (u,)
    bad = frozenset(v for v in g.vertices if v != u and not in_triangle(adj, v, avoid))
    problematic = bool(bad) or not is_wnt_minus(g, [u])
    return BadSet(u, bad, problematic)


def remove_center_with_bad(g: PlaneGraph, u: int) -> PlaneGraph:
    """Delete a problematic vertex together with all its bad vertices.

    Valid for problematic external vertices and for problematic internal
    vertices with at least one bad vertex; the result is checked to be a WNT.
    """
    if not is_wnt(g):
        raise PreconditionViolated("graph is not a weak near-triangulation")
    bs = bad_vertices(g, u)
    if not bs.problematic:
        raise PreconditionViolated(f"{u} is not problematic")
    if u not in g.external_vertices() and not bs.bad:
        raise PreconditionViolated(f"{u} is internal and has no bad vertices")
    ext = g.external_vertices()
    for t in bs.bad:
        if t not in ext or not g.adjacent(t, u):
            raise LemmaViolation(f"{u}-bad vertex {t} is not an external neighbour of {u}", graph=g)
    h = delete_vertices(g, bs.bad | {u})
    if not is_wnt(h):
        raise LemmaViolation(f"removing {u} and its bad vertices broke the WNT property", graph=g)
    return h


def gluing_check(g: PlaneGraph, x_set: Iterable[int], d_set: Iterable[int]) -> bool:
    """Decide whether ``g - D`` is a WNT from triangle membership of ``X \\ D`` alone.

    Preconditions: D is a subset of X, ``g - X`` is a WNT, D lies in the closed
    neighbourhood of one of its members, and D contains an external vertex.
    """
    xs, ds = frozenset(x_set), frozenset(d_set)
    if not ds <= xs or not xs <= g.vertices:
        raise PreconditionViolated("need D subset of X subset of V")
    if not is_wnt_minus(g, xs):
        raise PreconditionViolated("G - X is not a weak near-triangulation")
    if not any(ds <= g.neighbors(y) | {y} for y in ds):
        raise PreconditionViolated("D is not inside the closed neighbourhood of a member")
    if not ds & g.external_vertices():
        raise PreconditionViolated("D contains no external vertex")
    adj = g.adjacency
    ok = all(in_triangle(adj, v, ds) for v in xs - ds)
    if ok and not is_wnt_minus(g, ds):
        raise LemmaViolation("gluing lemma: all of X \\ D on triangles but G - D is not a WNT", graph=g)
    return ok


def interior_bad_adjacency_check(
    g: PlaneGraph,
    x_set: Iterable[int],
    triangle: tuple[int, int, int],
    y: int,
    bad: Iterable[int] | None = None,
) -> bool:
    """Every ``y``-bad vertex of ``g - X`` is adjacent to ``u`` (first corner of ``triangle``).

    ``y`` must lie strictly inside the triangle, the triangle's interior must
    avoid X, ``u`` must be in X and the other two corners must not.  If ``y``
    is not problematic in ``g - X`` the statement holds vacuously.
    """
    xs = frozenset(x_set)
    u, v, w = triangle
    if u not in xs or v in xs or w in xs:
        raise PreconditionViolated("need u in X and v, w outside X")
    if not (g.adjacent(u, v) and g.adjacent(v, w) and g.adjacent(w, u)):
        raise PreconditionViolated(f"{triangle} is not a triangle")
    inside = interior_vertices(g, triangle)
    if inside & xs:
        raise PreconditionViolated("X meets the interior of the triangle")
    if y not in inside:
        raise PreconditionViolated(f"{y} is not inside the triangle")
    h = delete_vertices(g, xs)
    if not is_wnt(h):
        raise PreconditionViolated("G - X is not a weak near-triangulation")
    if bad is None:
        bs = bad_vertices(h, y)
        bad = bs.bad if bs.problematic else ()
    return all(g.adjacent(t, u) for t in bad)


# ---------------------------------------------------------------------------
# deletion invariants
# ---------------------------------------------------------------------------


def external_deletion_check(g: PlaneGraph, x: int) -> PlaneGraph:
    """Delete an external vertex of a WNT and assert what must survive.

    Every bounded face of ``g - x`` is a triangle and every neighbour of ``x``
    ends up external.  Returns ``g - x``.
    """
    if not is_wnt(g):
        raise PreconditionViolated("graph is not a weak near-triangulation")
    if x not in g.external_vertices():
        raise PreconditionViolated(f"{x} is not external")
    h = delete_vertices(g, [x])
    for f in h.face_list:
        if f.bounded and len(f) != 3:
            raise LemmaViolation(f"deleting external {x} left a bounded face {f.vertices}", graph=g)
    ext = h.external_vertices()
    for v in g.neighbors(x):
        if v not in ext:
            raise LemmaViolation(f"neighbour {v} of deleted external {x} is internal", graph=g)
    return h


def neighbourhood_deletion_check(g: PlaneGraph, d_set: Iterable[int]) -> PlaneGraph:
    """Delete D, a subset of some closed neighbourhood N[y] with y in D that meets
    the outer boundary, and assert every bounded face of ``g - D`` is a triangle.
    """
    ds = frozenset(d_set)
    if not is_wnt(g):
        raise PreconditionViolated("graph is not a weak near-triangulation")
    if not ds <= g.vertices:
        raise PreconditionViolated("D is not a vertex subset")
    if not any(ds <= g.neighbors(y) | {y} for y in ds):
        raise PreconditionViolated("D is not inside the closed neighbourhood of a member")
    if not ds & g.external_vertices():
        raise PreconditionViolated("D contains no external vertex")
    h = delete_vertices(g, ds)
    for f in h.face_list:
        if f.bounded and len(f) != 3:
            raise LemmaViolation(f"deleting {sorted(ds)} left a bounded face {f.vertices}", graph=g)
    return h
