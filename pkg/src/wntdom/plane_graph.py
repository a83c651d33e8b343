"""Combinatorial plane graphs.

A plane graph is stored as a rotation system (the counterclockwise cyclic
order of neighbours around every vertex) plus, for each connected component
with at least one edge, one dart lying on that component's unbounded face.
No coordinates are kept.

Faces are traced with the rule: the successor of dart ``(u, v)`` is
``(v, w)`` where ``w`` immediately precedes ``u`` in the counterclockwise
rotation at ``v``.  With that rule the face containing a dart is the face on
its left, bounded faces are traced counterclockwise and unbounded faces
clockwise.

Values are immutable; every edit returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import (
    AsymmetricRotation,
    EmbeddingAmbiguity,
    EulerViolation,
    GraphFormatError,
    MultiEdgeOrLoop,
    NotABlock,
    OuterDartMissing,
    VertexNotPresent,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]
    bounded: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cutvertices: frozenset[int]
    # cutvertex -> indices of the blocks containing it
    tree: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def tree_edges(self) -> list[tuple[int, int]]:
        """Block-cut tree edges as ``(block index, cutvertex)`` pairs."""
        return sorted((b, c) for c, bs in self.tree.items() for b in bs)


class PlaneGraph:
    """Immutable rotation-system embedding with outer-face bookkeeping.

    Use :func:`build` (validating) to construct one from raw data.
    """

    __slots__ = (
        "_rot",
        "_adj",
        "_pos",
        "_outer",
        "_faces",
        "_face_of",
        "_key",
        "_external",
        "_comp",
    )

    def __init__(
        self,
        rotation: Mapping[int, tuple[int, ...]],
        faces: list[Face],
        face_of: dict[Dart, int],
        outer_darts: tuple[Dart, ...],
    ):
        # Trusted constructor: callers have validated everything.
        self._rot = rotation
        self._adj = {v: frozenset(r) for v, r in rotation.items()}
        self._pos = {v: {w: i for i, w in enumerate(r)} for v, r in rotation.items()}
        self._faces = faces
        self._face_of = face_of
        self._outer = outer_darts
        self._key = None
        self._external = None
        self._comp = None

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._rot)

    @property
    def rotation(self) -> Mapping[int, tuple[int, ...]]:
        return self._rot

    @property
    def outer_darts(self) -> tuple[Dart, ...]:
        return self._outer

    def __len__(self) -> int:
        return len(self._rot)

    def __contains__(self, v: object) -> bool:
        return v in self._rot

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def adjacent(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((v, w) for v, r in self._rot.items() for w in r if v < w)

    def num_edges(self) -> int:
        return sum(len(r) for r in self._rot.values()) // 2

    def darts(self) -> Iterable[Dart]:
        for v, r in self._rot.items():
            for w in r:
                yield (v, w)

    # -- faces ---------------------------------------------------------------

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        r = self._rot[v]
        return (v, r[self._pos[v][u] - 1])

    def faces(self) -> list[Face]:
        return list(self._faces)

    def face_of(self, d: Dart) -> Face:
        return self._faces[self._face_of[d]]

    def face_index(self, d: Dart) -> int:
        return self._face_of[d]

    @property
    def face_list(self) -> list[Face]:
        # internal shared list; do not mutate
        return self._faces

    def bounded_faces(self) -> list[Face]:
        return [f for f in self._faces if f.bounded]

    def unbounded_faces(self) -> list[Face]:
        return [f for f in self._faces if not f.bounded]

    def external_vertices(self) -> frozenset[int]:
        if self._external is None:
            ext = {v for v, r in self._rot.items() if not r}
            for f in self._faces:
                if not f.bounded:
                    ext.update(f.vertices)
            self._external = frozenset(ext)
        return self._external

    def is_external_edge(self, a: int, b: int) -> bool:
        return (
            not self._faces[self._face_of[(a, b)]].bounded
            or not self._faces[self._face_of[(b, a)]].bounded
        )

    def corner_face(self, v: int, a: int) -> Face:
        """Face occupying the wedge at ``v`` from ``a`` counterclockwise to the next neighbour."""
        return self._faces[self._face_of[(v, a)]]

    # -- components ---------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        if self._comp is None:
            self._comp = _components(self._rot)
        return list(self._comp)

    # -- identity -----------------------------------------------------------

    def key(self) -> tuple:
        """Canonical hashable form: rotations started at the smallest neighbour."""
        if self._key is None:
            rots = []
            for v in sorted(self._rot):
                r = self._rot[v]
                if r:
                    i = r.index(min(r))
                    r = r[i:] + r[:i]
                rots.append((v, tuple(r)))
            self._key = (tuple(rots), self._outer)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"PlaneGraph(n={len(self)}, m={self.num_edges()}, faces={len(self._faces)})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _components(rot: Mapping[int, Sequence[int]]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(rot):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in rot[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def _trace(rot: Mapping[int, tuple[int, ...]]) -> tuple[list[tuple[Dart, ...]], dict[Dart, int]]:
    pos = {v: {w: i for i, w in enumerate(r)} for v, r in rot.items()}
    face_of: dict[Dart, int] = {}
    cycles: list[tuple[Dart, ...]] = []
    for v in sorted(rot):
        for w in rot[v]:
            if (v, w) in face_of:
                continue
            idx = len(cycles)
            cyc = []
            a, b = v, w
            while (a, b) not in face_of:
                face_of[(a, b)] = idx
                cyc.append((a, b))
                rb = rot[b]
                a, b = b, rb[pos[b][a] - 1]
            cycles.append(tuple(cyc))
    return cycles, face_of


def _check_euler(rot, comps, cycles, face_of) -> None:
    faces_per_comp: dict[int, set[int]] = {}
    where = {}
    for i, c in enumerate(comps):
        for v in c:
            where[v] = i
    for d, fi in face_of.items():
        faces_per_comp.setdefault(where[d[0]], set()).add(fi)
    for i, c in enumerate(comps):
        e = sum(len(rot[v]) for v in c) // 2
        if e == 0:
            continue
        f = len(faces_per_comp.get(i, ()))
        if len(c) - e + f != 2:
            raise EulerViolation(
                f"component containing {min(c)}: V-E+F = {len(c)}-{e}+{f} != 2"
            )


def build(rotation: Mapping[int, Sequence[int]], outer_darts: Iterable[Sequence[int]]) -> PlaneGraph:
    """Validate raw rotation data and return a :class:`PlaneGraph`.

    ``rotation`` maps every vertex to its neighbours in counterclockwise
    order (isolated vertices map to an empty sequence).  ``outer_darts``
    must contain exactly one dart per component that has an edge; the face
    to the left of that dart is the component's unbounded face.
    """
    rot: dict[int, tuple[int, ...]] = {}
    for v, r in rotation.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise GraphFormatError(f"vertex id {v!r} is not an integer")
        r = tuple(r)
        if v in r:
            raise MultiEdgeOrLoop(f"loop at vertex {v}")
        if len(set(r)) != len(r):
            raise MultiEdgeOrLoop(f"repeated neighbour in rotation of {v}")
        rot[v] = r
    for v, r in rot.items():
        for w in r:
            if w not in rot:
                raise GraphFormatError(f"rotation of {v} references undeclared vertex {w}")
            if v not in rot[w]:
                raise AsymmetricRotation(f"{w} is in the rotation of {v} but not vice versa")

    cycles, face_of = _trace(rot)
    comps = _components(rot)
    _check_euler(rot, comps, cycles, face_of)

    where = {v: i for i, c in enumerate(comps) for v in c}
    chosen: dict[int, int] = {}
    for d in outer_darts:
        d = tuple(d)
        if len(d) != 2 or d not in face_of:
            raise OuterDartMissing(f"declared outer dart {list(d)} is not a dart of the graph")
        ci = where[d[0]]
        if ci in chosen and chosen[ci] != face_of[d]:
            raise EmbeddingAmbiguity(f"component containing {min(comps[ci])} has two outer faces")
        chosen[ci] = face_of[d]
    for i, c in enumerate(comps):
        if i not in chosen and any(rot[v] for v in c):
            raise OuterDartMissing(f"component containing {min(c)} has no outer dart")

    unbounded = set(chosen.values())
    faces = [Face(cyc, i not in unbounded) for i, cyc in enumerate(cycles)]
    outer = tuple(sorted(min(cycles[fi]) for fi in unbounded))
    g = PlaneGraph(rot, faces, face_of, outer)
    g._comp = comps
    return g


def empty_graph() -> PlaneGraph:
    return build({}, [])


# ---------------------------------------------------------------------------
# deletion
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent.setdefault(x, x)
        if p != x:
            root = self.find(p)
            self.parent[x] = root
            return root
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def delete_vertices(g: PlaneGraph, removed: Iterable[int]) -> PlaneGraph:
    """Return ``g`` minus ``removed`` with the inherited embedding.

    The faces around deleted vertices merge.  A merged face is unbounded
    exactly when one of the faces it absorbed was unbounded; untouched faces
    keep their flag.  Raises :class:`EmbeddingAmbiguity` if some surviving
    component ends up with no unbounded face (it would sit inside a bounded
    merged face).
    """
    s = frozenset(removed)
    missing = s - g.vertices
    if missing:
        raise VertexNotPresent(f"vertices {sorted(missing)} are not in the graph")
    if not s:
        return g

    old_faces = g.face_list
    old_face_of = g._face_of
    uf = _UnionFind()
    touched: set[int] = set()
    for v in s:
        r = g._rot[v]
        if not r:
            continue
        first = old_face_of[(v, r[0])]
        for w in r:
            fi = old_face_of[(v, w)]
            touched.add(fi)
            uf.union(first, fi)
    unbounded_roots = set()
    for i, f in enumerate(old_faces):
        if not f.bounded:
            touched.add(i)
            unbounded_roots.add(uf.find(i))

    rot = {v: tuple(w for w in r if w not in s) for v, r in g._rot.items() if v not in s}
    cycles, face_of = _trace(rot)
    faces = []
    for cyc in cycles:
        flag = None
        for d in cyc:
            ofi = old_face_of[d]
            if ofi in touched:
                if uf.find(ofi) in unbounded_roots:
                    flag = False
                    break
                flag = True
        if flag is None:
            flag = old_faces[old_face_of[cyc[0]]].bounded
        faces.append(Face(cyc, flag))

    comps = _components(rot)
    where = {v: i for i, c in enumerate(comps) for v in c}
    outer_of: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        if not f.bounded:
            outer_of.setdefault(where[f.darts[0][0]], []).append(i)
    outer = []
    for i, c in enumerate(comps):
        if not any(rot[v] for v in c):
            continue
        fs = outer_of.get(i, [])
        if len(fs) != 1:
            raise EmbeddingAmbiguity(
                f"component containing {min(c)} has {len(fs)} unbounded faces after deletion"
            )
        outer.append(min(faces[fs[0]].darts))
    _check_euler(rot, comps, cycles, face_of)
    h = PlaneGraph(rot, faces, face_of, tuple(sorted(outer)))
    h._comp = comps
    return h


def induced(g: PlaneGraph, keep: Iterable[int]) -> PlaneGraph:
    keep = frozenset(keep)
    return delete_vertices(g, g.vertices - keep)


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


def blocks(g: PlaneGraph) -> BlockDecomposition:
    """Biconnected decomposition (iterative low-link depth-first search).

    Isolated vertices form K1 blocks.  Blocks are ordered by their sorted
    vertex tuples.
    """
    rot = g._rot
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[tuple[frozenset[int], frozenset[tuple[int, int]]]] = []
    counter = 0
    for root in sorted(rot):
        if root in disc:
            continue
        if not rot[root]:
            found.append((frozenset([root]), frozenset()))
            disc[root] = counter
            counter += 1
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(rot[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(rot[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent == -1 and not stack:
                break
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                verts: set[int] = set()
                es: set[tuple[int, int]] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.add(a)
                    verts.add(b)
                    es.add((a, b) if a < b else (b, a))
                    if (a, b) == (parent, v):
                        break
                found.append((frozenset(verts), frozenset(es)))
    found.sort(key=lambda vb: tuple(sorted(vb[0])))
    blist = tuple(Block(v, e) for v, e in found)
    count: dict[int, list[int]] = {}
    for i, b in enumerate(blist):
        for v in b.vertices:
            count.setdefault(v, []).append(i)
    tree = {v: tuple(bs) for v, bs in count.items() if len(bs) > 1}
    return BlockDecomposition(blist, frozenset(tree), tree)


def external_vertices(g: PlaneGraph) -> frozenset[int]:
    return g.external_vertices()


def faces(g: PlaneGraph) -> list[Face]:
    return g.faces()


def is_outerplanar_block(g: PlaneGraph, block: Block | Iterable[int]) -> bool:
    """True iff every vertex of the block lies on the block's own unbounded face."""
    verts = block.vertices if isinstance(block, Block) else frozenset(block)
    dec = blocks(g)
    if not any(b.vertices == verts for b in dec.blocks):
        raise NotABlock(f"{sorted(verts)} is not a block of the graph")
    if len(verts) <= 2:
        return True
    h = induced(g, verts)
    return verts <= h.external_vertices()


def interior_vertices(g: PlaneGraph, cycle: Sequence[int]) -> frozenset[int]:
    """Vertices strictly inside the given cycle of ``g``.

    The inside is the side of the cycle that does not contain the unbounded
    face of the cycle's component.
    """
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle needs at least three vertices")
    cyc_edges = set()
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if not g.adjacent(a, b):
            raise ValueError(f"{a}-{b} is not an edge")
        cyc_edges.add((a, b))
        cyc_edges.add((b, a))
    c0 = cycle[0]
    for seed in ((c0, cycle[1]), (c0, cycle[-1])):
        region = _face_region(g, g._face_of[seed], cyc_edges)
        if region is not None:
            cv = set(cycle)
            out = set()
            for fi in region:
                for d in g.face_list[fi].darts:
                    if d[0] not in cv:
                        out.add(d[0])
            return frozenset(out)
    raise EmbeddingAmbiguity("both sides of the cycle contain an unbounded face")


def _face_region(g: PlaneGraph, start: int, walls: set[Dart]) -> set[int] | None:
    """Faces reachable from ``start`` without crossing ``walls``; None if unbounded is reached."""
    faces_ = g.face_list
    seen = {start}
    stack = [start]
    while stack:
        fi = stack.pop()
        if not faces_[fi].bounded:
            return None
        for a, b in faces_[fi].darts:
            if (a, b) in walls:
                continue
            fj = g._face_of[(b, a)]
            if fj not in seen:
                seen.add(fj)
                stack.append(fj)
    return seen


# ---------------------------------------------------------------------------
# JSON graph format
# ---------------------------------------------------------------------------


def to_dict(g: PlaneGraph) -> dict:
    rot = {}
    for v, r in g.key()[0]:
        rot[str(v)] = list(r)
    return {
        "outer_darts": [list(d) for d in g.outer_darts],
        "rotation": rot,
        "vertices": sorted(g.vertices),
    }


def from_dict(data: Mapping) -> PlaneGraph:
    if not isinstance(data, Mapping):
        raise GraphFormatError("graph JSON must be an object")
    for k in ("vertices", "rotation", "outer_darts"):
        if k not in data:
            raise GraphFormatError(f"missing key {k!r}")
    try:
        verts = [int(v) for v in data["vertices"]]
        rot = {int(k): [int(w) for w in r] for k, r in data["rotation"].items()}
        outer = [tuple(int(x) for x in d) for d in data["outer_darts"]]
    except (TypeError, ValueError, AttributeError) as exc:
        raise GraphFormatError(f"non-integer vertex id: {exc}") from None
    if len(set(verts)) != len(verts):
        raise GraphFormatError("duplicate entries in 'vertices'")
    extra = set(rot) - set(verts)
    if extra:
        raise GraphFormatError(f"rotation keys {sorted(extra)} are not declared vertices")
    full = {v: rot.get(v, []) for v in verts}
    return build(full, outer)
