"""Randomised invariants over generated triangulations and their deletions."""

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from wntdom import io
from wntdom.coloring import is_dominating_coloring, wnt_dominating_coloring
from wntdom.errors import EmbeddingAmbiguity
from wntdom.generators import GenSpec
from wntdom.oracle import is_wnt_reference
from wntdom.pipeline import dominate
from wntdom.plane_graph import delete_vertices
from wntdom.wnt import (
    bad_vertices,
    external_deletion_check,
    is_wnt,
    is_wnt_minus,
    neighbourhood_deletion_check,
    wnt_minus_local,
)

SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def triangulations(draw, lo=4, hi=40):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 2**64 - 1))
    if draw(st.booleans()):
        return GenSpec("flipwalk", n, seed, draw(st.integers(0, 6 * n))).generate()
    return GenSpec("stacked", n, seed).generate()


@st.composite
def wnts(draw):
    """A triangulation with a few vertices removed, as long as the result stays a WNT."""
    g = draw(triangulations())
    verts = sorted(g.vertices)
    drop = draw(st.lists(st.sampled_from(verts), max_size=min(6, len(verts)), unique=True))
    try:
        h = delete_vertices(g, drop)
    except EmbeddingAmbiguity:  # left a component inside a bounded face
        return g
    return h if is_wnt(h) else g


def delete_or_reject(g, drop):
    try:
        return delete_vertices(g, drop)
    except EmbeddingAmbiguity:
        assume(False)


def face_multiset(g):
    return sorted((tuple(sorted(f.darts)), f.bounded) for f in g.faces())


@SETTINGS
@given(g=triangulations(), data=st.data())
def test_local_check_matches_full_route(g, data):
    verts = sorted(g.vertices)
    d = data.draw(st.lists(st.sampled_from(verts), min_size=1, max_size=6, unique=True))
    assert wnt_minus_local(g, d) == is_wnt_minus(g, d)


@SETTINGS
@given(g=triangulations(hi=20), data=st.data())
def test_reference_agrees(g, data):
    verts = sorted(g.vertices)
    d = data.draw(st.lists(st.sampled_from(verts), max_size=5, unique=True))
    h = delete_or_reject(g, d)
    assert is_wnt(h) == is_wnt_reference(h)


@SETTINGS
@given(g=triangulations(), data=st.data())
def test_deletion_monotone(g, data):
    verts = sorted(g.vertices)
    a = data.draw(st.lists(st.sampled_from(verts), max_size=4, unique=True))
    b = data.draw(st.lists(st.sampled_from([v for v in verts if v not in a] or verts), max_size=4, unique=True))
    b = [v for v in b if v not in a]
    two = delete_or_reject(delete_or_reject(g, a), b)
    one = delete_or_reject(g, set(a) | set(b))
    assert two.vertices == one.vertices
    assert face_multiset(two) == face_multiset(one)


@SETTINGS
@given(g=triangulations(), data=st.data())
def test_euler_after_deletion(g, data):
    verts = sorted(g.vertices)
    h = delete_or_reject(g, data.draw(st.lists(st.sampled_from(verts), max_size=8, unique=True)))
    for comp in h.components():
        e = sum(1 for a, b in h.edges() if a in comp)
        f = {h.face_index(d) for v in comp for d in ((v, w) for w in h.rotation[v])}
        if e:
            assert len(comp) - e + len(f) == 2
        assert sum(1 for fi in f if not h.face_list[fi].bounded) <= 1


@SETTINGS
@given(g=wnts())
def test_non_triangular_faces_are_unbounded(g):
    assert all(len(f) == 3 for f in g.bounded_faces())


@SETTINGS
@given(g=wnts())
def test_vertices_lie_on_facial_triangles(g):
    # adjacency triangles and facial triangles give the same WNT notion
    on_face = {v for f in g.bounded_faces() for v in f.vertices}
    assert on_face == g.vertices


@SETTINGS
@given(g=wnts())
def test_bad_vertices_are_external_neighbours(g):
    ext = g.external_vertices()
    for u in g.vertices:
        assert bad_vertices(g, u).bad <= ext & g.neighbors(u)


@SETTINGS
@given(g=wnts())
def test_external_deletion(g):
    for x in sorted(g.external_vertices()):
        external_deletion_check(g, x)


@SETTINGS
@given(g=wnts(), data=st.data())
def test_neighbourhood_deletion(g, data):
    if not len(g):
        return
    y = data.draw(st.sampled_from(sorted(g.vertices)))
    nb = sorted(g.neighbors(y))
    d = {y} | set(data.draw(st.lists(st.sampled_from(nb), unique=True))) if nb else {y}
    if d & g.external_vertices():
        neighbourhood_deletion_check(g, d)


@SETTINGS
@given(g=wnts())
def test_json_round_trip(g):
    text = io.dumps(g)
    assert io.loads(text) == g
    assert io.dumps(io.loads(text)) == text


@SETTINGS
@given(g=wnts())
def test_coloring(g):
    col = wnt_dominating_coloring(g)
    assert is_dominating_coloring(g, col)
    assert len(col.smallest()) <= len(g) // 3


@settings(max_examples=40, deadline=None)
@given(g=triangulations(lo=7, hi=60))
def test_dominate_deterministic(g):
    assert dominate(g).to_json() == dominate(g).to_json()
