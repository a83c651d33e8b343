import pytest

from wntdom.errors import LemmaViolation, NotWnt, PreconditionViolated, VertexNotPresent
from wntdom.generators import fixture, stacked, wheel
from wntdom.plane_graph import build, delete_vertices
from wntdom.wnt import (
    WitnessKind,
    bad_vertices,
    classify_blocks,
    external_deletion_check,
    gluing_check,
    interior_bad_adjacency_check,
    is_near_triangulation,
    is_triangulation,
    is_wnt,
    is_wnt_minus,
    neighbourhood_deletion_check,
    remove_center_with_bad,
    wnt_minus_local,
    wnt_witness,
)

U, X1, X2, Y, W1, W2, X = range(7)


def path3():
    return build({0: [1], 1: [0, 2], 2: [1]}, [(0, 1)])


def bowtie():
    return build({0: [1, 2, 3, 4], 1: [2, 0], 2: [0, 1], 3: [4, 0], 4: [0, 3]}, [(1, 0)])


class TestPredicates:
    def test_octahedron(self):
        assert is_wnt(fixture("octahedron"))
        assert is_wnt(delete_vertices(fixture("octahedron"), [0]))
        # an internal vertex leaves a bounded quadrilateral behind
        assert not is_wnt(delete_vertices(fixture("octahedron"), [3]))

    def test_path(self):
        assert not is_wnt(path3())
        w = wnt_witness(path3())
        assert w.kind is WitnessKind.TRIANGLE_FREE_VERTEX and w.recheck(path3())

    def test_empty(self):
        assert is_wnt(delete_vertices(fixture("k4"), range(4)))

    def test_non_triangular_bounded_face(self):
        g = delete_vertices(fixture("icosahedron"), [11])
        w = wnt_witness(g)
        assert w.kind is WitnessKind.NON_TRIANGULAR_BOUNDED_FACE and len(w.face) == 5
        assert w.recheck(g)

    def test_triangulation_flags(self):
        assert is_triangulation(fixture("k4"))
        assert not is_triangulation(wheel(4)) and is_near_triangulation(wheel(4))
        assert not is_triangulation(bowtie()) and not is_near_triangulation(bowtie())


class TestBlocks:
    def test_fig2a(self):
        (info,) = classify_blocks(fixture("fig2a"))
        assert (info.kind, info.order, info.outerplanar) == ("NearTriangulation", 6, False)

    def test_octahedron(self):
        (info,) = classify_blocks(fixture("octahedron"))
        assert (info.order, info.outerplanar) == (6, False)

    def test_bowtie(self):
        infos = classify_blocks(bowtie())
        assert [(i.kind, i.outerplanar, i.order) for i in infos] == [("NearTriangulation", True, 3)] * 2

    def test_requires_wnt(self):
        with pytest.raises(NotWnt):
            classify_blocks(path3())


class TestBadVertices:
    def test_fig2a(self):
        bs = bad_vertices(fixture("fig2a"), U)
        assert bs.bad == {X1, X2} and bs.problematic

    def test_wheel_hub(self):
        bs = bad_vertices(wheel(4), 0)
        assert bs.bad == {1, 2, 3, 4}

    def test_octahedron(self):
        g = fixture("octahedron")
        ext = g.external_vertices()
        for u in g.vertices:
            bs = bad_vertices(g, u)
            assert bs.bad == set()
            assert bs.problematic == (u not in ext)

    def test_missing(self):
        with pytest.raises(VertexNotPresent):
            bad_vertices(wheel(4), 9)


class TestCenterRemoval:
    def test_wheel(self):
        assert len(remove_center_with_bad(wheel(4), 0)) == 0

    def test_fig2a(self):
        h = remove_center_with_bad(fixture("fig2a"), U)
        assert h.vertices == {W1, W2, Y} and is_wnt(h)

    def test_octahedron_rejected(self):
        # external: not problematic; internal: problematic but no bad vertex
        for u in range(6):
            with pytest.raises(PreconditionViolated):
                remove_center_with_bad(fixture("octahedron"), u)


class TestGluing:
    def test_fig2d(self):
        g = fixture("fig2d")
        assert gluing_check(g, {U, X1, X2, W1, X, Y, W2}, {W1, X1, X, Y})

    def test_vacuous(self):
        g = fixture("fig2d")
        d = {W1, X1, X, Y}
        assert gluing_check(g, d, d)

    def test_fig2a_external_member(self):
        # D = {u, x1} lies in N[u] and x1 is external, so the hypotheses hold;
        # x2 then has no triangle left and the answer is no.
        assert gluing_check(fixture("fig2a"), {U, X1, X2}, {U, X1}) is False

    def test_no_external_member(self):
        g = fixture("octastack7")
        with pytest.raises(PreconditionViolated):
            gluing_check(g, {3, 4, 5, 6}, {6})

    def test_d_not_in_neighbourhood(self):
        with pytest.raises(PreconditionViolated):
            gluing_check(fixture("fig2a"), {U, X1, X2, Y}, {X1, Y})


class TestInteriorBad:
    def test_vacuous_on_stack5(self):
        # inside triangle 0-1-3 sits vertex 4, which stays on a triangle
        g = fixture("stack5")
        assert interior_bad_adjacency_check(g, {0}, (0, 1, 3), 4)

    def test_u_outside_x(self):
        with pytest.raises(PreconditionViolated):
            interior_bad_adjacency_check(fixture("stack5"), {2}, (0, 1, 3), 4)

    def test_reported_bad_vertices(self):
        g = fixture("stack5")
        assert interior_bad_adjacency_check(g, {0}, (0, 1, 3), 4, bad=[1])


class TestDeletionInvariants:
    def test_external_deletions(self):
        for seed in range(20):
            g = stacked(12, seed)
            for x in g.external_vertices():
                h = external_deletion_check(g, x)
                assert g.neighbors(x) <= h.external_vertices()

    def test_external_required(self):
        with pytest.raises(PreconditionViolated):
            external_deletion_check(fixture("fig2a"), U)

    def test_neighbourhood_deletion(self):
        g = fixture("fig2d")
        h = neighbourhood_deletion_check(g, {W1, X1, X, Y})
        assert all(len(f) == 3 for f in h.bounded_faces())
        with pytest.raises(PreconditionViolated):
            neighbourhood_deletion_check(g, {U, X})


class TestLocalCheck:
    def test_matches_full_route_on_small_cases(self):
        g = fixture("icosahedron")
        for a in sorted(g.vertices):
            for b in sorted(g.vertices):
                assert wnt_minus_local(g, {a, b}) == is_wnt_minus(g, {a, b})

    def test_fig2d_step(self):
        assert is_wnt_minus(fixture("fig2d"), {W1, X1, X, Y})
        assert not is_wnt_minus(fixture("fig2d"), {U})


def test_lemma_violation_carries_graph():
    err = LemmaViolation("boom", graph=wheel(3), trace={"u": 0})
    assert err.graph == wheel(3) and err.trace == {"u": 0}
