import pytest

from wntdom.errors import UnknownFixture
from wntdom.generators import (
    FIXTURE_NAMES,
    GenSpec,
    SplitMix64,
    fan_strip,
    fixture,
    flip_walk,
    stacked,
    wnt_corpus,
)
from wntdom.io import dumps
from wntdom.plane_graph import blocks, is_outerplanar_block
from wntdom.wnt import is_near_triangulation, is_triangulation, is_wnt


def test_splitmix_reference_values():
    # first outputs for seed 0 of the standard SplitMix64 recurrence
    r = SplitMix64(0)
    assert [r.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_are_wnts(name):
    assert is_wnt(fixture(name))


def test_fixture_sizes():
    assert (len(fixture("octahedron")), fixture("octahedron").num_edges()) == (6, 12)
    assert (len(fixture("fig2a")), fixture("fig2a").num_edges()) == (6, 10)
    assert (len(fixture("fig2d")), fixture("fig2d").num_edges()) == (7, 13)
    assert (len(fixture("icosahedron")), fixture("icosahedron").num_edges()) == (12, 30)


def test_fig2d_faces():
    U, X1, X2, Y, W1, W2, X = range(7)
    got = {frozenset(f.vertices) for f in fixture("fig2d").bounded_faces()}
    want = [(U, X1, X2), (U, X2, W2), (U, W2, X), (U, X, W1), (U, W1, X1), (X, W1, W2), (Y, W1, W2)]
    assert got == {frozenset(t) for t in want}


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("dodecahedron")


def test_stacked_small():
    for s in (0, 5, 123):
        k4 = stacked(4, s)
        assert is_triangulation(k4) and k4.num_edges() == 6
    for s in range(5):
        assert is_triangulation(stacked(5, s))
    g = stacked(100, 1)
    assert len(g) == 100 and g.num_edges() == 3 * 100 - 6


def test_flip_walk():
    g = stacked(50, 7)
    assert flip_walk(g, 0, 3) == g
    k4 = fixture("k4")
    assert flip_walk(k4, 50, 1) == k4
    h = flip_walk(g, 500, 9)
    assert is_triangulation(h) and h != g and h.vertices == g.vertices


def test_fan_strip():
    assert len(fan_strip(1)) == 3
    for k in (2, 5):
        g = fan_strip(k)
        assert len(g) == 2 * k + 1
        assert is_near_triangulation(g)
        assert is_outerplanar_block(g, blocks(g).blocks[0])


def test_genspec_determinism():
    a = GenSpec("flipwalk", 40, 11, 200).generate()
    b = GenSpec("flipwalk", 40, 11, 200).generate()
    assert dumps(a) == dumps(b)


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec("stacked", 2)
    with pytest.raises(ValueError):
        GenSpec("wheel", 2)
    with pytest.raises(ValueError):
        GenSpec("nope", 5)


def test_corpus_is_distinct_wnts():
    corpus = wnt_corpus(max_n=8, seeds=3)
    keys = [g.key() for _, g in corpus]
    assert len(keys) == len(set(keys))
    assert all(is_wnt(g) and len(g) <= 8 for _, g in corpus)
