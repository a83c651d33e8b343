from itertools import combinations

import pytest

from wntdom.errors import NotNearTriangulation, NotTriangulation
from wntdom.generators import GenSpec, fixture, wheel
from wntdom.oracle import exact_domination_number, verify_dominating_set
from wntdom.pipeline import Strategy, bound, dominate, six_block_dominator, six_block_pair

U, X1, X2, Y, W1, W2, X = range(7)


def test_bound():
    assert bound(53) == 17 and bound(7) == 2 and bound(1000) == 320 and bound(0) == 0
    with pytest.raises(ValueError):
        bound(-1)


class TestSmallInputs:
    def test_k4(self):
        r = dominate(fixture("k4"))
        assert r.strategy is Strategy.EXACT_SMALL_INPUT and r.size == 1

    def test_octahedron(self):
        r = dominate(fixture("octahedron"))
        assert r.strategy is Strategy.EXACT_SMALL_INPUT and r.size == 2
        # the 17n/53 bound is not claimed below seven vertices
        assert not r.bound_ok


class TestDominate:
    def test_octastack7(self):
        g = fixture("octastack7")
        r = dominate(g)
        assert r.size <= 2 and verify_dominating_set(g, r.dominating_set)

    def test_icosahedron(self):
        r = dominate(fixture("icosahedron"))
        assert r.size <= 3 and r.bound_ok

    def test_not_triangulation(self):
        with pytest.raises(NotTriangulation):
            dominate(wheel(5))

    def test_json_shape(self):
        rec = dominate(GenSpec("stacked", 40, 2).generate()).to_json()
        assert set(rec) == {"set", "size", "bound", "strategy", "steps", "q"}
        assert rec["size"] == len(rec["set"]) <= rec["bound"] == bound(40)

    def test_candidate_bounds(self):
        for seed in range(30):
            g = GenSpec("flipwalk", 50, seed, 250).generate()
            r = dominate(g)
            n, q, k = len(g), r.q, len(r.steps)
            assert r.candidates["ReduceThenColor"] <= k + q // 3
            if "ReduceThenBlockCover" in r.candidates:
                assert r.candidates["ReduceThenBlockCover"] <= (n - q) + q // 5
            assert r.size == min(r.candidates.values())

    def test_deterministic(self):
        g = GenSpec("flipwalk", 80, 1, 400).generate()
        assert dominate(g).to_json() == dominate(g).to_json()


class TestSixBlocks:
    def test_dominator_fig2a(self):
        # u is the only internal vertex and covers itself; smallest id wins
        assert six_block_dominator(fixture("fig2a")) == U

    def test_dominator_fig2b(self):
        assert six_block_dominator(fixture("fig2b")) == U

    def test_dominator_octahedron(self):
        g = fixture("octahedron")
        d = six_block_dominator(g)
        internal = g.vertices - g.external_vertices()
        assert internal <= g.neighbors(d) | {d}

    def test_dominator_needs_order_six(self):
        with pytest.raises(NotNearTriangulation):
            six_block_dominator(fixture("fig2d"))

    def test_pairs(self):
        assert six_block_pair(fixture("fig2a")) == {U, Y}
        assert U in six_block_pair(fixture("fig2b"))
        p = six_block_pair(fixture("octahedron"))
        assert verify_dominating_set(fixture("octahedron"), p)

    def test_pair_is_first(self):
        g = fixture("fig2a")
        first = next(p for p in combinations(sorted(g.vertices), 2) if verify_dominating_set(g, p))
        assert six_block_pair(g) == set(first)


def test_small_gap_to_optimum():
    for seed in range(10):
        g = GenSpec("stacked", 12, seed).generate()
        r = dominate(g)
        assert exact_domination_number(g) <= r.size <= bound(12)
