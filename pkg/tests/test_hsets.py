import itertools
import math

import pytest
from hypothesis import given, strategies as st

from chordpow.errors import ArgumentError, CapacityError, DomainError
from chordpow.graph import (Graph, add_path, coalesce, disjoint_union, generate, random_chordal,
                            random_graph, random_tree, schur_complement_graph)
from chordpow.hsets import KINDS, Discrete, HSet, HSetReport, critical_exponent_chordal, hset

from conftest import brute_near_clique

N, ODD, EVEN, EMPTY = Discrete.NATURALS, Discrete.ODD, Discrete.EVEN, Discrete.EMPTY


def ex(d, t):
    return HSet.exact(d, t)


discretes = st.sampled_from(list(Discrete))
rays = st.sampled_from([-math.inf, 0.0, 0.5, 1.0, 1.5, 2.0, 2.75, 3.0, 4.0, 5.5])
exact_sets = st.builds(ex, discretes, rays)
alphas = st.sampled_from([-1.0, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0, 7.25])


class TestHSetAlgebra:
    def test_membership(self):
        h = ex(N, 2.5)
        assert h.contains(1) and h.contains(2) and not h.contains(1.5) and h.contains(2.5)
        assert not h.contains(0)
        o = ex(ODD, 4)
        assert o.contains(3) and not o.contains(2) and o.contains(4.1)
        assert ex(EMPTY, -math.inf).contains(-7.0)

    def test_canonical_equality(self):
        assert ex(N, 1) == ex(EMPTY, 1) == ex(ODD, 1)
        assert ex(ODD, 2) == ex(N, 2) != ex(EVEN, 2)
        assert ex(EVEN, 3) != ex(N, 3)
        assert hash(ex(N, 1)) == hash(ex(EVEN, 1))

    @given(exact_sets, exact_sets, alphas)
    def test_intersection_membership(self, a, b, x):
        probe = [k / 4 for k in range(-8, 40)]
        want = [a.contains(y) and b.contains(y) for y in probe]
        try:
            c = a.intersect(b)
        except DomainError:
            # only allowed when no set of the form D u [t, inf) has that membership
            cands = [ex(d, t) for d in Discrete for t in [-math.inf] + [k / 4 for k in range(-8, 40)]]
            assert not any([h.contains(y) for y in probe] == want for h in cands)
            return
        assert c.contains(x) == (a.contains(x) and b.contains(x))
        assert [c.contains(y) for y in probe] == want

    @given(exact_sets, exact_sets)
    def test_subset_consistent_with_membership(self, a, b):
        probe = [k / 4 for k in range(-4, 40)]
        if a.issubset(b):
            assert all(b.contains(x) for x in probe if a.contains(x))
        else:
            assert any(a.contains(x) and not b.contains(x) for x in probe) or a.ray_start < b.ray_start

    def test_bounded(self):
        h = HSet.bounded(ex(EMPTY, 2), ex(EMPTY, 1), [1.0])
        assert h.mode == "bounded" and h.ray_start == 2
        assert h.contains(2) is True and h.contains(0.5) is False
        assert h.contains(1) is False and h.contains(1.5) is None
        assert HSet.bounded(ex(N, 2), ex(ODD, 2)) == ex(N, 2)
        with pytest.raises(ArgumentError):
            HSet.bounded(ex(EMPTY, 1), ex(EMPTY, 2))
        with pytest.raises(ArgumentError):
            HSet.bounded(ex(EMPTY, 1), ex(EMPTY, 0), [1.0])

    def test_non_representable(self):
        with pytest.raises(DomainError):
            ex(EMPTY, 1.5).intersect(ex(N, 4))
        assert ex(ODD, 5).intersect(ex(EVEN, 5)) == ex(EMPTY, 5)

    @given(exact_sets)
    def test_dict_roundtrip(self, h):
        assert HSet.from_dict(h.to_dict()) == h

    def test_str(self):
        assert str(ex(N, 3)) == "N u [3, inf)"
        assert str(ex(N, 1)) == "[1, inf)"
        assert str(ex(EMPTY, -math.inf)) == "R"


class TestChordalReports:
    def test_examples(self):
        assert critical_exponent_chordal(generate("path:3")).ce_plain == 1
        r = critical_exponent_chordal(generate("complete:5"))
        assert (r.ce_plain, r.ce_psi, r.ce_phi, r.method) == (3, 3, 3, "complete_formula")
        r = critical_exponent_chordal(generate("band:8,3"))
        assert r.ce_plain == 3 and r.method == "chordal_formula"
        assert r.hset_psi == ex(ODD, 3) and r.hset_phi == ex(EVEN, 3)

    def test_tree_method(self):
        assert critical_exponent_chordal(generate("star:4")).method == "tree"

    def test_invariants_random(self, rng):
        for _ in range(100):
            g = random_chordal(int(rng.integers(2, 9)), rng)
            r = hset(g)
            assert r.ce_plain == r.ce_psi == r.ce_phi == r.r - 2 == max(r.omega - 2, r.s)
            assert r.r == brute_near_clique(g)
            assert r.ce_plain <= g.n - 2


def _has_edge_graph(g):
    return g.m > 0


class TestDispatcher:
    def test_cycle_5(self):
        r = hset(generate("cycle:5"))
        assert r.method == "cycle"
        assert r.hset_plain == ex(EMPTY, 1) and r.hset_psi == ex(EMPTY, 1)
        phi = r.hset_phi
        assert phi.mode == "bounded" and phi.lower == ex(EMPTY, 2) and phi.upper == ex(EMPTY, 1)
        assert phi.exclusions == ()

    def test_cycle_even(self):
        assert hset(generate("cycle:4")).hset_phi == ex(EMPTY, 2)
        phi = hset(generate("cycle:6")).hset_phi
        assert phi.mode == "bounded" and phi.exclusions == (1.0,)

    def test_bipartite(self):
        r = hset(generate("complete_bipartite:3,3"))
        assert r.method == "bipartite" and r.hset_plain == ex(EMPTY, 1)
        assert r.hset_psi.lower == ex(ODD, 3) and r.hset_psi.upper == ex(EMPTY, 1)
        r = hset(generate("complete_bipartite:2,5"))
        assert r.hset_phi == ex(EMPTY, 2)
        assert r.hset_psi.lower == ex(ODD, 2)

    def test_coalescence(self):
        g, _, _ = coalesce(generate("cycle:4"), 1, generate("complete:3"), 1)
        r = hset(g)
        assert r.method == "coalescence" and r.hset_psi == ex(EMPTY, 1)
        g, _, _ = coalesce(generate("cycle:4"), 1, generate("cycle:4"), 1)
        r = hset(g)
        assert r.hset_psi == ex(EMPTY, 1) and r.hset_phi == ex(EMPTY, 2)

    def test_k2_union_and_edgeless(self):
        r = hset(Graph(4, [(1, 2), (3, 4)]))
        assert r.method == "k2_union" and all(r.hset(k) == ex(EMPTY, 0) for k in KINDS)
        r = hset(Graph(5, [(1, 2), (3, 4)]))
        assert r.method == "k2_union"
        r = hset(Graph(3))
        assert r.ce_plain == -math.inf

    def test_disconnected(self):
        r = hset(disjoint_union(generate("cycle:5"), generate("complete:4")))
        assert r.hset_plain == ex(N, 2)
        # K4 pins the phi set of the 5-cycle from above, so the bounds collapse
        assert r.hset_phi == ex(EMPTY, 2)
        r = hset(disjoint_union(generate("cycle:5"), generate("path:3")))
        assert r.hset_phi.lower == ex(EMPTY, 2) and r.hset_phi.upper == ex(EMPTY, 1)

    def test_general_bounds(self):
        # 5-cycle with a chord-free handle: triangle-free, not bipartite, 2-connected
        g = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (6, 3)])
        r = hset(g)
        assert r.method == "triangulation_bounds"
        lo, hi = r.ce_bounds("plain")
        assert lo <= hi and lo == r.r - 2

    def test_cycle_pasting_exact(self):
        g = add_path(generate("complete:4"), 1, 2, 4)
        r = hset(g)
        assert r.is_exact and r.ce_plain == r.ce_psi == r.ce_phi == 2

    def test_capacity(self):
        with pytest.raises(CapacityError):
            hset(generate("cycle:70"))
        assert hset(generate("cycle:70"), cap=None).hset_psi == ex(EMPTY, 1)
        assert hset(generate("path:200")).ce_plain == 1

    def test_small(self):
        with pytest.raises(ArgumentError):
            hset(Graph(1))

    @pytest.mark.parametrize("base", ["cycle:5", "cycle:6", "complete_bipartite:3,3", "complete:4",
                                      "band:7,2"])
    def test_pendant_trees_do_not_change_sets(self, base, rng):
        g0 = generate(base)
        r0 = hset(g0)
        g = g0
        for v in (1, 2):
            g, _, _ = coalesce(g, v, random_tree(int(rng.integers(2, 5)), rng), 1)
        r = hset(g)
        for k in KINDS:
            assert r.hset(k) == r0.hset(k)

    def test_report_dict_roundtrip(self):
        for f in ["cycle:5", "band:6,3", "complete_bipartite:3,4"]:
            r = hset(generate(f))
            assert HSetReport.from_dict(r.to_dict()) == r


def _small_connected(rng, n):
    while True:
        g = random_graph(n, 0.5, rng)
        if g.is_connected():
            return g


class TestDispatcherProperties:
    def test_ce_parity_and_range(self, rng):
        for _ in range(120):
            g = _small_connected(rng, int(rng.integers(3, 8)))
            r = hset(g)
            for k in KINDS:
                lo, hi = r.ce_bounds(k)
                assert lo <= hi <= g.n - 2
                h = r.hset(k)
                if h.mode == "bounded":
                    assert h.lower.issubset(h.upper)
            if r.hset_psi.is_exact and r.hset_phi.is_exact:
                assert abs(r.ce_psi - r.ce_phi) <= 1
            # r - 2 bounds the critical exponent from below
            for k in KINDS:
                assert r.ce_bounds(k)[0] >= min(r.r - 2, 1) or r.r - 2 <= 1

    def test_monotone_under_subgraphs(self, rng):
        for _ in range(120):
            g = _small_connected(rng, int(rng.integers(3, 7)))
            drop = [e for e in g.edges if rng.random() < 0.3]
            h = Graph(g.n, g.edges - set(drop))
            if h.m == 0:
                continue
            rg, rh = hset(g), hset(h)
            for k in KINDS:
                a, b = rg.hset(k), rh.hset(k)
                if a.is_exact and b.is_exact:
                    assert a.issubset(b)
                # a certified member of the bigger graph's set must be allowed by the smaller one
                assert a.inner.issubset(b.outer)

    def test_schur_complement_shift(self, rng):
        # 1 + H(G/v) lies in H(G) for exact pairs
        for _ in range(120):
            g = _small_connected(rng, int(rng.integers(3, 7)))
            v = int(rng.integers(1, g.n + 1))
            h = schur_complement_graph(g, v)
            if h.m == 0 or h.n < 2:
                continue
            rg, rh = hset(g), hset(h)
            if rg.hset_plain.is_exact and rh.hset_plain.is_exact:
                shifted = [x + 1 for x in [0.25 * k for k in range(0, 40)] if rh.hset_plain.contains(x)]
                assert all(rg.hset_plain.contains(y) for y in shifted)

    @pytest.mark.parametrize("length", [2, 3, 4, 5])
    def test_added_paths_keep_psi_nested(self, length):
        # H^psi(G_m) grows with the added path length
        g = generate("complete:4")
        prev = None
        for m in range(2, 2 + length):
            r = hset(add_path(g, 1, 2, m)).hset_psi
            if prev is not None and r.is_exact and prev.is_exact:
                assert prev.issubset(r)
            prev = r
