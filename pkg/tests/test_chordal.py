import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from chordpow.chordal import (
    chordal_exponent,
    chordless_cycle,
    clique_matrix,
    is_chordal,
    maximal_cliques,
    maximum_cardinality_search,
    minimal_triangulation,
    peo_violation,
    perfect_clique_ordering,
    verify_decomposition,
)
from chordpow.errors import ArgumentError, CapacityError, DomainError
from chordpow.graph import Graph, generate, random_chordal, random_graph

from conftest import brute_near_clique, to_nx
from test_graph import graphs


class TestRecognition:
    def test_examples(self):
        assert maximum_cardinality_search(generate("complete:3")).is_chordal
        assert not maximum_cardinality_search(generate("cycle:4")).is_chordal
        assert maximum_cardinality_search(generate("band:6,2")).is_chordal

    @given(graphs(max_n=8))
    def test_agrees_with_networkx(self, g):
        assert is_chordal(g) == nx.is_chordal(to_nx(g))

    @given(graphs(max_n=8))
    def test_ordering_is_permutation(self, g):
        res = maximum_cardinality_search(g)
        assert sorted(res.order) == list(g.vertices)
        if res.is_chordal:
            assert peo_violation(g, res.peo) is None

    @given(graphs(max_n=8))
    def test_chordless_cycle_certificate(self, g):
        cyc = chordless_cycle(g)
        if is_chordal(g):
            assert cyc is None
            return
        k = len(cyc)
        assert k >= 4 and len(set(cyc)) == k
        for i, j in itertools.combinations(range(k), 2):
            adjacent = (j - i) in (1, k - 1)
            assert g.has_edge(cyc[i], cyc[j]) == adjacent

    def test_peo_violation_witness(self):
        g = generate("cycle:4")
        v, x, y = peo_violation(g, (1, 2, 3, 4))
        assert v == 1 and not g.has_edge(x, y)


class TestCliques:
    def test_examples(self):
        assert maximal_cliques(generate("band:5,2")) == [(1, 2, 3), (2, 3, 4), (3, 4, 5)]
        assert maximal_cliques(generate("complete:4")) == [(1, 2, 3, 4)]
        assert maximal_cliques(generate("cycle:4")) == [(1, 2), (1, 4), (2, 3), (3, 4)]

    @given(graphs(max_n=9))
    def test_agrees_with_networkx(self, g):
        ours = maximal_cliques(g)
        theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
        assert ours == theirs

    def test_cap_only_on_general_path(self):
        assert len(maximal_cliques(generate("path:80"))) == 79
        with pytest.raises(CapacityError):
            maximal_cliques(generate("cycle:80"))

    def test_clique_matrix(self):
        assert clique_matrix(generate("path:3")).tolist() == [[1, 0], [1, 1], [0, 1]]
        assert clique_matrix(generate("complete:3")).tolist() == [[1], [1], [1]]
        m = clique_matrix(generate("band:5,2"))
        assert [set(np.nonzero(m[:, j])[0] + 1) for j in range(3)] == [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}]


class TestPerfectOrdering:
    def test_band(self):
        o = perfect_clique_ordering(generate("band:5,2"))
        assert [sorted(s) for s in o.separators[1:]] == [[2, 3], [3, 4]]

    def test_complete(self):
        o = perfect_clique_ordering(generate("complete:6"))
        assert len(o.cliques) == 1 and o.separators == (frozenset(),)

    def test_path(self):
        o = perfect_clique_ordering(generate("path:4"))
        assert [sorted(c) for c in o.cliques] == [[1, 2], [2, 3], [3, 4]]
        assert [sorted(s) for s in o.separators[1:]] == [[2], [3]]
        assert [sorted(r) for r in o.residuals] == [[1, 2], [3], [4]]

    def test_non_chordal(self):
        with pytest.raises(DomainError, match="chordless cycle"):
            perfect_clique_ordering(generate("cycle:5"))

    def test_random_chordal_invariants(self, rng):
        for _ in range(300):
            g = random_chordal(int(rng.integers(1, 13)), rng, connected=bool(rng.integers(2)))
            assert perfect_clique_ordering(g).violations(g) == []

    def test_violations_detects_bad_order(self):
        from chordpow.chordal import CliqueOrdering
        g = generate("path:4")
        bad = CliqueOrdering((frozenset({1, 2}), frozenset({3, 4}), frozenset({2, 3})))
        assert perfect_clique_ordering(g).violations(g) == []
        # {3,4} meets nothing earlier: fine; {2,3} meets {2} and {3}, not inside one clique
        assert bad.violations(g)


class TestChordalExponent:
    def test_examples(self):
        assert chordal_exponent(generate("path:3")).ce == 1
        assert chordal_exponent(generate("complete:5")).ce == 3
        for d in range(1, 5):
            for n in range(d + 2, 11):
                assert chordal_exponent(generate(f"band:{n},{d}")).ce == d

    def test_hand_formula_path3(self):
        m = clique_matrix(generate("path:3"))
        assert (m.T @ m - 2 * np.eye(2)).tolist() == [[0, 1], [1, 0]]

    def test_routes_agree_and_match_near_clique(self, rng):
        for _ in range(150):
            g = random_chordal(int(rng.integers(2, 9)), rng)
            ce = chordal_exponent(g)
            assert ce.formula_ce == ce.ce == brute_near_clique(g) - 2

    def test_threshold_skips_formula(self):
        ce = chordal_exponent(generate("band:40,3"), formula_threshold=10)
        assert ce.formula_ce is None and ce.ce == 3

    def test_errors(self):
        with pytest.raises(DomainError):
            chordal_exponent(generate("cycle:4"))
        with pytest.raises(DomainError):
            chordal_exponent(Graph(3))
        with pytest.raises(ArgumentError):
            chordal_exponent(Graph(1))


class TestTriangulation:
    def test_examples(self):
        k = generate("band:6,2")
        assert minimal_triangulation(k) is k
        t = minimal_triangulation(generate("cycle:4"))
        assert t.m == 5 and is_chordal(t)
        t6 = minimal_triangulation(generate("cycle:6"))
        assert t6.m - 6 == 3 and is_chordal(t6)

    @pytest.mark.parametrize("n", range(4, 11))
    def test_cycles_get_n_minus_3_chords(self, n):
        c = generate(f"cycle:{n}")
        t = minimal_triangulation(c)
        assert t.m == n + n - 3

    @given(graphs(max_n=8))
    def test_chordal_supergraph_and_minimal(self, g):
        t = minimal_triangulation(g)
        assert g.is_subgraph_of(t) and nx.is_chordal(to_nx(t))
        # minimality: removing any single fill edge breaks chordality
        for e in t.edges - g.edges:
            assert not nx.is_chordal(to_nx(Graph(t.n, t.edges - {e})))

    def test_deterministic(self):
        g = generate("cycle:7")
        assert minimal_triangulation(g) == minimal_triangulation(g)


class TestDecomposition:
    def test_examples(self):
        assert verify_decomposition(generate("path:3"), {1}, {2}, {3}).ok
        chk = verify_decomposition(generate("cycle:4"), {1}, {2}, {3, 4})
        assert not chk.ok and chk.violating_path == (1, 4)
        assert verify_decomposition(generate("complete_minus_edge:4"), {1}, {2, 3}, {4}).ok

    def test_missing_edge(self):
        chk = verify_decomposition(generate("cycle:4"), {1}, {2, 4}, {3})
        assert not chk.ok and chk.missing_edge == (2, 4)

    def test_not_partition(self):
        with pytest.raises(ArgumentError):
            verify_decomposition(generate("path:3"), {1}, {2}, {2, 3})

    @given(graphs(min_n=3, max_n=7), st.data())
    def test_agrees_with_separation_oracle(self, g, data):
        labels = data.draw(st.lists(st.sampled_from("acb"), min_size=g.n, max_size=g.n))
        a = {v for v, l in zip(g.vertices, labels) if l == "a"}
        c = {v for v, l in zip(g.vertices, labels) if l == "c"}
        b = {v for v, l in zip(g.vertices, labels) if l == "b"}
        h = to_nx(g)
        h.remove_nodes_from(c)
        separated = not any(nx.has_path(h, x, y) for x in a for y in b)
        complete = g.is_clique(c)
        chk = verify_decomposition(g, a, c, b)
        assert chk.ok == (separated and complete)
        if chk.violating_path:
            p = chk.violating_path
            assert p[0] in a and p[-1] in b and not set(p) & c
            assert all(g.has_edge(x, y) for x, y in zip(p, p[1:]))
