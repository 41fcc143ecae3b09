import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkernels import (
    Digraph,
    HColoredDigraph,
    PatternDigraph,
    absorbing_king,
    find_kernel,
    find_khl_kernel,
    geodesic_distance,
    h_length,
    is_absorbent,
    is_independent,
    is_k_h_independent,
    is_l_h_absorbent,
    is_path,
    kernel_by_paths,
    maximal_independent_sets,
    quasi_kernel,
)

from .oracles import (
    oracle_is_khl_kernel,
    oracle_kernels,
    oracle_khl_kernels,
    oracle_reachable,
)
from .strategies import colored_instances, digraphs


def colored(n, arcs, m, pattern_arcs, colors):
    return HColoredDigraph(Digraph(n, arcs), PatternDigraph(m, pattern_arcs), colors)


THREE_CYCLE = Digraph(3, [(0, 1), (1, 2), (2, 0)])
TWO_CYCLE = Digraph(2, [(0, 1), (1, 0)])
TRANSITIVE_T3 = Digraph(3, [(0, 1), (0, 2), (1, 2)])


class TestIndependentAbsorbent:
    def test_singleton_independent(self):
        assert is_independent(TWO_CYCLE, {0})

    def test_arc_endpoints_not_independent(self):
        assert not is_independent(Digraph(2, [(0, 1)]), {0, 1})

    def test_arcless_all_independent(self):
        assert is_independent(Digraph(3, []), {0, 1, 2})

    def test_whole_vertex_set_absorbent(self):
        assert is_absorbent(THREE_CYCLE, {0, 1, 2})

    def test_single_arc_absorption(self):
        single = Digraph(2, [(0, 1)])
        assert is_absorbent(single, {1})
        assert not is_absorbent(single, {0})

    def test_transitive_tournament_sink(self):
        assert is_absorbent(TRANSITIVE_T3, {2})


class TestMaximalIndependentSets:
    def test_two_arc_path(self):
        assert maximal_independent_sets(Digraph(3, [(0, 1), (1, 2)])) == [
            (0, 2),
            (1,),
        ]

    def test_arcless(self):
        assert maximal_independent_sets(Digraph(3, [])) == [(0, 1, 2)]

    def test_complete(self):
        assert maximal_independent_sets(TRANSITIVE_T3) == [(0,), (1,), (2,)]

    @given(digraphs(max_n=7))
    def test_sets_are_maximal_independent_and_complete(self, d):
        sets = maximal_independent_sets(d)
        listed = set(sets)
        assert sorted(listed) == sets
        for members in sets:
            assert is_independent(d, set(members))
            for v in range(d.n):
                if v not in members:
                    assert not is_independent(d, set(members) | {v})
        # every maximal independent subset shows up: grow each singleton greedily
        for bits in range(1 << d.n):
            s = {v for v in range(d.n) if bits >> v & 1}
            if is_independent(d, s) and not any(
                is_independent(d, s | {v}) for v in range(d.n) if v not in s
            ):
                assert tuple(sorted(s)) in listed


class TestFindKernel:
    def test_two_cycle_lex_least(self):
        assert find_kernel(TWO_CYCLE) == frozenset({0})

    def test_three_cycle_has_none(self):
        assert find_kernel(THREE_CYCLE) is None

    def test_transitive_tournament_sink(self):
        assert find_kernel(TRANSITIVE_T3) == frozenset({2})

    def test_guardrail(self):
        with pytest.raises(ValueError):
            find_kernel(Digraph(21, []))
        assert find_kernel(Digraph(21, []), max_n=25) == frozenset(range(21))

    @given(digraphs(max_n=6))
    def test_matches_subset_oracle(self, d):
        expected = oracle_kernels(d)
        got = find_kernel(d)
        if got is None:
            assert expected == []
        else:
            assert got in expected
            assert got == min(expected, key=sorted)

    @given(digraphs(max_n=6))
    def test_transitive_closure_always_has_kernel(self, d):
        reach = oracle_reachable(d)
        closed = Digraph(
            d.n,
            [(u, v) for u in range(d.n) for v in range(d.n) if u != v and reach[u][v]],
        )
        assert find_kernel(closed) is not None


class TestQuasiKernel:
    def test_arcless_whole_set(self):
        assert quasi_kernel(Digraph(3, [])) == frozenset({0, 1, 2})

    def test_three_cycle_singleton(self):
        assert quasi_kernel(THREE_CYCLE) == frozenset({0})

    @given(digraphs(max_n=7))
    def test_definition_holds(self, d):
        members = quasi_kernel(d)
        assert is_independent(d, members)
        for v in range(d.n):
            if v not in members:
                assert any(
                    (dist := geodesic_distance(d, v, s)) is not None and dist <= 2
                    for s in members
                )


class TestAbsorbingKing:
    def test_three_cycle(self):
        assert absorbing_king(THREE_CYCLE) == 0

    def test_transitive_tournament_sink(self):
        t4 = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert absorbing_king(t4) == 3

    def test_star_rejected(self):
        with pytest.raises(ValueError):
            absorbing_king(Digraph(3, [(0, 1), (0, 2)]))

    @given(digraphs(min_n=2, max_n=6))
    def test_king_distance_bound_on_semicomplete(self, d):
        completed = d.with_arcs(
            (u, v)
            for u in range(d.n)
            for v in range(u + 1, d.n)
            if not d.has_arc(u, v) and not d.has_arc(v, u)
        )
        king = absorbing_king(completed)
        for w in range(completed.n):
            if w != king:
                assert geodesic_distance(completed, w, king) <= 2


class TestKernelByPaths:
    def test_single_arc(self):
        assert kernel_by_paths(Digraph(2, [(0, 1)])) == frozenset({1})

    def test_two_disjoint_two_cycles(self):
        d = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        assert kernel_by_paths(d) == frozenset({0, 2})

    def test_strongly_connected_singleton(self):
        assert kernel_by_paths(THREE_CYCLE) == frozenset({0})

    @given(digraphs(max_n=7))
    def test_path_independence_and_absorbency(self, d):
        members = kernel_by_paths(d)
        reach = oracle_reachable(d)
        for a in members:
            for b in members:
                if a != b:
                    assert not reach[a][b]
        for v in range(d.n):
            if v not in members:
                assert any(reach[v][s] for s in members)


FOUR_PATH_BARE = colored(
    5,
    [(0, 1), (1, 2), (2, 3)],
    1,
    [],
    {(0, 1): 0, (1, 2): 0, (2, 3): 0},
)


class TestKHIndependence:
    def test_singleton_vacuous(self):
        assert is_k_h_independent(FOUR_PATH_BARE, {0}, 5)

    def test_arc_joined_members_fail_every_k(self):
        for k in (2, 3, 4):
            assert not is_k_h_independent(FOUR_PATH_BARE, {0, 1}, k)

    def test_h_length_three_boundary(self):
        # the only 0-3 path has H-length 3: independent at k=3, not at k=4
        assert is_k_h_independent(FOUR_PATH_BARE, {0, 3}, 3)
        assert not is_k_h_independent(FOUR_PATH_BARE, {0, 3}, 4)

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            is_k_h_independent(FOUR_PATH_BARE, {0, 3}, 1)


class TestLHAbsorbency:
    def test_whole_vertex_set(self):
        ok, witnesses = is_l_h_absorbent(FOUR_PATH_BARE, {0, 1, 2, 3, 4}, 1)
        assert ok and witnesses == {}

    def test_single_arc(self):
        g = colored(2, [(0, 1)], 1, [], {(0, 1): 0})
        ok, witnesses = is_l_h_absorbent(g, {1}, 1)
        assert ok and witnesses[0].vertices == (0, 1)

    def test_obstructed_needs_l2(self):
        g = colored(3, [(0, 1), (1, 2)], 2, [], {(0, 1): 0, (1, 2): 1})
        ok, _ = is_l_h_absorbent(g, {2}, 1)
        assert not ok
        ok, witnesses = is_l_h_absorbent(g, {2}, 2)
        assert ok
        assert witnesses[0].vertices == (0, 1, 2)
        assert witnesses[1].vertices == (1, 2)

    def test_isolated_vertex_blocks(self):
        ok, _ = is_l_h_absorbent(FOUR_PATH_BARE, {3}, 4)
        assert not ok  # vertex 4 reaches nothing

    def test_small_l_rejected(self):
        with pytest.raises(ValueError):
            is_l_h_absorbent(FOUR_PATH_BARE, {3}, 0)


class TestFindKhlKernel:
    def test_three_cycle_bare_pattern_absent_at_k2(self):
        g = colored(
            3, [(0, 1), (1, 2), (2, 0)], 1, [], {(0, 1): 0, (1, 2): 0, (2, 0): 0}
        )
        assert find_khl_kernel(g, 2) is None

    def test_three_cycle_bare_pattern_found_at_k3(self):
        g = colored(
            3, [(0, 1), (1, 2), (2, 0)], 1, [], {(0, 1): 0, (1, 2): 0, (2, 0): 0}
        )
        certificate = find_khl_kernel(g, 3)
        assert certificate is not None
        assert certificate.kind == "khl_kernel"
        assert (certificate.k, certificate.l) == (3, 2)

    def test_l_defaults_to_k_minus_one(self):
        g = colored(2, [(0, 1)], 1, [], {(0, 1): 0})
        certificate = find_khl_kernel(g, 4)
        assert certificate.l == 3

    def test_guardrail(self):
        g = HColoredDigraph(Digraph(21, []), PatternDigraph(1, []), {})
        with pytest.raises(ValueError):
            find_khl_kernel(g, 2)
        assert find_khl_kernel(g, 2, max_n=25) is not None

    def test_witnesses_certify_absorbency(self):
        g = colored(3, [(0, 1), (1, 2)], 2, [], {(0, 1): 0, (1, 2): 1})
        certificate = find_khl_kernel(g, 3)
        assert certificate is not None
        for v, walk in certificate.witnesses.items():
            assert v not in certificate.members
            assert is_path(g.base, walk)
            assert walk.start == v and walk.end in certificate.members
            assert h_length(g, walk) <= certificate.l

    @given(colored_instances(max_n=4), st.integers(2, 4))
    def test_default_l_matches_subset_oracle(self, g, k):
        expected = oracle_khl_kernels(g, k, k - 1)
        certificate = find_khl_kernel(g, k)
        if certificate is None:
            assert expected == []
        else:
            assert certificate.members in expected

    @given(colored_instances(max_n=4), st.integers(2, 3), st.integers(1, 4))
    def test_general_l_matches_subset_oracle(self, g, k, l):
        expected = oracle_khl_kernels(g, k, l)
        certificate = find_khl_kernel(g, k, l)
        if certificate is None:
            assert expected == []
        else:
            assert certificate.members in expected
            assert oracle_is_khl_kernel(g, set(certificate.members), k, l)

    @given(colored_instances(max_n=4), st.integers(2, 3))
    def test_certificates_reverify(self, g, k):
        certificate = find_khl_kernel(g, k)
        if certificate is not None:
            assert is_k_h_independent(g, certificate.members, k)
            ok, _ = is_l_h_absorbent(g, certificate.members, k - 1)
            assert ok
