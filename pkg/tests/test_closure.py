import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkernels import (
    Digraph,
    HColoredDigraph,
    PatternDigraph,
    Walk,
    build_closure,
    closed_walk_symmetric_pair,
    enumerate_cycles,
    h_length,
    has_asymmetric_cycle,
    is_cycle,
    is_path,
    walk_implies_closure_arc,
)

from .oracles import oracle_asymmetric_cycles, oracle_closure
from .strategies import colored_instances, digraphs, instances_with_open_walk


def colored(n, arcs, m, pattern_arcs, colors):
    return HColoredDigraph(Digraph(n, arcs), PatternDigraph(m, pattern_arcs), colors)


OBSTRUCTED_PATH = colored(3, [(0, 1), (1, 2)], 2, [], {(0, 1): 0, (1, 2): 1})


class TestBuildClosure:
    def test_single_arc(self):
        g = colored(2, [(0, 1)], 1, [], {(0, 1): 0})
        assert sorted(build_closure(g, 2).closure.arcs) == [(0, 1)]

    def test_obstructed_pair_appears_at_k3(self):
        assert not build_closure(OBSTRUCTED_PATH, 2).closure.has_arc(0, 2)
        assert build_closure(OBSTRUCTED_PATH, 3).closure.has_arc(0, 2)

    def test_full_pattern_gives_complete_closure(self):
        cycle = colored(
            3,
            [(0, 1), (1, 2), (2, 0)],
            1,
            [(0, 0)],
            {(0, 1): 0, (1, 2): 0, (2, 0): 0},
        )
        for k in (2, 3):
            got = build_closure(cycle, k).closure
            assert len(got.arcs) == 6

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            build_closure(OBSTRUCTED_PATH, 1)

    @given(colored_instances(max_n=5), st.integers(2, 4))
    def test_matches_oracle(self, g, k):
        assert set(build_closure(g, k).closure.arcs) == oracle_closure(g, k)

    @given(colored_instances(max_n=5))
    def test_monotone_in_k_and_contains_base(self, g):
        previous = set()
        for k in (2, 3, 4):
            arcs = set(build_closure(g, k, store_witnesses=False).closure.arcs)
            assert previous <= arcs
            assert set(g.base.arcs) <= arcs
            previous = arcs

    @given(colored_instances(max_n=5), st.integers(2, 4))
    def test_witnesses_certify_every_arc(self, g, k):
        result = build_closure(g, k)
        assert set(result.witnesses) == set(result.closure.arcs)
        for (u, v), walk in result.witnesses.items():
            assert is_path(g.base, walk)
            assert (walk.start, walk.end) == (u, v)
            assert h_length(g, walk) <= k - 1
            assert result.witness(u, v) == walk

    def test_witness_lookup_errors(self):
        result = build_closure(OBSTRUCTED_PATH, 2)
        with pytest.raises(ValueError):
            result.witness(0, 2)
        bare = build_closure(OBSTRUCTED_PATH, 2, store_witnesses=False)
        assert bare.witnesses is None
        with pytest.raises(ValueError):
            bare.witness(0, 1)


class TestWalkImpliesClosureArc:
    def test_path_returned_unchanged(self):
        walk = Walk((0, 1, 2))
        assert walk_implies_closure_arc(OBSTRUCTED_PATH, walk, 3) == walk

    def test_repeated_vertex_shortens(self):
        g = colored(
            3,
            [(0, 1), (1, 0), (0, 2)],
            1,
            [(0, 0)],
            {(0, 1): 0, (1, 0): 0, (0, 2): 0},
        )
        witness = walk_implies_closure_arc(g, Walk((0, 1, 0, 2)), 4)
        assert witness.vertices == (0, 2)

    def test_closed_walk_rejected(self):
        g = colored(2, [(0, 1), (1, 0)], 1, [], {(0, 1): 0, (1, 0): 0})
        with pytest.raises(ValueError):
            walk_implies_closure_arc(g, Walk((0, 1, 0)), 3)

    def test_overlong_walk_rejected(self):
        with pytest.raises(ValueError):
            walk_implies_closure_arc(OBSTRUCTED_PATH, Walk((0, 1, 2)), 2)

    @given(instances_with_open_walk(max_len=3))
    def test_witness_certifies_closure_arc(self, pair):
        g, walk = pair
        k = walk.length + 1
        witness = walk_implies_closure_arc(g, walk, k)
        assert is_path(g.base, witness)
        assert (witness.start, witness.end) == (walk.start, walk.end)
        assert h_length(g, witness) <= k - 1
        assert build_closure(g, k, store_witnesses=False).closure.has_arc(
            walk.start, walk.end
        )


class TestClosedWalkSymmetricPair:
    def test_two_cycle(self):
        g = colored(2, [(0, 1), (1, 0)], 1, [], {(0, 1): 0, (1, 0): 0})
        forward, backward = closed_walk_symmetric_pair(g, Walk((0, 1, 0)), 2, 0, 1)
        assert forward.vertices == (0, 1)
        assert backward.vertices == (1, 0)

    def test_three_cycle_all_pairs(self):
        g = colored(
            3, [(0, 1), (1, 2), (2, 0)], 1, [], {(0, 1): 0, (1, 2): 0, (2, 0): 0}
        )
        closure = build_closure(g, 3, store_witnesses=False).closure
        walk = Walk((0, 1, 2, 0))
        for u, v in [(0, 1), (0, 2), (1, 2)]:
            forward, backward = closed_walk_symmetric_pair(g, walk, 3, u, v)
            for witness, (a, b) in ((forward, (u, v)), (backward, (v, u))):
                assert (witness.start, witness.end) == (a, b)
                assert h_length(g, witness) <= 2
                assert closure.has_arc(a, b)

    def test_overlong_walk_rejected(self):
        g = colored(
            3, [(0, 1), (1, 2), (2, 0)], 1, [], {(0, 1): 0, (1, 2): 0, (2, 0): 0}
        )
        with pytest.raises(ValueError):
            closed_walk_symmetric_pair(g, Walk((0, 1, 2, 0)), 2, 0, 1)

    def test_vertex_off_walk_rejected(self):
        g = colored(
            4,
            [(0, 1), (1, 2), (2, 0), (0, 3)],
            1,
            [],
            {(0, 1): 0, (1, 2): 0, (2, 0): 0, (0, 3): 0},
        )
        with pytest.raises(ValueError):
            closed_walk_symmetric_pair(g, Walk((0, 1, 2, 0)), 3, 0, 3)

    @given(colored_instances(min_n=2, max_n=5), st.integers(2, 4))
    def test_pairs_verified_against_closure(self, g, k):
        cycles = [c for c in enumerate_cycles(g.base, k)]
        if not cycles:
            return
        closure = build_closure(g, k, store_witnesses=False).closure
        for walk in cycles[:5]:
            body = sorted(set(walk.vertices[:-1]))
            for i, u in enumerate(body):
                for v in body[i + 1 :]:
                    forward, backward = closed_walk_symmetric_pair(g, walk, k, u, v)
                    assert h_length(g, forward) <= k - 1
                    assert h_length(g, backward) <= k - 1
                    assert closure.has_arc(u, v) and closure.has_arc(v, u)


class TestHasAsymmetricCycle:
    def test_complete_biorientation_has_none(self):
        bi = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
        assert has_asymmetric_cycle(bi) is None

    def test_three_cycle_found(self):
        cycle = has_asymmetric_cycle(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
        assert cycle.vertices == (0, 1, 2, 0)

    def test_transitive_tournament_acyclic(self):
        assert has_asymmetric_cycle(Digraph(3, [(0, 1), (0, 2), (1, 2)])) is None

    @given(digraphs(max_n=7))
    def test_matches_cycle_enumeration_oracle(self, d):
        found = has_asymmetric_cycle(d)
        survivors = oracle_asymmetric_cycles(d)
        if found is None:
            assert survivors == []
        else:
            assert is_cycle(d, found)
            assert found.vertices in survivors
