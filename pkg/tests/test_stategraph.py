import random

import pytest

from kempe import OperationError, Pair, delete_edge
from kempe.coloring import enumerate_states, kempe_chains, two_color_path
from kempe.fixtures import fixture
from kempe.stategraph import (
    AStarVerdict,
    ComponentLabel,
    astar_member,
    astar_member_fast,
    build_state_graph,
    classify_components,
    path_dichotomy_holds,
)


def test_g_star_components():
    sg = build_state_graph(fixture("g-star").graph)
    assert sg.state_count == 18
    assert sorted(len(c) for c in sg.components) == [6, 12]


def test_g_star_labels_xy_and_uv():
    sg = build_state_graph(fixture("g-star").graph)
    by_size = {len(c): lab for c, lab in zip(sg.components, classify_components(sg, Pair.XY))}
    assert by_size == {6: ComponentLabel.N, 12: ComponentLabel.S}
    assert classify_components(sg, Pair.UV) == (ComponentLabel.NS, ComponentLabel.NS)


def test_icosahedron_states_isolated():
    sg = build_state_graph(fixture("icosahedron").graph)
    assert sg.state_count == 10
    assert sg.edges == ()
    assert len(sg.components) == 10
    assert all(sg.degree_of(i) == 0 for i in range(10))


def test_diamond_single_mixed_component():
    sg = build_state_graph(fixture("diamond").graph)
    assert sg.state_count == 2
    assert len(sg.components) == 1
    assert classify_components(sg, Pair.XY) == (ComponentLabel.NS,)


def test_edges_symmetric_definition():
    sg = build_state_graph(fixture("g-star").graph)
    assert all(a < b for a, b in sg.edges)
    assert sorted(i for c in sg.components for i in c) == list(range(sg.state_count))


def test_single_chain_equals_subset_components():
    for name in ("diamond", "g-star", "icosahedron"):
        g = fixture(name).graph
        fast = build_state_graph(g)
        slow = build_state_graph(g, all_subsets=True)
        assert fast.components == slow.components
    octa_a = delete_edge(fixture("octahedron").graph, 0, 1)
    assert (
        build_state_graph(octa_a).components
        == build_state_graph(octa_a, all_subsets=True).components
    )


def test_astar_verdicts_g_star():
    gs = fixture("g-star").graph
    assert astar_member(gs, Pair.XY).member
    assert not astar_member(gs, Pair.UV).member
    assert astar_member_fast(gs, Pair.XY).member
    assert not astar_member_fast(gs, Pair.UV).member


def test_astar_diamond():
    d = fixture("diamond").graph
    v = astar_member(d, Pair.XY)
    assert not v.member
    assert v.witness is not None and v.witness.component is not None


def test_astar_uv_witness_paths():
    gs = fixture("g-star").graph
    v = astar_member_fast(gs, Pair.UV)
    assert not v.member
    w = v.witness
    assert w.state.same_class(gs.u, gs.v)
    assert w.path[0] in (gs.x, gs.y) and w.path[-1] in (gs.x, gs.y)
    common = w.state.class_of(gs.u)
    assert common not in w.path_colors


def test_astar_requires_nonadjacent_ghost():
    d = fixture("diamond").graph
    from kempe.errors import StructureError

    with pytest.raises(StructureError, match="adjacent"):
        astar_member_fast(d, Pair.UV)


def test_fast_equals_slow_on_agraph_fixtures_and_octahedron():
    cases = [
        (fixture("diamond").graph, [Pair.XY]),
        (fixture("g-star").graph, [Pair.XY, Pair.UV]),
        (delete_edge(fixture("octahedron").graph, 0, 1), [Pair.XY, Pair.UV]),
    ]
    for a, pairs in cases:
        sg = build_state_graph(a)
        for pair in pairs:
            if a.pair_adjacent(pair):
                continue
            assert astar_member(a, pair, sg=sg).member == astar_member_fast(a, pair).member


def test_g_star_nonsolution_exchanges_stay_in_component():
    gs = fixture("g-star").graph
    sg = build_state_graph(gs)
    labels = classify_components(sg, Pair.XY)
    n_comp = next(c for c, lab in zip(sg.components, labels) if lab is ComponentLabel.N)
    members = set(n_comp)
    for a, b in sg.edges:
        assert (a in members) == (b in members)


def _member_agraphs():
    from kempe.configs import build_diamond_string

    return [fixture("g-star").graph, build_diamond_string(2, "shared").agraph]


def test_nonsolution_states_have_all_three_pair_paths():
    # for an A* member, every non-solution state joins the ghost pair by
    # 2-color paths in all three pairings with the common color
    for a in _member_agraphs():
        x, y = a.pair_vertices(Pair.XY)
        for s in enumerate_states(a):
            if not s.same_class(x, y):
                continue
            common = s.class_of(x)
            for k in range(4):
                if k == common:
                    continue
                chains = kempe_chains(s, a, (common, k))
                assert any({x, y} <= c.vertices for c in chains)
                assert two_color_path(a, s, x, y, (common, k)) is not None


def test_solution_states_have_own_color_path():
    # for an A* member, every solution state joins the ghost pair by a path
    # in the pair's own two colors
    for a in _member_agraphs():
        x, y = a.pair_vertices(Pair.XY)
        for s in enumerate_states(a):
            if s.same_class(x, y):
                continue
            assert two_color_path(a, s, x, y, (s.class_of(x), s.class_of(y))) is not None


def test_path_dichotomy_on_fixture_states():
    for name in ("diamond", "g-star"):
        a = fixture(name).graph
        for s in enumerate_states(a):
            assert path_dichotomy_holds(s, a)
    octa_a = delete_edge(fixture("octahedron").graph, 0, 1)
    for s in enumerate_states(octa_a):
        assert path_dichotomy_holds(s, octa_a)


def test_verdict_requires_witness():
    with pytest.raises(OperationError):
        AStarVerdict(member=False, method="definition", witness=None)


def test_state_graph_invariant_under_relabeling():
    rng = random.Random(11)
    gs = fixture("g-star").graph
    base = sorted(len(c) for c in build_state_graph(gs).components)
    for _ in range(2):
        perm = list(range(gs.order))
        rng.shuffle(perm)
        g2 = gs.graph.relabeled(perm)
        from kempe.graphs import AGraph

        a2 = AGraph(g2, u=perm[gs.u], x=perm[gs.x], v=perm[gs.v], y=perm[gs.y])
        sg2 = build_state_graph(a2)
        assert sorted(len(c) for c in sg2.components) == base
        assert astar_member(a2, Pair.XY).member
