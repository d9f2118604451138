import itertools
import random

import pytest

from kempe import OperationError, Pair, delete_edge
from kempe.coloring import (
    ColoringState,
    enumerate_states,
    is_proper,
    kempe_chains,
    kempe_exchange,
    single_chain_neighbors,
    two_color_path,
)
from kempe.errors import BudgetExceededError
from kempe.fixtures import fixture


def brute_force_states(g):
    """Oracle: enumerate all labeled colorings with <= 4 colors and collapse
    to partitions.  Only usable for small orders."""
    eg = g if not hasattr(g, "graph") else g.graph
    n = eg.order
    assert n <= 8, "oracle restricted to small graphs"
    edges = eg.edges()
    seen = set()
    for labs in itertools.product(range(4), repeat=n):
        if all(labs[a] != labs[b] for a, b in edges):
            seen.add(ColoringState.from_labels(labs))
    return seen


@pytest.mark.parametrize("name", ["k4", "diamond", "octahedron"])
def test_enumeration_matches_brute_force(name):
    g = fixture(name).graph
    assert set(enumerate_states(g)) == brute_force_states(g)


def test_enumeration_matches_brute_force_octahedron_agraph():
    a = delete_edge(fixture("octahedron").graph, 0, 1)
    assert set(enumerate_states(a)) == brute_force_states(a)


def test_diamond_states_by_hand():
    d = fixture("diamond").graph
    states = enumerate_states(d)
    assert len(states) == 2
    x, y = d.pair_vertices(Pair.XY)
    u, v = d.pair_vertices(Pair.UV)
    sizes = sorted(s.size for s in states)
    assert sizes == [3, 4]
    for s in states:
        assert not s.same_class(u, v)
    assert any(s.same_class(x, y) for s in states)


def test_known_state_counts():
    assert len(enumerate_states(fixture("k4").graph)) == 1
    assert len(enumerate_states(fixture("octahedron").graph)) == 4
    assert len(enumerate_states(fixture("icosahedron").graph)) == 10
    assert len(enumerate_states(fixture("g-star").graph)) == 18


def test_states_are_canonical_and_proper():
    for name in ("octahedron", "icosahedron", "g-star"):
        g = fixture(name).graph
        for s in enumerate_states(g):
            assert is_proper(g, s.labels)
            assert s == ColoringState.from_labels(s.labels)
            mins = sorted(min(c) for c in s.classes)
            assert mins == [min(c) for c in s.classes]


def test_state_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_states(fixture("icosahedron").graph, max_states=5)


def test_parent_state_bijection():
    # states of G + e correspond to states of G splitting the deleted pair
    for name, edge in (("k4", (0, 1)), ("octahedron", (0, 1)), ("icosahedron", (0, 1))):
        t = fixture(name).graph
        a = delete_edge(t, *edge)
        u, v = a.pair_vertices(Pair.UV)
        parent_states = enumerate_states(t)
        split = [s for s in enumerate_states(a) if not s.same_class(u, v)]
        assert len(parent_states) == len(split)


def test_chains_partition_pool():
    g = fixture("g-star").graph
    for s in enumerate_states(g)[:6]:
        for j, k in itertools.combinations(range(4), 2):
            chains = kempe_chains(s, g, (j, k))
            pool = s.class_vertices(j) | s.class_vertices(k)
            got = [v for c in chains for v in c.vertices]
            assert sorted(got) == sorted(pool)


def test_short_chains_in_diamond():
    d = fixture("diamond").graph
    x, y = d.pair_vertices(Pair.XY)
    three = next(s for s in enumerate_states(d) if s.size == 3)
    assert three.same_class(x, y)
    chains = kempe_chains(three, d, (three.class_of(x), 3))
    assert sorted(len(c.vertices) for c in chains) == [1, 1]
    assert {frozenset((x,)), frozenset((y,))} == {c.vertices for c in chains}


def test_exchange_diamond_short_chain():
    d = fixture("diamond").graph
    x, y = d.pair_vertices(Pair.XY)
    three = next(s for s in enumerate_states(d) if s.size == 3)
    chains = kempe_chains(three, d, (three.class_of(x), 3))
    pick = next(c for c in chains if c.vertices == frozenset((x,)))
    out = kempe_exchange(three, d, tuple(pick.colors), [pick])
    assert out.size == 4


def test_exchange_rejects_empty_and_full_subsets():
    d = fixture("diamond").graph
    three = next(s for s in enumerate_states(d) if s.size == 3)
    x, _ = d.pair_vertices(Pair.XY)
    pair = (three.class_of(x), 3)
    chains = kempe_chains(three, d, pair)
    with pytest.raises(OperationError, match="non-empty"):
        kempe_exchange(three, d, pair, [])
    with pytest.raises(OperationError, match="relabeling"):
        kempe_exchange(three, d, pair, list(chains))


def pool_pair(state, pool):
    """The color pair of the given chain pool in a (re-canonicalized) state."""
    cs = sorted({state.class_of(v) for v in pool})
    if len(cs) == 2:
        return tuple(cs)
    assert state.size < 4  # pool collapsed to one class; pair it with an absent index
    return (cs[0], state.size)


def test_exchange_involution_random():
    rng = random.Random(20240817)
    g = fixture("g-star").graph
    states = enumerate_states(g)
    for _ in range(60):
        s = rng.choice(states)
        pairs = [
            (j, k)
            for j, k in itertools.combinations(range(4), 2)
            if len(kempe_chains(s, g, (j, k))) >= 2
        ]
        if not pairs:
            continue
        pair = rng.choice(pairs)
        chains = kempe_chains(s, g, pair)
        r = rng.randrange(1, len(chains))
        subset = rng.sample(chains, r)
        pool = frozenset(v for c in chains for v in c.vertices)
        mid = kempe_exchange(s, g, pair, subset)
        # canonicalization renames colors; the pool identifies the image pair
        mid_pair = pool_pair(mid, pool)
        back_chains = kempe_chains(mid, g, mid_pair)
        back_sets = {c.vertices for c in back_chains}
        assert {c.vertices for c in subset} <= back_sets
        back = kempe_exchange(
            mid,
            g,
            mid_pair,
            [c for c in back_chains if c.vertices in {x.vertices for x in subset}],
        )
        assert back == s


def test_chain_structure_stable_under_exchange():
    # exchanging within selected j-k chains leaves the j-k chain vertex sets
    # unchanged, so any subset exchange equals composed single-chain moves
    g = fixture("g-star").graph
    rng = random.Random(99)
    states = enumerate_states(g)
    for _ in range(40):
        s = rng.choice(states)
        for j, k in itertools.combinations(range(4), 2):
            chains = kempe_chains(s, g, (j, k))
            if len(chains) < 2:
                continue
            pool = frozenset(v for c in chains for v in c.vertices)
            out = kempe_exchange(s, g, (j, k), [chains[0]])
            assert {c.vertices for c in kempe_chains(out, g, pool_pair(out, pool))} == {
                c.vertices for c in chains
            }


def test_three_color_state_exchange_splits_class():
    # a pair with one class absent recolors short chains of the present class
    octa = fixture("octahedron").graph
    s3 = next(s for s in enumerate_states(octa) if s.size == 3)
    neighbors = set(single_chain_neighbors(s3.labels, octa.graph))
    four_color = {s.labels for s in enumerate_states(octa) if s.size == 4}
    assert neighbors == four_color


def test_two_color_path_finds_and_respects_forbidden():
    g = fixture("g-star").graph
    states = enumerate_states(g)
    x, y = g.pair_vertices(Pair.XY)
    s = next(t for t in states if t.same_class(x, y))
    common = s.class_of(x)
    hit = False
    for k in range(4):
        if k == common:
            continue
        p = two_color_path(g, s, x, y, (common, k))
        if p:
            hit = True
            assert p[0] == x and p[-1] == y
            for a, b in zip(p, p[1:]):
                assert g.graph.has_edge(a, b)
                assert {s.class_of(a), s.class_of(b)} <= {common, k}
    assert hit
    # forbidding every edge at x kills all paths from x
    banned = [frozenset((x, w)) for w in g.graph.rotation[x]]
    for k in range(4):
        if k != common:
            assert two_color_path(g, s, x, y, (common, k), banned) is None
