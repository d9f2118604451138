"""State transformation graphs, component labels, and A* membership.

Vertices are coloring states; edges join states one Kempe exchange apart.
Edges are generated from single-chain exchanges only: any proper-subset
exchange is a composition of single-chain exchanges with the same
reachability (chain vertex sets are stable under exchanges on their own
color pair), so the components are identical.  A full subset-exchange
generator is kept behind a flag for the equivalence test.

A parented a-graph belongs to the family A* when its state partition has
no mixed (n-s) component: no non-solution state can reach a solution state
by Kempe exchanges.  Membership can be decided two ways:

* definitionally, from the components of the state graph;
* by the path criterion: member iff no non-solution state contains an
  internal 2-color path joining the non-ghost pair in colors that avoid
  the ghost pair's common color.

Both are implemented and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coloring import (
    ColoringState,
    embedded,
    enumerate_states,
    single_chain_neighbors,
    subset_exchange_neighbors,
    two_color_path,
)
from .errors import OperationError
from .graphs import AGraph, Pair, ParentedAGraph


class ComponentLabel(str, Enum):
    N = "n"        # every state colors the pair identically
    S = "s"        # no state does
    NS = "n-s"     # mixed

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class StateGraph:
    """States, single-exchange edges, and connected components."""

    source: object  # the graph the states belong to (AGraph, Triangulation, ...)
    states: tuple[ColoringState, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def state_count(self) -> int:
        return len(self.states)

    def degree_of(self, i: int) -> int:
        return sum(1 for a, b in self.edges if i in (a, b))

    def component_of(self, i: int) -> int:
        for ci, comp in enumerate(self.components):
            if i in comp:
                return ci
        raise OperationError(f"no such state index {i}")


def build_state_graph(
    g, all_subsets: bool = False, max_states: int | None = None
) -> StateGraph:
    """Enumerate states and connect those one Kempe exchange apart.

    With all_subsets=True, edges come from every non-empty proper subset
    exchange instead of single chains (slow; used to verify that both edge
    sets induce the same components).
    """
    eg = embedded(g)
    states = enumerate_states(g, max_states=max_states)
    index = {s.labels: i for i, s in enumerate(states)}
    neighbor_fn = subset_exchange_neighbors if all_subsets else single_chain_neighbors
    edges: set[tuple[int, int]] = set()
    for i, s in enumerate(states):
        for labels in neighbor_fn(s.labels, eg):
            j = index[labels]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    parent = list(range(len(states)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    comps: dict[int, list[int]] = {}
    for i in range(len(states)):
        comps.setdefault(find(i), []).append(i)
    components = tuple(sorted(tuple(sorted(c)) for c in comps.values()))
    return StateGraph(g, states, tuple(sorted(edges)), components)


def _require_agraph(sg_source) -> AGraph:
    if isinstance(sg_source, AGraph):
        return sg_source
    raise OperationError("component labels require an a-graph with boundary labels")


def classify_components(sg: StateGraph, pair: Pair) -> tuple[ComponentLabel, ...]:
    """Label each component n / s / n-s relative to the designated pair.

    The components themselves do not depend on the pair; only the labels do,
    so one state graph serves both parented readings.
    """
    a = _require_agraph(sg.source)
    p, q = a.pair_vertices(pair)
    labels = []
    for comp in sg.components:
        non = sum(1 for i in comp if sg.states[i].same_class(p, q))
        if non == len(comp):
            labels.append(ComponentLabel.N)
        elif non == 0:
            labels.append(ComponentLabel.S)
        else:
            labels.append(ComponentLabel.NS)
    return tuple(labels)


@dataclass(frozen=True)
class AStarWitness:
    """Evidence of non-membership: a mixed component, or a non-solution
    state carrying an internal 2-color path between the non-ghost pair."""

    state: ColoringState | None = None
    component: tuple[int, ...] | None = None
    path: tuple[int, ...] | None = None
    path_colors: tuple[int, int] | None = None


@dataclass(frozen=True)
class AStarVerdict:
    member: bool
    method: str
    witness: AStarWitness | None = None

    def __post_init__(self):
        if not self.member and self.witness is None:
            raise OperationError("non-membership requires a witness")


def _as_parented(g, pair: Pair | None) -> ParentedAGraph:
    if isinstance(g, ParentedAGraph):
        return g
    if pair is None:
        raise OperationError("a pair is required when passing a bare a-graph")
    return ParentedAGraph(g, pair)


def astar_member(g, pair: Pair | None = None, sg: StateGraph | None = None) -> AStarVerdict:
    """Definitional membership: no n-s component in the state partition."""
    pg = _as_parented(g, pair)
    if sg is None:
        sg = build_state_graph(pg.agraph)
    labels = classify_components(sg, pg.ghost)
    for comp, lab in zip(sg.components, labels):
        if lab is ComponentLabel.NS:
            p, q = pg.agraph.pair_vertices(pg.ghost)
            non = next(i for i in comp if sg.states[i].same_class(p, q))
            return AStarVerdict(
                False,
                "definition",
                AStarWitness(state=sg.states[non], component=comp),
            )
    return AStarVerdict(True, "definition")


def astar_member_fast(g, pair: Pair | None = None) -> AStarVerdict:
    """Path-criterion membership; decides without building the state graph.

    Member iff no non-solution state (ghost pair colored alike) has an
    internal 2-color path joining the other pair in colors that both differ
    from the ghost pair's common color.  Internal means no edge of the
    boundary 4-cycle, which for these paths is automatic: every boundary
    edge touches the ghost pair, whose color is excluded.
    """
    pg = _as_parented(g, pair)
    a = pg.agraph
    p, q = a.pair_vertices(pg.ghost)
    r, s = a.pair_vertices(pg.ghost.other)
    banned = a.boundary_edges()
    for state in enumerate_states(a):
        if not state.same_class(p, q):
            continue
        common = state.class_of(p)
        cr, cs = state.class_of(r), state.class_of(s)
        if cr != cs:
            color_pairs = [(cr, cs)]
        else:
            color_pairs = [(cr, k) for k in range(4) if k not in (cr, common)]
        for colors in color_pairs:
            path = two_color_path(a, state, r, s, colors, banned)
            if path is not None:
                return AStarVerdict(
                    False,
                    "paths",
                    AStarWitness(state=state, path=path, path_colors=tuple(sorted(colors))),
                )
    return AStarVerdict(True, "paths")


def path_dichotomy_holds(state: ColoringState, a: AGraph) -> bool:
    """Every 4-coloring of an a-graph admits, under each color renaming
    with c(x)=1, c(y) in {1,2}, c(u)=3, c(v) in {3,4}, either a 1-2 path
    joining x and y or a 3-4 path joining u and v.

    The boundary 4-cycle makes {c(x), c(y)} and {c(u), c(v)} disjoint, so
    such renamings always exist; when both pairs share a color there are
    two ways to pick the absent colors and both must work.
    """
    cx, cy = state.class_of(a.x), state.class_of(a.y)
    cu, cv = state.class_of(a.u), state.class_of(a.v)
    free = [c for c in range(4) if c not in {cx, cy, cu, cv}]
    # the "2" slot is c(y) when distinct from c(x), otherwise any color the
    # boundary does not use; same for the "4" slot on the other pair
    xy_options = [cy] if cy != cx else free
    uv_options = [cv] if cv != cu else free
    for two in xy_options:
        for four in uv_options:
            if two == four:
                continue
            xy_path = two_color_path(a, state, a.x, a.y, (cx, two))
            uv_path = two_color_path(a, state, a.u, a.v, (cu, four))
            if xy_path is None and uv_path is None:
                return False
    return True
