"""Degree and separating-cycle analysis.

Internal 6-connectivity of a triangulation: minimum degree 5, no separating
3- or 4-cycles, and every separating 5-cycle isolates a single vertex.  An
a-graph is internally 6a-connected when at least one of its parent
triangulations is internally 6-connected.

Cycle enumeration is brute force with adjacency pruning; every workload in
scope has order well under 30, so clarity beats asymptotics.  A cycle
separates when both of its sides in the embedding contain a vertex.  Sides
are computed by flooding faces without crossing the cycle's edges: a cycle
is a closed curve in the plane, so the faces fall into exactly two groups.
Mere component counting of the graph minus the cycle would over-report on
near-triangulations, where a short cycle can disconnect the annulus between
itself and the untriangulated outer face while enclosing nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OperationError, StructureError
from .graphs import AGraph, EmbeddedGraph, Pair, Triangulation, insert_edge


@dataclass(frozen=True)
class SeparatingCycleReport:
    """A k-cycle whose removal splits the rest of the graph."""

    cycle: tuple[int, ...]
    inside_count: int   # size of the smallest piece
    outside_count: int  # everything else off the cycle

    @property
    def length(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class DegreeWitness:
    vertex: int
    degree: int


@dataclass(frozen=True)
class ConnectivityVerdict:
    is_internally_6_connected: bool
    failures: tuple[DegreeWitness | SeparatingCycleReport, ...]

    def __post_init__(self):
        if not self.is_internally_6_connected and not self.failures:
            raise StructureError("negative verdict requires a witness")


def min_degree(g: EmbeddedGraph) -> int:
    return min(g.degree(v) for v in range(g.order))


def _simple_cycles(g: EmbeddedGraph, k: int):
    """All simple k-cycles, each reported once (smallest vertex first,
    second neighbor below the last to kill the reversed copy)."""
    adj = g.adjacency
    n = g.order
    path: list[int] = []

    def extend(start: int):
        v = path[-1]
        if len(path) == k:
            if start in adj[v] and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in adj[v]:
            if w > start and w not in seen:
                seen.add(w)
                path.append(w)
                yield from extend(start)
                path.pop()
                seen.discard(w)

    for s in range(n):
        seen = {s}
        path = [s]
        yield from extend(s)


def cycle_sides(
    g: EmbeddedGraph, cycle: tuple[int, ...]
) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices strictly on each side of a cycle of the embedding.

    Faces are flooded across every edge not on the cycle; the cycle is a
    closed curve, so the flood splits the faces into exactly two groups.
    """
    cyc_edges = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }
    by_edge: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(g.faces):
        b = f.boundary
        for i in range(len(b)):
            by_edge[(b[i], b[(i + 1) % len(b)])] = fi
    # flood starting from the two faces flanking the cycle's first edge
    a, b = cycle[0], cycle[1]
    group = {by_edge[(a, b)]: 0, by_edge[(b, a)]: 1}
    stack = [by_edge[(a, b)], by_edge[(b, a)]]
    while stack:
        fi = stack.pop()
        fb = g.faces[fi].boundary
        for i in range(len(fb)):
            e = (fb[i], fb[(i + 1) % len(fb)])
            if frozenset(e) in cyc_edges:
                continue
            other = by_edge[(e[1], e[0])]
            if other not in group:
                group[other] = group[fi]
                stack.append(other)
    if len(group) != len(g.faces):
        raise StructureError(
            f"face flood left {len(g.faces) - len(group)} faces unassigned "
            f"for cycle {cycle}"
        )
    on_cycle = set(cycle)
    sides: list[set[int]] = [set(), set()]
    for fi, side in group.items():
        sides[side].update(v for v in g.faces[fi].boundary if v not in on_cycle)
    return frozenset(sides[0]), frozenset(sides[1])


def separating_cycles(g: EmbeddedGraph, k: int) -> list[SeparatingCycleReport]:
    """All k-cycles with graph vertices on both sides, k in {3, 4, 5};
    facial and otherwise non-separating cycles are excluded."""
    if k not in (3, 4, 5):
        raise OperationError(f"cycle length must be 3, 4, or 5, got {k}")
    out = []
    for cycle in _simple_cycles(g, k):
        s0, s1 = cycle_sides(g, cycle)
        if s0 and s1:
            small, large = sorted((len(s0), len(s1)))
            out.append(
                SeparatingCycleReport(
                    cycle=cycle, inside_count=small, outside_count=large
                )
            )
    return out


def internally_6_connected(t: Triangulation) -> ConnectivityVerdict:
    """Minimum degree 5, no separating 3- or 4-cycles, and every separating
    5-cycle leaves a single vertex on one side."""
    g = t.graph
    failures: list[DegreeWitness | SeparatingCycleReport] = []
    for v in range(g.order):
        if g.degree(v) < 5:
            failures.append(DegreeWitness(v, g.degree(v)))
    for k in (3, 4):
        failures.extend(separating_cycles(g, k))
    for rep in separating_cycles(g, 5):
        if rep.inside_count != 1:
            failures.append(rep)
    ok = not failures
    if ok and g.order < 12:
        # impossible by the degree-sum bound; would mean a detection bug
        raise StructureError(
            f"internally 6-connected verdict on order {g.order} < 12"
        )
    return ConnectivityVerdict(ok, tuple(failures))


def internally_6a_connected(a: AGraph) -> bool:
    """True when at least one parent triangulation (over the non-adjacent
    opposite pairs) is internally 6-connected."""
    for pair in (Pair.XY, Pair.UV):
        if a.pair_adjacent(pair):
            continue
        if internally_6_connected(insert_edge(a, pair)).is_internally_6_connected:
            return True
    return False
