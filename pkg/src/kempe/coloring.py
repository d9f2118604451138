"""4-coloring states, Kempe chains, and Kempe exchanges.

A coloring state is the partition of the vertex set into color classes;
two colorings related by permuting color names are the same state.  States
are represented by per-vertex class labels in first-occurrence order, which
makes the representation canonical: class i's smallest vertex precedes
class j's smallest vertex whenever i < j.

A Kempe exchange swaps the two colors on a non-empty proper subset of the
j-k chains.  Exchanging ALL j-k chains is excluded: it only renames the two
colors and yields the identical state.  In particular no exchange exists on
a pair with a single chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceededError, OperationError, StructureError
from .graphs import EmbeddedGraph

MAX_COLORS = 4


def embedded(g) -> EmbeddedGraph:
    """Accept an EmbeddedGraph or any wrapper exposing .graph."""
    return g if isinstance(g, EmbeddedGraph) else g.graph


@dataclass(frozen=True, order=True)
class ColoringState:
    """A proper coloring as a canonical partition into at most 4 classes."""

    labels: tuple[int, ...]

    @staticmethod
    def from_labels(raw: Sequence[int]) -> "ColoringState":
        seen: dict[int, int] = {}
        out = []
        for lab in raw:
            if lab not in seen:
                seen[lab] = len(seen)
            out.append(seen[lab])
        return ColoringState(tuple(out))

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def size(self) -> int:
        """Number of color classes in use."""
        return max(self.labels) + 1

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.size)]
        for v, lab in enumerate(self.labels):
            out[lab].add(v)
        return tuple(frozenset(c) for c in out)

    def class_of(self, v: int) -> int:
        return self.labels[v]

    def same_class(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def class_vertices(self, j: int) -> frozenset[int]:
        """Vertices of class j; an absent class (j >= size) is empty."""
        if j >= self.size:
            return frozenset()
        return self.classes[j]


@dataclass(frozen=True)
class KempeChain:
    """A maximal connected subgraph using only the two colors of a pair.

    A single vertex with no neighbor in the partner class is a short chain.
    """

    colors: frozenset[int]
    vertices: frozenset[int]


def is_proper(g, labels: Sequence[int]) -> bool:
    eg = embedded(g)
    return all(labels[a] != labels[b] for a, b in eg.edges())


def enumerate_states(g, max_states: int | None = None) -> tuple[ColoringState, ...]:
    """All distinct proper colorings of g with at most 4 colors, as
    canonical partitions, in lexicographic label order.

    The backtracking assigns vertices in id order; vertex 0 takes class 0
    and each fresh class takes the smallest unused index, so every partition
    is emitted exactly once and already in canonical form.

    Raises BudgetExceededError when max_states is given and exceeded; the
    partial count is attached to the error.
    """
    eg = embedded(g)
    n = eg.order
    earlier = [tuple(w for w in eg.rotation[v] if w < v) for v in range(n)]
    labels = [0] * n
    out: list[ColoringState] = []

    def rec(v: int, used: int) -> None:
        if v == n:
            out.append(ColoringState(tuple(labels)))
            if max_states is not None and len(out) > max_states:
                raise BudgetExceededError(
                    f"state budget {max_states} exceeded", partial=len(out)
                )
            return
        top = min(used + 1, MAX_COLORS)
        nbr = earlier[v]
        for c in range(top):
            if all(labels[w] != c for w in nbr):
                labels[v] = c
                rec(v + 1, max(used, c + 1))
        labels[v] = 0

    rec(0, 0)
    return tuple(out)


def _pair_components(
    labels: Sequence[int], eg: EmbeddedGraph, j: int, k: int
) -> list[list[int]]:
    """Connected components of the subgraph induced by classes j and k."""
    pool = [v for v, lab in enumerate(labels) if lab == j or lab == k]
    pool_set = set(pool)
    seen: set[int] = set()
    comps = []
    for start in pool:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for w in eg.rotation[u]:
                if w in pool_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _check_pair(j: int, k: int) -> None:
    if j == k:
        raise OperationError("chain colors must differ")
    if not (0 <= j < MAX_COLORS and 0 <= k < MAX_COLORS):
        raise OperationError(f"color indices must be in 0..3, got {{{j}, {k}}}")


def kempe_chains(s: ColoringState, g, pair: Iterable[int]) -> tuple[KempeChain, ...]:
    """The j-k Kempe chains of state s: components of the subgraph induced
    by classes j and k, isolated vertices included as short chains."""
    j, k = sorted(pair)
    _check_pair(j, k)
    eg = embedded(g)
    colors = frozenset((j, k))
    return tuple(
        KempeChain(colors, frozenset(c))
        for c in _pair_components(s.labels, eg, j, k)
    )


def kempe_exchange(
    s: ColoringState, g, pair: Iterable[int], subset: Iterable[KempeChain]
) -> ColoringState:
    """Swap colors j and k on the designated chains.

    The subset must be a non-empty proper subset of the j-k chains of s;
    the result is re-canonicalized and checked proper.
    """
    j, k = sorted(pair)
    _check_pair(j, k)
    eg = embedded(g)
    chains = kempe_chains(s, g, (j, k))
    chain_sets = {c.vertices for c in chains}
    chosen = list(subset)
    chosen_sets = {c.vertices for c in chosen}
    if any(c.colors != frozenset((j, k)) for c in chosen) or not (
        chosen_sets <= chain_sets
    ):
        raise OperationError("subset contains vertex sets that are not j-k chains")
    if not chosen_sets:
        raise OperationError("exchange subset must be non-empty")
    if len(chosen_sets) == len(chain_sets):
        raise OperationError(
            "exchanging every j-k chain is a color relabeling, not a Kempe exchange"
        )
    labels = list(s.labels)
    for cs in chosen_sets:
        for v in cs:
            labels[v] = k if labels[v] == j else j
    if not is_proper(eg, labels):
        raise StructureError("exchange produced an improper coloring")
    return ColoringState.from_labels(labels)


def single_chain_neighbors(labels: tuple[int, ...], eg: EmbeddedGraph):
    """Canonical label tuples one single-chain exchange away.

    Internal fast path for state-graph construction; yields duplicates when
    different exchanges reach the same state.
    """
    for j, k in combinations(range(MAX_COLORS), 2):
        comps = _pair_components(labels, eg, j, k)
        if len(comps) < 2:
            continue
        for comp in comps:
            new = list(labels)
            for v in comp:
                new[v] = k if new[v] == j else j
            yield _canon(new)


def subset_exchange_neighbors(labels: tuple[int, ...], eg: EmbeddedGraph):
    """Neighbors under every non-empty proper subset exchange (slow path,
    used to verify that single-chain edges give the same components)."""
    for j, k in combinations(range(MAX_COLORS), 2):
        comps = _pair_components(labels, eg, j, k)
        t = len(comps)
        if t < 2:
            continue
        for r in range(1, t):
            for chosen in combinations(range(t), r):
                new = list(labels)
                for ci in chosen:
                    for v in comps[ci]:
                        new[v] = k if new[v] == j else j
                yield _canon(new)


def _canon(raw: list[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for lab in raw:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


def two_color_path(
    g,
    s: ColoringState,
    start: int,
    goal: int,
    colors: Iterable[int],
    forbidden_edges: Iterable[frozenset[int]] = (),
) -> tuple[int, ...] | None:
    """A path from start to goal inside the subgraph induced by the two
    given classes, avoiding the forbidden edges; None if there is none."""
    j, k = sorted(colors)
    _check_pair(j, k)
    eg = embedded(g)
    allowed = {v for v, lab in enumerate(s.labels) if lab in (j, k)}
    if start not in allowed or goal not in allowed:
        return None
    banned = set(forbidden_edges)
    parent: dict[int, int | None] = {start: None}
    queue = [start]
    while queue:
        u = queue.pop(0)
        if u == goal:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for w in eg.rotation[u]:
            if w in allowed and w not in parent and frozenset((u, w)) not in banned:
                parent[w] = u
                queue.append(w)
    return None
