"""Embedded planar graphs and the structural edits between triangulations
and a-graphs.

A graph is stored as a rotation system: for every vertex, the cyclic
sequence of its neighbors in the plane embedding.  Faces are always derived
by tracing the rotation system, never stored as ground truth.  All values
are immutable; every operation returns a new graph.

Face tracing convention: the face containing the directed edge (a, b) is
continued by (b, c) where c is the successor of a in the rotation of b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .errors import OperationError, StructureError

VertexId = int


class Pair(str, Enum):
    """One of the two opposite boundary pairs of an a-graph."""

    XY = "xy"
    UV = "uv"

    @property
    def other(self) -> "Pair":
        return Pair.UV if self is Pair.XY else Pair.XY


@dataclass(frozen=True)
class Face:
    """A face of an embedding, as the cyclic sequence of its boundary vertices."""

    boundary: tuple[VertexId, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def has_cycle(self, cycle: Sequence[VertexId]) -> bool:
        """True if `cycle` equals the boundary up to rotation and reflection."""
        k = len(cycle)
        if k != len(self.boundary):
            return False
        doubled = self.boundary + self.boundary
        fwd = tuple(cycle)
        rev = tuple(reversed(cycle))
        return any(
            doubled[i : i + k] in (fwd, rev) for i in range(k)
        )


@dataclass(frozen=True)
class EmbeddedGraph:
    """Simple connected planar graph given by a rotation system.

    Invariants (enforced at construction): vertex ids are dense 0..order-1,
    adjacency is symmetric, no loops or repeated neighbors, the graph is
    connected, and the traced faces satisfy Euler's formula v - e + f = 2
    (which rejects rotation systems of positive genus).
    """

    rotation: tuple[tuple[VertexId, ...], ...]

    def __post_init__(self):
        # normalize each cyclic sequence to start at its smallest neighbor,
        # so equal embeddings compare equal
        object.__setattr__(
            self, "rotation", tuple(_normalize_cycle(r) for r in self.rotation)
        )
        _validate_rotation(self.rotation)
        if self.order - self.edge_count + len(self.faces) != 2:
            raise StructureError(
                "rotation system is not a planar embedding "
                f"(v={self.order}, e={self.edge_count}, f={len(self.faces)})"
            )

    @staticmethod
    def from_rotation(rotation: Iterable[Iterable[VertexId]]) -> "EmbeddedGraph":
        return EmbeddedGraph(tuple(tuple(r) for r in rotation))

    @property
    def order(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    @cached_property
    def adjacency(self) -> tuple[frozenset[VertexId], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    def degree(self, v: VertexId) -> int:
        return len(self.rotation[v])

    def has_edge(self, a: VertexId, b: VertexId) -> bool:
        return b in self.adjacency[a]

    def edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        return tuple(
            (a, b) for a in range(self.order) for b in self.rotation[a] if a < b
        )

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return _trace_faces(self.rotation)

    def successor(self, v: VertexId, w: VertexId) -> VertexId:
        """The neighbor following w in the rotation of v."""
        r = self.rotation[v]
        return r[(r.index(w) + 1) % len(r)]

    def relabeled(self, perm: Sequence[VertexId]) -> "EmbeddedGraph":
        """Apply the vertex permutation perm (old id -> new id)."""
        new_rot: list[tuple[int, ...]] = [()] * self.order
        for v, r in enumerate(self.rotation):
            new_rot[perm[v]] = tuple(perm[w] for w in r)
        return EmbeddedGraph(tuple(new_rot))


def _normalize_cycle(r: tuple[int, ...]) -> tuple[int, ...]:
    if not r:
        return r
    i = r.index(min(r))
    return r[i:] + r[:i]


def _validate_rotation(rotation: tuple[tuple[int, ...], ...]) -> None:
    n = len(rotation)
    if n == 0:
        raise StructureError("empty graph")
    for v, r in enumerate(rotation):
        for w in r:
            if not isinstance(w, int) or not (0 <= w < n):
                raise StructureError(f"vertex {v} lists out-of-range neighbor {w!r}")
        if v in r:
            raise StructureError(f"self-loop at vertex {v}")
        if len(set(r)) != len(r):
            raise StructureError(f"repeated neighbor in rotation of vertex {v}")
    sets = [set(r) for r in rotation]
    for v, s in enumerate(sets):
        for w in s:
            if v not in sets[w]:
                raise StructureError(f"asymmetric adjacency: {v}->{w} but not {w}->{v}")
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in rotation[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise StructureError("graph is not connected")


def _trace_faces(rotation: tuple[tuple[int, ...], ...]) -> tuple[Face, ...]:
    index = [{w: i for i, w in enumerate(r)} for r in rotation]
    used: set[tuple[int, int]] = set()
    faces = []
    for a in range(len(rotation)):
        for b in rotation[a]:
            if (a, b) in used:
                continue
            walk = []
            x, y = a, b
            while (x, y) not in used:
                used.add((x, y))
                walk.append(x)
                r = rotation[y]
                x, y = y, r[(index[y][x] + 1) % len(r)]
            faces.append(Face(tuple(walk)))
    return tuple(faces)


def trace_faces(g: EmbeddedGraph) -> list[Face]:
    """All faces of g; every directed edge is used exactly once."""
    return list(g.faces)


@dataclass(frozen=True)
class Triangulation:
    """A planar graph all of whose faces are triangles."""

    graph: EmbeddedGraph

    def __post_init__(self):
        bad = [f for f in self.graph.faces if f.size != 3]
        if bad:
            raise StructureError(
                f"not a triangulation: face of size {bad[0].size} found"
            )

    @property
    def order(self) -> int:
        return self.graph.order


@dataclass(frozen=True)
class AGraph:
    """Near-triangulation with a single 4-face, drawn as the outer face.

    The 4-face is labeled by the boundary cycle u-x-v-y, making (x, y) and
    (u, v) the two opposite boundary pairs.  Either opposite pair may happen
    to be adjacent through the interior (the order-4 diamond is the smallest
    example); a pair must be non-adjacent to act as a ghost pair.
    """

    graph: EmbeddedGraph
    u: VertexId
    x: VertexId
    v: VertexId
    y: VertexId

    def __post_init__(self):
        sizes = sorted(f.size for f in self.graph.faces)
        quads = [f for f in self.graph.faces if f.size == 4]
        if len(quads) != 1 or sizes[:-1] != [3] * (len(sizes) - 1):
            raise StructureError(
                f"not an a-graph: face sizes {sizes} (need one 4-face, rest triangles)"
            )
        if len({self.u, self.x, self.v, self.y}) != 4:
            raise StructureError("boundary labels are not four distinct vertices")
        if not quads[0].has_cycle((self.u, self.x, self.v, self.y)):
            raise StructureError(
                f"boundary labels {(self.u, self.x, self.v, self.y)} do not match "
                f"the 4-face cycle {quads[0].boundary}"
            )

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def boundary(self) -> tuple[VertexId, VertexId, VertexId, VertexId]:
        return (self.u, self.x, self.v, self.y)

    @cached_property
    def quad_face(self) -> Face:
        return next(f for f in self.graph.faces if f.size == 4)

    def pair_vertices(self, pair: Pair) -> tuple[VertexId, VertexId]:
        return (self.x, self.y) if pair is Pair.XY else (self.u, self.v)

    def pair_adjacent(self, pair: Pair) -> bool:
        a, b = self.pair_vertices(pair)
        return self.graph.has_edge(a, b)

    def boundary_edges(self) -> tuple[frozenset[VertexId], ...]:
        """The four edges of the boundary 4-cycle."""
        return (
            frozenset((self.u, self.x)),
            frozenset((self.x, self.v)),
            frozenset((self.v, self.y)),
            frozenset((self.y, self.u)),
        )

    def swapped(self) -> "AGraph":
        """Relabel the boundary so the roles of (x, y) and (u, v) trade places."""
        return AGraph(self.graph, u=self.x, x=self.v, v=self.y, y=self.u)


@dataclass(frozen=True)
class ParentedAGraph:
    """An a-graph with a designated ghost pair (the pair whose insertion
    restores the applicable parent triangulation)."""

    agraph: AGraph
    ghost: Pair

    def __post_init__(self):
        if self.agraph.pair_adjacent(self.ghost):
            a, b = self.agraph.pair_vertices(self.ghost)
            raise StructureError(
                f"ghost pair {self.ghost.value} = ({a}, {b}) is adjacent; "
                "no parent triangulation exists for it"
            )

    @property
    def order(self) -> int:
        return self.agraph.order

    def parent(self) -> Triangulation:
        return insert_edge(self.agraph, self.ghost)


def _flanking_apexes(g: EmbeddedGraph, a: VertexId, b: VertexId) -> tuple[int, int]:
    """Apexes of the two triangular faces flanking edge ab."""
    if not g.has_edge(a, b):
        raise OperationError(f"({a}, {b}) is not an edge")
    apexes = []
    for f in g.faces:
        if f.size == 3 and a in f.boundary and b in f.boundary:
            apexes.append(next(w for w in f.boundary if w not in (a, b)))
    if len(apexes) != 2:
        raise OperationError(
            f"edge ({a}, {b}) is not flanked by two triangular faces"
        )
    if apexes[0] == apexes[1]:
        raise StructureError(
            f"the two faces flanking ({a}, {b}) share apex {apexes[0]}; "
            "merging them would break simplicity"
        )
    return apexes[0], apexes[1]


def delete_edge(t: Triangulation, a: VertexId, b: VertexId) -> AGraph:
    """Remove edge ab from a triangulation, merging its two flanking
    triangles into the 4-face.

    The deleted pair becomes (u, v) and the two apexes of the flanking
    triangles become (x, y), with x the smaller vertex id.  This matches
    the labeling under which the parent that restores t is the uv-parent.
    """
    g = t.graph
    c, d = _flanking_apexes(g, a, b)
    rot = [list(r) for r in g.rotation]
    rot[a].remove(b)
    rot[b].remove(a)
    out = EmbeddedGraph.from_rotation(rot)
    x, y = min(c, d), max(c, d)
    return AGraph(out, u=a, x=x, v=b, y=y)


def _insert_after(rot: list[list[int]], vertex: int, anchor: int, new: int) -> None:
    """Insert `new` into the rotation of `vertex` directly after `anchor`.

    Inserting a new neighbor after the face-predecessor of `vertex` on a
    face puts the new edge inside that face, which is the only slot that
    keeps the embedding planar.
    """
    lst = rot[vertex]
    lst.insert(lst.index(anchor) + 1, new)


def insert_edge(g: AGraph, pair: Pair) -> Triangulation:
    """Insert the designated opposite pair's edge across the 4-face,
    producing the parent triangulation for that pair."""
    p, q = g.pair_vertices(pair)
    if g.graph.has_edge(p, q):
        raise OperationError(
            f"pair {pair.value} = ({p}, {q}) is already adjacent; cannot insert"
        )
    quad = g.quad_face.boundary
    rot = [list(x) for x in g.graph.rotation]
    for a, b in ((p, q), (q, p)):
        i = quad.index(a)
        _insert_after(rot, a, quad[i - 1], b)
    return Triangulation(EmbeddedGraph.from_rotation(rot))


def contract_edge(
    t: Triangulation, a: VertexId, b: VertexId
) -> tuple[Triangulation, tuple[int, ...]]:
    """Contract edge ab, merging b into a.

    Returns (triangulation, mapping) where mapping[old_id] = new_id; a and b
    map to the same vertex, so any coloring of the result lifts through the
    mapping to a coloring of t - ab in which a and b share a color.

    Refuses when ab lies on a separating triangle (a common neighbor beyond
    the two flanking apexes), since contraction would create a multi-edge.
    """
    g = t.graph
    c, d = _flanking_apexes(g, a, b)
    extra = (g.adjacency[a] & g.adjacency[b]) - {c, d}
    if extra:
        w = min(extra)
        raise StructureError(
            f"cannot contract ({a}, {b}): separating triangle ({a}, {b}, {w})"
        )
    rot = [list(r) for r in g.rotation]
    # neighbors of b in cyclic order starting after a: the first and last are
    # the flanking apexes, already adjacent to a.
    rb = rot[b]
    i = rb.index(a)
    seq = [rb[(i + k) % len(rb)] for k in range(1, len(rb))]
    middle = seq[1:-1]
    ia = rot[a].index(b)
    rot[a][ia : ia + 1] = middle
    for w in middle:
        rw = rot[w]
        rw[rw.index(b)] = a
    for w in (c, d):
        rot[w].remove(b)
    rot[b] = []

    order = g.order
    mapping = []
    for v in range(order):
        if v == b:
            mapping.append(a if a < b else a - 1)
        else:
            mapping.append(v if v < b else v - 1)
    new_rot = []
    for v in range(order):
        if v == b:
            continue
        new_rot.append(tuple(mapping[w] for w in rot[v]))
    return Triangulation(EmbeddedGraph.from_rotation(new_rot)), tuple(mapping)


def flip_edge(g: EmbeddedGraph, a: VertexId, b: VertexId) -> EmbeddedGraph:
    """Replace edge ab by the other diagonal of its two flanking triangles.

    Requires both flanking faces to be triangles (a, b, c) and (a, b, d)
    with c and d non-adjacent; the result is again a simple embedded graph
    with the same face census.
    """
    _flanking_apexes(g, a, b)
    # orient the apexes by the directed faces: c closes the face traced from
    # (a, b), d the one from (b, a); in the merged quadrilateral c-a-d-b the
    # face-predecessor of c is b and of d is a.
    c = g.successor(b, a)
    d = g.successor(a, b)
    if g.has_edge(c, d):
        raise OperationError(
            f"cannot flip ({a}, {b}): opposite pair ({c}, {d}) already adjacent"
        )
    rot = [list(r) for r in g.rotation]
    rot[a].remove(b)
    rot[b].remove(a)
    _insert_after(rot, c, b, d)
    _insert_after(rot, d, a, c)
    return EmbeddedGraph.from_rotation(rot)


def canonical_code(g: EmbeddedGraph) -> tuple[int, ...]:
    """Canonical form of the embedding, minimized over all root edges and
    both orientations.

    Two graphs have equal codes iff they are isomorphic as plane graphs
    (up to reflection).  For 3-connected planar graphs the embedding is
    unique, so equal codes decide graph isomorphism outright.
    """
    best: tuple[int, ...] | None = None
    for rotation in (g.rotation, tuple(tuple(reversed(r)) for r in g.rotation)):
        index = [{w: i for i, w in enumerate(r)} for r in rotation]
        for a in range(len(rotation)):
            for b in rotation[a]:
                code = _encode_from(rotation, index, a, b)
                if best is None or code < best:
                    best = code
    assert best is not None
    return best


def _encode_from(rotation, index, root: int, anchor_nbr: int) -> tuple[int, ...]:
    ids = {root: 0}
    order = [root]
    anchor = {root: anchor_nbr}
    out: list[int] = []
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        r = rotation[v]
        start = index[v][anchor[v]]
        out.append(len(r))
        for t in range(len(r)):
            w = r[(start + t) % len(r)]
            if w not in ids:
                ids[w] = len(order)
                order.append(w)
                anchor[w] = v
            out.append(ids[w])
    return tuple(out)


def is_isomorphic(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    """Plane-graph isomorphism via canonical codes."""
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return False
    return canonical_code(g1) == canonical_code(g2)


def random_relabeling(g: EmbeddedGraph, rng) -> tuple[EmbeddedGraph, list[int]]:
    """A random vertex relabeling of g; useful for invariance tests."""
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabeled(perm), perm
