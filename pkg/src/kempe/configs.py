"""The systematic configuration search.

A configuration is a near-triangulated disk: a boundary ring of n vertices
(4 corners plus side vertices) enclosing m interior vertices, all faces
triangles except the outer ring face.  Attaching four outer vertices (one
joined to each side, corner to corner inclusive) turns a configuration into
an a-graph; the conformance conditions below guarantee that a-graph is
internally 6a-connected.

Vertex layout of a configuration: ring vertices 0..n-1 in cyclic order
starting at a corner, interior vertices n..n+m-1.  The four sides are, in
ring order, the x side, the v side, the y side, and the u side; side k runs
from corner k to corner k+1 and is assigned the side-vertex count nk of the
ring skeleton.  Opposite boundary vertices get opposite sides: x and y take
sides 0 and 2, u and v sides 3 and 1.

The generator of record enumerates all triangulations of the disk interior
directly (every choice of the triangle resting on a designated frontier
edge), which is complete by construction; the diamond-switch closure of the
emitted set is kept as an independent cross-check.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .connectivity import internally_6_connected, separating_cycles
from .errors import BudgetExceededError, OperationError
from .graphs import AGraph, EmbeddedGraph, Pair, ParentedAGraph, flip_edge, insert_edge


def interior_degree_average(m: int, n: int) -> Fraction:
    """Average degree, inside the attached a-graph, of the m + n vertices
    inside its boundary: 5 + (m - 2)/(m + n)."""
    if n < 4 or m < 0:
        raise OperationError("need n >= 4 and m >= 0")
    return Fraction(5) + Fraction(m - 2, m + n)


def boundary_degree_sum(n: int) -> int:
    """Degree sum of the four boundary vertices of an attached a-graph."""
    return n + 12


def interior_degree_sum(m: int, n: int) -> int:
    """Degree sum of the m + n vertices inside the boundary."""
    return 5 * (m + n) + (m - 2)


@dataclass(frozen=True)
class RingSkeleton:
    """Side-vertex counts (n1, n2, n3, n4) for the x, v, y, u sides."""

    sides: tuple[int, int, int, int]

    @property
    def n(self) -> int:
        return sum(self.sides) + 4

    def has_opposite_pair(self) -> bool:
        n1, n2, n3, n4 = self.sides
        return (n1 >= 1 and n3 >= 1) or (n2 >= 1 and n4 >= 1)

    def corner_positions(self) -> tuple[int, int, int, int]:
        n1, n2, n3, _ = self.sides
        return (0, n1 + 1, n1 + n2 + 2, n1 + n2 + n3 + 3)


def _dihedral_images(sides: tuple[int, int, int, int]):
    seq = list(sides)
    for _ in range(4):
        seq = seq[1:] + seq[:1]
        yield tuple(seq)
    seq = list(reversed(sides))
    for _ in range(4):
        seq = seq[1:] + seq[:1]
        yield tuple(seq)


def enumerate_rings(n: int) -> list[RingSkeleton]:
    """All ring skeletons of order n admissible for the search: side counts
    with a non-empty opposite pair, one representative per dihedral orbit
    (the lexicographically largest image, which puts weight on the x and y
    sides first)."""
    if n < 4:
        return []
    total = n - 4
    seen = set()
    out = []
    for n1 in range(total + 1):
        for n2 in range(total - n1 + 1):
            for n3 in range(total - n1 - n2 + 1):
                sides = (n1, n2, n3, total - n1 - n2 - n3)
                sk = RingSkeleton(sides)
                if not sk.has_opposite_pair():
                    continue
                canon = max(_dihedral_images(sides))
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(RingSkeleton(canon))
    return sorted(out, key=lambda s: s.sides, reverse=True)


@dataclass(frozen=True)
class Configuration:
    """A near-triangulated disk over a ring skeleton.

    The disk's outer face is the ring 0..n-1; corners sit at the skeleton's
    corner positions.
    """

    disk: EmbeddedGraph
    skeleton: RingSkeleton

    def __post_init__(self):
        n = self.skeleton.n
        sizes = sorted(f.size for f in self.disk.faces)
        ring_faces = [f for f in self.disk.faces if f.size == n and set(f.boundary) == set(range(n))]
        if sizes[:-1] != [3] * (len(sizes) - 1) or not ring_faces:
            raise OperationError(
                f"disk is not a near-triangulation with ring face of size {n}"
            )

    @property
    def n(self) -> int:
        return self.skeleton.n

    @property
    def m(self) -> int:
        return self.disk.order - self.skeleton.n

    @property
    def order(self) -> int:
        return self.disk.order

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return self.skeleton.corner_positions()

    def side_path(self, k: int) -> tuple[int, ...]:
        """Ring vertices of side k, corners included."""
        c = self.corners
        start = c[k]
        end = c[(k + 1) % 4] if k < 3 else self.n
        path = list(range(start, end + 1))
        if k == 3:
            path[-1] = 0
        return tuple(path)

    def ring_vertices(self) -> range:
        return range(self.n)

    def interior_vertices(self) -> range:
        return range(self.n, self.disk.order)

    @property
    def code(self) -> tuple[int, ...]:
        return config_code(self)

    @property
    def config_id(self) -> str:
        data = ",".join(map(str, self.code)).encode()
        return hashlib.sha1(data).hexdigest()[:12]


def config_code(cfg: Configuration) -> tuple[int, ...]:
    """Canonical encoding of a configuration under the ring symmetries.

    Every dihedral map of the square is applied; each yields the image
    side-count sequence followed by the relabeled rotation encoding
    (interior vertices by first visit, reflections with reversed
    orientation), and the minimum is returned.  The side counts are part of
    the code: the same disk under two different corner plans is two
    different configurations.
    """
    sides = cfg.skeleton.sides
    rotation = _standard_rotation(cfg)
    best = None
    for reflect in (False, True):
        base = list(reversed(sides)) if reflect else list(sides)
        for shift in range(4):
            image = tuple(base[shift:] + base[:shift])
            relabel = _ring_relabel(cfg, shift, reflect)
            code = image + _encode_disk(cfg, rotation, relabel, reflect)
            if best is None or code < best:
                best = code
    assert best is not None
    return best


def _standard_rotation(cfg: Configuration) -> tuple[tuple[int, ...], ...]:
    """The disk's rotation system oriented so the ring face is traced in
    descending ring order; mirror-oriented inputs are reversed first so the
    code does not depend on which of the two drawings was supplied."""
    g = cfg.disk
    n = cfg.n
    for p in range(n):
        if g.degree(p) >= 3:
            if g.successor(p, (p + 1) % n) == (p - 1) % n:
                return g.rotation
            return tuple(tuple(reversed(r)) for r in g.rotation)
    return g.rotation


def _ring_relabel(cfg: Configuration, shift: int, reflect: bool) -> dict[int, int]:
    """Map old ring labels to new ring positions for the given symmetry."""
    n = cfg.n
    corners = cfg.corners
    if not reflect:
        # new position 0 is the old corner `shift`
        offset = corners[shift]
        return {old: (old - offset) % n for old in range(n)}
    # reflection reverses the walk and permutes sides as reversed(sides);
    # new side 0 is the old side (3 - shift) walked backwards, so new
    # position 0 anchors at the end corner of that side
    anchor = corners[(4 - shift) % 4]
    return {old: (anchor - old) % n for old in range(n)}


def _encode_disk(
    cfg: Configuration,
    base_rotation: tuple[tuple[int, ...], ...],
    ring_map: dict[int, int],
    reflect: bool,
) -> tuple[int, ...]:
    n = cfg.n
    rotation = (
        tuple(tuple(reversed(r)) for r in base_rotation) if reflect else base_rotation
    )
    ids = dict(ring_map)
    order = sorted(ring_map, key=ring_map.get)
    inv = {new: old for old, new in ring_map.items()}
    anchor = {inv[p]: inv[(p - 1) % n] for p in range(n)}
    out: list[int] = []
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        r = rotation[v]
        start = r.index(anchor[v])
        out.append(len(r))
        for t in range(len(r)):
            w = r[(start + t) % len(r)]
            if w not in ids:
                ids[w] = len(order)
                order.append(w)
                anchor[w] = v
            out.append(ids[w])
    return tuple(out)


@dataclass(frozen=True)
class ConformanceReport:
    conforming: bool
    violations: tuple[str, ...]


def conformance_check(cfg: Configuration) -> ConformanceReport:
    """The seven conformance conditions: corner degree >= 3, a non-empty
    opposite side pair, side-vertex degree >= 4, interior degree >= 5, no
    separating 3- or 4-cycles, separating pentagons isolate one vertex, and
    exactly two ring neighbors per ring vertex."""
    g = cfg.disk
    n = cfg.n
    corners = set(cfg.corners)
    violations = []
    for c in sorted(corners):
        if g.degree(c) < 3:
            violations.append(f"i: corner {c} has degree {g.degree(c)}")
    if not cfg.skeleton.has_opposite_pair():
        violations.append("ii: no opposite pair of sides with a vertex each")
    for w in cfg.ring_vertices():
        if w not in corners and g.degree(w) < 4:
            violations.append(f"iii: side vertex {w} has degree {g.degree(w)}")
    for w in cfg.interior_vertices():
        if g.degree(w) < 5:
            violations.append(f"iv: interior vertex {w} has degree {g.degree(w)}")
    for k in (3, 4):
        for rep in separating_cycles(g, k):
            violations.append(f"v: separating {k}-cycle {rep.cycle}")
    for rep in separating_cycles(g, 5):
        if rep.inside_count != 1:
            violations.append(
                f"vi: separating pentagon {rep.cycle} splits {rep.inside_count}/{rep.outside_count}"
            )
    ring = set(range(n))
    for w in range(n):
        ring_nbrs = sum(1 for z in g.rotation[w] if z in ring)
        if ring_nbrs != 2:
            violations.append(f"vii: ring vertex {w} has {ring_nbrs} ring neighbors")
    return ConformanceReport(not violations, tuple(violations))


def _seed_ring(n: int) -> list[list[int]]:
    return [[(i - 1) % n, (i + 1) % n] for i in range(n)]


def generate_disks(
    n: int,
    m: int,
    forbid_ring_chords: bool = True,
    prune_interior_degree: int | None = 5,
    deadline: float | None = None,
) -> Iterator[EmbeddedGraph]:
    """All triangulations of the inside of an n-ring using exactly m interior
    vertices, one per labeled object.

    The frontier region stack is processed deterministically (top region,
    first boundary edge), so each triangulation corresponds to exactly one
    leaf of the choice tree: the choice at each step is the apex of the
    unique triangle resting on the designated edge.  Distinct leaves are
    never isomorphic with the ring fixed pointwise.

    With forbid_ring_chords, moves that join two ring vertices by a new edge
    are pruned (they can never appear in a conforming configuration); with
    prune_interior_degree, branches are abandoned as soon as an interior
    vertex's neighborhood closes below the threshold.

    Raises BudgetExceededError at the deadline (time.monotonic() seconds).
    """
    rot = _seed_ring(n)
    adj = [set(r) for r in rot]
    open_count = [1] * n  # number of stack regions containing each vertex
    regions: list[tuple[int, ...]] = [tuple(range(n))]

    def add_edge(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)

    def del_edge(a: int, b: int) -> None:
        adj[a].discard(b)
        adj[b].discard(a)

    def swap_regions(removed, added) -> bool:
        """Replace one frontier region by its children in the open counts;
        True when an interior vertex's neighborhood closed below the degree
        threshold (prune signal)."""
        for ch in added:
            for v in ch:
                open_count[v] += 1
        for v in removed:
            open_count[v] -= 1
        if prune_interior_degree is None:
            return False
        return any(
            open_count[v] == 0 and v >= n and len(adj[v]) < prune_interior_degree
            for v in removed
        )

    def unswap_regions(removed, added) -> None:
        for v in removed:
            open_count[v] += 1
        for ch in added:
            for v in ch:
                open_count[v] -= 1

    def emit() -> EmbeddedGraph:
        return EmbeddedGraph.from_rotation([tuple(r) for r in rot])

    def insert_after(v: int, anchor: int, new: int) -> None:
        lst = rot[v]
        lst.insert(lst.index(anchor) + 1, new)

    def remove_nbr(v: int, w: int) -> None:
        rot[v].remove(w)

    def rec(budget: int) -> Iterator[EmbeddedGraph]:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError("generation deadline exceeded")
        if not regions:
            if budget == 0:
                yield emit()
            return
        region = regions.pop()
        try:
            k = len(region)
            v0, v1 = region[0], region[1]
            vlast = region[-1]

            # apex = fresh interior vertex
            if budget > 0:
                t = len(rot)
                rot.append([v0, v1])
                adj.append({v0, v1})
                open_count.append(0)
                insert_after(v0, vlast, t)
                insert_after(v1, v0, t)
                add_edge(v0, t)
                add_edge(v1, t)
                child = (v0, t) + region[1:]
                bad = swap_regions(region, (child,))
                regions.append(child)
                if not bad:
                    yield from rec(budget - 1)
                regions.pop()
                unswap_regions(region, (child,))
                del_edge(v0, t)
                del_edge(v1, t)
                remove_nbr(v0, t)
                remove_nbr(v1, t)
                rot.pop()
                adj.pop()
                open_count.pop()

            # apex = another region vertex
            for i in range(2, k):
                vi = region[i]
                need1 = i != 2  # new edge v1-vi
                need0 = i != k - 1  # new edge v0-vi
                if need1 and vi in adj[v1]:
                    continue
                if need0 and vi in adj[v0]:
                    continue
                if forbid_ring_chords and (
                    (need1 and v1 < n and vi < n) or (need0 and v0 < n and vi < n)
                ):
                    continue
                if need1:
                    insert_after(v1, v0, vi)
                    insert_after(vi, region[i - 1], v1)
                    add_edge(v1, vi)
                if need0:
                    insert_after(v0, vlast, vi)
                    insert_after(vi, v1 if need1 else region[i - 1], v0)
                    add_edge(v0, vi)
                children = []
                if i >= 3:
                    children.append(region[1 : i + 1])
                if i <= k - 2:
                    children.append((vi,) + region[i + 1 :] + (v0,))
                bad = swap_regions(region, children)
                regions.extend(children)
                if not bad:
                    yield from rec(budget)
                del regions[len(regions) - len(children) :]
                unswap_regions(region, children)
                if need0:
                    del_edge(v0, vi)
                    remove_nbr(v0, vi)
                    remove_nbr(vi, v0)
                if need1:
                    del_edge(v1, vi)
                    remove_nbr(v1, vi)
                    remove_nbr(vi, v1)
        finally:
            regions.append(region)

    yield from rec(m)


def generate_configurations(
    m: int,
    n: int,
    conforming_only: bool = True,
    max_seconds: float | None = None,
) -> tuple[list[Configuration], bool]:
    """All non-isomorphic configurations with the given m and n, one ring
    skeleton at a time, deduplicated by canonical form.

    Returns (configurations, truncated); truncated is True when the time
    budget cut generation short, and the partial list is never silently
    passed off as complete.
    """
    if n < 4 or m < 0:
        raise OperationError("need n >= 4 and m >= 0")
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    out: list[Configuration] = []
    seen: set[tuple[int, ...]] = set()
    truncated = False
    for sk in enumerate_rings(n):
        try:
            for disk in generate_disks(
                n,
                m,
                forbid_ring_chords=conforming_only,
                prune_interior_degree=5 if conforming_only else None,
                deadline=deadline,
            ):
                cfg = Configuration(disk, sk)
                if conforming_only and not conformance_check(cfg).conforming:
                    continue
                code = cfg.code
                if code in seen:
                    continue
                seen.add(code)
                out.append(cfg)
        except BudgetExceededError:
            truncated = True
            break
    out.sort(key=lambda c: c.code)
    return out, truncated


def diamond_switch(cfg: Configuration, a: int, b: int) -> Configuration:
    """Replace the shared edge of two adjacent triangles by the opposite
    diagonal.  Ring edges are refused (one flank is the outer face), as are
    switches whose diagonal already exists."""
    n = cfg.n
    if a < n and b < n and (b - a) % n in (1, n - 1):
        raise OperationError(f"({a}, {b}) is a ring edge; its switch would open the disk")
    return Configuration(flip_edge(cfg.disk, a, b), cfg.skeleton)


def switchable_edges(cfg: Configuration) -> list[tuple[int, int]]:
    n = cfg.n
    out = []
    for a, b in cfg.disk.edges():
        if a < n and b < n and (b - a) % n in (1, n - 1):
            continue
        try:
            diamond_switch(cfg, a, b)
        except OperationError:
            continue
        out.append((a, b))
    return out


def switch_closure(
    seeds: Sequence[Configuration], conforming_only: bool = True
) -> list[Configuration]:
    """Close a set of configurations under diamond switches, keeping (by
    default) only conforming results; the independent cross-check for the
    exhaustive generator."""
    by_code: dict[tuple[int, ...], Configuration] = {}
    stack = []
    for cfg in seeds:
        code = cfg.code
        if code not in by_code:
            by_code[code] = cfg
            stack.append(cfg)
    while stack:
        cfg = stack.pop()
        for a, b in switchable_edges(cfg):
            nxt = diamond_switch(cfg, a, b)
            if conforming_only and not conformance_check(nxt).conforming:
                continue
            code = nxt.code
            if code not in by_code:
                by_code[code] = nxt
                stack.append(nxt)
    return sorted(by_code.values(), key=lambda c: c.code)


def attach_outer_ring(cfg: Configuration) -> AGraph:
    """Add the four boundary vertices and the outer 4-cycle; each boundary
    vertex is joined to every vertex of its side, corners included."""
    n = cfg.n
    base = cfg.disk.order
    # boundary ids in side order x, v, y, u
    bx, bv, by, bu = base, base + 1, base + 2, base + 3
    boundary = (bx, bv, by, bu)
    rot = [list(r) for r in cfg.disk.rotation]
    sides = [cfg.side_path(k) for k in range(4)]

    def owners(p: int) -> list[int]:
        return [boundary[k] for k in range(4) if p in sides[k]]

    for p in range(n):
        after = (p + 1) % n
        own = owners(p)
        if len(own) == 1:
            ins = own
        else:
            # corner between side k-1 (ending here) and side k (starting
            # here): the successor side's owner is inserted first
            k = cfg.corners.index(p)
            ins = [boundary[k], boundary[(k - 1) % 4]]
        lst = rot[p]
        pos = lst.index(after) + 1
        for off, w in enumerate(ins):
            lst.insert(pos + off, w)
    for k in range(4):
        b = boundary[k]
        prev_b = boundary[(k - 1) % 4]
        next_b = boundary[(k + 1) % 4]
        rot.append([prev_b, *sides[k], next_b])
    g = EmbeddedGraph.from_rotation(rot)
    return AGraph(g, u=bu, x=bx, v=bv, y=by)


@dataclass(frozen=True)
class SearchRow:
    """One record of the search report."""

    m: int
    n: int
    config_id: str
    conforming: bool
    order: int
    state_count: int
    xy_parent_i6c: bool
    uv_parent_i6c: bool
    astar_xy: bool
    astar_uv: bool
    wall_ms: int


@dataclass(frozen=True)
class CellStatus:
    m: int
    n: int
    configurations: int
    truncated: bool


@dataclass(frozen=True)
class SearchReport:
    max_order: int
    rows: tuple[SearchRow, ...]
    cells: tuple[CellStatus, ...]

    @property
    def truncated(self) -> bool:
        return any(c.truncated for c in self.cells)

    def members(self) -> list[tuple[SearchRow, Pair]]:
        out = []
        for row in self.rows:
            if row.astar_xy:
                out.append((row, Pair.XY))
            if row.astar_uv:
                out.append((row, Pair.UV))
        return out


def search_cells(max_order: int) -> list[tuple[int, int]]:
    """The (m, n) cells with m >= 2, n >= 6, and order m + n + 4 <= max_order."""
    cells = []
    for n in range(6, max_order - 4 + 1):
        for m in range(2, max_order - 4 - n + 1):
            cells.append((m, n))
    return sorted(cells)


def _examine_cell(args) -> tuple[CellStatus, list[SearchRow]]:
    from .coloring import enumerate_states
    from .stategraph import astar_member_fast

    m, n, max_seconds = args
    configs, truncated = generate_configurations(m, n, max_seconds=max_seconds)
    rows = []
    for cfg in configs:
        t0 = time.monotonic()
        a = attach_outer_ring(cfg)
        xy_ok = internally_6_connected(insert_edge(a, Pair.XY)).is_internally_6_connected
        uv_ok = internally_6_connected(insert_edge(a, Pair.UV)).is_internally_6_connected
        states = enumerate_states(a)
        vx = astar_member_fast(a, Pair.XY)
        vu = astar_member_fast(a, Pair.UV)
        rows.append(
            SearchRow(
                m=m,
                n=n,
                config_id=cfg.config_id,
                conforming=True,
                order=a.order,
                state_count=len(states),
                xy_parent_i6c=xy_ok,
                uv_parent_i6c=uv_ok,
                astar_xy=vx.member,
                astar_uv=vu.member,
                wall_ms=int((time.monotonic() - t0) * 1000),
            )
        )
    return CellStatus(m, n, len(configs), truncated), rows


def search_astar(
    max_order: int,
    max_seconds_per_cell: float | None = None,
    workers: int = 1,
) -> SearchReport:
    """Sweep all conforming configurations with attached a-graphs of order
    at most max_order and test both parented readings for A* membership.

    Cells are independent work units; with workers > 1 they run in a
    process pool and the report is merged in cell order, so parallelism
    never changes the output.
    """
    cells = search_cells(max_order)
    jobs = [(m, n, max_seconds_per_cell) for m, n in cells]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_examine_cell, jobs))
    else:
        results = [_examine_cell(job) for job in jobs]
    statuses = []
    rows = []
    for status, cell_rows in results:
        statuses.append(status)
        rows.extend(cell_rows)
    rows.sort(key=lambda r: (r.m, r.n, r.config_id))
    return SearchReport(max_order, tuple(rows), tuple(statuses))


# --- Birkhoff-diamond strings -----------------------------------------------

# Rotation template of one diamond block, copied from the a-graph obtained
# by deleting one icosahedron edge: x and y are the shared endpoints, u and
# v close off the first and last blocks, B/T mark the bottom and top
# attachment slots of intermediate blocks.  Local names: ring 3,4,6,7 and
# inner diamond 8,9,10,11.
_DIAMOND_TEMPLATE = {
    3: ("B1", 4, 9, 8, "x"),
    4: (3, "B1", "B2", "y", 10, 9),
    6: ("T1", 7, 11, 10, "y"),
    7: ("x", 8, 11, 6, "T1", "T2"),
    8: ("x", 3, 9, 11, 7),
    9: (3, 4, 10, 11, 8),
    10: ("y", 6, 11, 9, 4),
    11: (6, 7, 8, 9, 10),
}

STRING_VARIANTS = ("fanned", "shared")


def build_diamond_string(k: int, variant: str = "fanned") -> ParentedAGraph:
    """A parented a-graph (ghost pair xy) made of k Birkhoff diamonds
    sharing the endpoints x and y.

    Two connection patterns are implemented: "fanned" keeps consecutive
    diamonds disjoint and triangulates the gap with three chords (order
    8k + 4), "shared" identifies one ring vertex of consecutive diamonds
    (order 7k + 5).  For k = 1 both give the order-12 a-graph whose
    uv-parent is the icosahedron.  The constructions are candidates: their
    membership in A* is established by the membership test, not assumed.
    """
    if k < 1:
        raise OperationError("need k >= 1")
    if variant not in STRING_VARIANTS:
        raise OperationError(f"unknown variant {variant!r}; know {STRING_VARIANTS}")
    names: dict[object, int] = {}

    def vid(name) -> int:
        if name not in names:
            names[name] = len(names)
        return names[name]

    u, x, v, y = vid("u"), vid("x"), vid("v"), vid("y")
    blocks: list[dict[int, int]] = []
    for t in range(k):
        blk = {}
        for loc in (3, 4, 6, 7, 8, 9, 10, 11):
            if variant == "shared" and loc == 4 and t > 0:
                # top-right ring vertex of the block below doubles as this
                # block's bottom-right ring vertex
                blk[4] = blocks[t - 1][6]
            else:
                blk[loc] = vid((t, loc))
        blocks.append(blk)

    rot: dict[int, list[int]] = {}

    def fill(t: int, loc: int, subs: dict[str, list[int]]) -> None:
        row: list[int] = []
        for entry in _DIAMOND_TEMPLATE[loc]:
            if isinstance(entry, str):
                if entry == "x":
                    row.append(x)
                elif entry == "y":
                    row.append(y)
                else:
                    row.extend(subs.get(entry, []))
            else:
                row.append(blocks[t][entry])
        rot[blocks[t][loc]] = row

    for t in range(k):
        blk = blocks[t]
        below = blocks[t - 1] if t > 0 else None
        above = blocks[t + 1] if t < k - 1 else None
        if variant == "fanned":
            # gap chords between block t and t+1: 7-3', 7-4', 6-4'
            fill(t, 3, {"B1": [below[7]] if below else [u]})
            fill(t, 4, {"B1": [below[7]] if below else [u], "B2": [below[6]] if below else []})
            fill(t, 6, {"T1": [above[4]] if above else [v]})
            fill(t, 7, {"T1": [above[4]] if above else [v], "T2": [above[3]] if above else []})
        else:
            # shared vertex w = 6_t = 4_{t+1}; gap chord 7-3'
            fill(t, 3, {"B1": [below[7]] if below else [u]})
            if t == 0:
                fill(t, 4, {"B1": [u], "B2": []})
            if t < k - 1:
                nxt = blocks[t + 1]
                w = blk[6]
                rot[w] = [blk[7], blk[11], blk[10], y, nxt[10], nxt[9], nxt[3]]
            else:
                fill(t, 6, {"T1": [v]})
            fill(t, 7, {"T1": [above[3]] if above else [v], "T2": []})
        for loc in (8, 9, 10, 11):
            fill(t, loc, {})

    x_row: list[int] = [u]
    for t in range(k):
        x_row += [blocks[t][3], blocks[t][8], blocks[t][7]]
    x_row.append(v)
    # y is walked in the opposite block order (the template orientation runs
    # the two shared endpoints antiparallel)
    y_row: list[int] = [v]
    for t in range(k - 1, -1, -1):
        seg = [blocks[t][6], blocks[t][10], blocks[t][4]]
        if variant == "shared" and t < k - 1:
            seg = seg[1:]  # this block's 6 is the block above's 4, already listed
        y_row += seg
    y_row.append(u)
    rot[u] = [y, blocks[0][4], blocks[0][3], x]
    rot[v] = [x, blocks[k - 1][7], blocks[k - 1][6], y]
    rot[x] = x_row
    rot[y] = y_row

    table = [tuple(rot[i]) for i in range(len(names))]
    g = EmbeddedGraph.from_rotation(table)
    a = AGraph(g, u=u, x=x, v=v, y=y)
    return ParentedAGraph(a, Pair.XY)
