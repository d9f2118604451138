"""Canonical graph fixtures with explicit embeddings.

Each fixture stores its rotation lists literally; the embedding of a
3-connected planar graph is unique up to reflection, so any correct
rotation table is canonical.  Fixtures are re-validated on every load by
the EmbeddedGraph/AGraph invariants.

For the classic triangulations used in Kempe-exchange experiments, the
fixture metadata records which edge is deleted to form the companion
a-graph, so the choice is explicit and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FixtureDataUnavailableError, FixtureNotFoundError, StructureError
from .graphs import AGraph, EmbeddedGraph, Triangulation, delete_edge

# Tetrahedron.
_K4_ROTATION = (
    (1, 2, 3),
    (3, 2, 0),
    (0, 1, 3),
    (2, 1, 0),
)

# Octahedron: poles 0 and 5, equatorial cycle 1-2-3-4.
_OCTAHEDRON_ROTATION = (
    (1, 2, 3, 4),
    (4, 5, 2, 0),
    (0, 1, 5, 3),
    (0, 2, 5, 4),
    (3, 5, 1, 0),
    (4, 3, 2, 1),
)

# Icosahedron: poles 0 and 11, upper ring 1-5, lower ring 6-10.
_ICOSAHEDRON_ROTATION = (
    (1, 2, 3, 4, 5),
    (5, 6, 7, 2, 0),
    (0, 1, 7, 8, 3),
    (0, 2, 8, 9, 4),
    (0, 3, 9, 10, 5),
    (4, 10, 6, 1, 0),
    (1, 5, 10, 11, 7),
    (6, 11, 8, 2, 1),
    (7, 11, 9, 3, 2),
    (8, 11, 10, 4, 3),
    (9, 11, 6, 5, 4),
    (10, 9, 8, 7, 6),
)

# Errera triangulation of order 17 (Errera 1921; see MathWorld, "Errera
# Graph").  Pentagonal-drum form: poles 0 and 16, rings 1-5, 6-10, 11-15.
# Validated against the published invariants: 45 edges, degree sequence
# 5^12 6^5, |Aut| = 20, diameter 4, radius 3, planar triangulation.
_ERRERA_ROTATION = (
    (1, 2, 3, 4, 5),
    (5, 6, 7, 2, 0),
    (0, 1, 7, 8, 3),
    (0, 2, 8, 9, 4),
    (0, 3, 9, 10, 5),
    (4, 10, 6, 1, 0),
    (1, 5, 10, 15, 11, 7),
    (6, 11, 12, 8, 2, 1),
    (7, 12, 13, 9, 3, 2),
    (8, 13, 14, 10, 4, 3),
    (9, 14, 15, 6, 5, 4),
    (15, 16, 12, 7, 6),
    (11, 16, 13, 8, 7),
    (12, 16, 14, 9, 8),
    (13, 16, 15, 10, 9),
    (6, 10, 14, 16, 11),
    (15, 14, 13, 12, 11),
)

# Kittell triangulation of order 23 (Kittell 1935; see MathWorld, "Kittell
# Graph").  Adjacency reproduced from the published list (one transposed
# edge repaired: 14-16 for 16-21); validates as a planar triangulation with
# the recorded order 23 and size 63.
_KITTELL_ROTATION = (
    (1, 2, 4, 5, 6, 7),
    (7, 13, 10, 11, 2, 0),
    (0, 1, 11, 14, 4),
    (14, 16, 12, 5, 4),
    (0, 2, 14, 3, 5),
    (0, 4, 3, 12, 6),
    (0, 5, 12, 9, 7),
    (6, 9, 8, 13, 1, 0),
    (7, 9, 16, 15, 17, 13),
    (12, 16, 8, 7, 6),
    (13, 20, 19, 18, 11, 1),
    (10, 18, 14, 2, 1),
    (3, 16, 9, 6, 5),
    (1, 7, 8, 17, 20, 10),
    (2, 11, 18, 15, 16, 3, 4),
    (8, 16, 14, 18, 21, 17),
    (14, 15, 8, 9, 12, 3),
    (15, 21, 22, 20, 13, 8),
    (19, 21, 15, 14, 11, 10),
    (20, 22, 21, 18, 10),
    (10, 13, 17, 22, 19),
    (18, 19, 22, 17, 15),
    (21, 19, 20, 17),
)


@dataclass(frozen=True)
class Fixture:
    """A named, validated graph with provenance and optional metadata."""

    name: str
    graph: Triangulation | AGraph
    provenance: str
    deleted_edge: tuple[int, int] | None = None

    @property
    def embedded(self) -> EmbeddedGraph:
        return self.graph.graph


def _k4() -> Fixture:
    return Fixture(
        "k4",
        Triangulation(EmbeddedGraph(_K4_ROTATION)),
        "complete graph on 4 vertices (tetrahedron)",
        deleted_edge=(0, 1),
    )


def _octahedron() -> Fixture:
    return Fixture(
        "octahedron",
        Triangulation(EmbeddedGraph(_OCTAHEDRON_ROTATION)),
        "octahedron (4-regular triangulation of order 6)",
        deleted_edge=(0, 1),
    )


def _icosahedron() -> Fixture:
    return Fixture(
        "icosahedron",
        Triangulation(EmbeddedGraph(_ICOSAHEDRON_ROTATION)),
        "icosahedron (the unique 5-regular planar triangulation)",
        deleted_edge=(0, 1),
    )


def _diamond() -> Fixture:
    # K4 minus an edge.  The deleted pair is labeled (x, y), so the sole
    # parent (restoring K4) is the xy-parent; the other opposite pair is
    # adjacent through the surviving K4 edge.
    a = delete_edge(_k4().graph, 0, 1).swapped()
    return Fixture("diamond", a, "K4 minus one edge, deleted pair labeled (x, y)")


def _g_star() -> Fixture:
    # Icosahedron minus one edge.  delete_edge labels the deleted pair
    # (u, v), so the uv-parent is the icosahedron; x and y are the two
    # common neighbors of the deleted pair and keep degree 5.
    a = delete_edge(_icosahedron().graph, 0, 1)
    return Fixture(
        "g-star",
        a,
        "icosahedron minus the edge (0, 1); boundary u=0, v=1, x=2, y=5",
    )


def _recorded(t: Triangulation, order: int, size: int, name: str) -> Triangulation:
    # orders and sizes come from the cited sources; assert them at load
    if t.order != order or t.graph.edge_count != size:
        raise StructureError(
            f"fixture {name}: expected order {order} and size {size}, "
            f"got {t.order} and {t.graph.edge_count}"
        )
    return t


def _errera() -> Fixture:
    t = _recorded(Triangulation(EmbeddedGraph(_ERRERA_ROTATION)), 17, 45, "errera")
    return Fixture(
        "errera",
        t,
        "Errera triangulation, order 17 (MathWorld: Errera Graph)",
        deleted_edge=(1, 2),
    )


def _errera_agraph() -> Fixture:
    f = _errera()
    a = delete_edge(f.graph, *f.deleted_edge)
    return Fixture(
        "errera-agraph",
        a,
        "Errera triangulation minus the ring edge (1, 2); "
        "boundary u=1, v=2, x=0, y=7",
    )


def _kittell() -> Fixture:
    t = _recorded(Triangulation(EmbeddedGraph(_KITTELL_ROTATION)), 23, 63, "kittell")
    return Fixture(
        "kittell",
        t,
        "Kittell triangulation, order 23 (MathWorld: Kittell Graph)",
        deleted_edge=(0, 1),
    )


def _kittell_agraph() -> Fixture:
    f = _kittell()
    a = delete_edge(f.graph, *f.deleted_edge)
    return Fixture(
        "kittell-agraph",
        a,
        "Kittell triangulation minus the edge (0, 1); boundary u=0, v=1",
    )


def _heawood() -> Fixture:
    # The Heawood four-color triangulation (order 25, size 69) has no
    # machine-readable source reachable from this environment, and its
    # adjacency cannot be reproduced faithfully from the figure alone.
    # Shipping an approximation under the name would be worse than the
    # honest error, so the fixture refuses to load.
    raise FixtureDataUnavailableError(
        "fixture 'heawood' (Heawood four-color triangulation, order 25) has "
        "no ingestible adjacency source in this environment; see the project "
        "README for details"
    )


_REGISTRY = {
    "k4": _k4,
    "diamond": _diamond,
    "octahedron": _octahedron,
    "icosahedron": _icosahedron,
    "g-star": _g_star,
    "errera": _errera,
    "errera-agraph": _errera_agraph,
    "kittell": _kittell,
    "kittell-agraph": _kittell_agraph,
    "heawood": _heawood,
}


def fixture(name: str) -> Fixture:
    """Look up a fixture by name; raises FixtureNotFoundError for unknown
    names and FixtureDataUnavailableError for names without usable data."""
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise FixtureNotFoundError(
            f"unknown fixture {name!r}; known: {', '.join(sorted(_REGISTRY))}"
        ) from None
    return builder()


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))
