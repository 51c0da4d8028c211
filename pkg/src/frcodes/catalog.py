"""Named FR codes and designs used by the demos and the test suites.

All constructions use 0-based point labels.  Graph-derived codes index
edges lexicographically by vertex pair so the emitted matrices are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .designs import TDesign, verify_t_design
from .errors import ParameterError
from .incidence import FrCode, from_blocks, from_matrix, validate_fr


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: FrCode
    provenance: str


def trivial_code(g: int) -> FrCode:
    """(g, 1, g, 1): identity incidence matrix, node i stores packet i."""
    if not isinstance(g, int) or g < 1:
        raise ParameterError(f"g must be a positive integer, got {g!r}")
    return validate_fr(from_blocks(g, [(i,) for i in range(g)]))


def repetition_code(n: int) -> FrCode:
    """(n, 1, 1, n): one packet copied onto every node (all-one n x 1 matrix)."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    return validate_fr(from_blocks(1, [(0,)] * n))


def _graph_edge_code(num_vertices: int, edges: list[tuple[int, int]]) -> FrCode:
    """Vertices as nodes, edges as points; vertex v stores its incident edges."""
    blocks = []
    for v in range(num_vertices):
        blocks.append(tuple(i for i, (a, b) in enumerate(edges) if v in (a, b)))
    return validate_fr(from_blocks(len(edges), blocks))


def complete_graph_code(m: int) -> FrCode:
    """Edge incidence of K_m: an (m, m-1, m(m-1)/2, 2) code."""
    if not isinstance(m, int) or m < 3:
        raise ParameterError(f"m must be an integer >= 3, got {m!r}")
    edges = list(combinations(range(m), 2))
    code = _graph_edge_code(m, edges)
    assert code.params == (m, m - 1, m * (m - 1) // 2, 2)
    return code


def octahedron_code() -> FrCode:
    """Edge incidence of the octahedron K_{2,2,2}: a (6, 4, 12, 2) code.

    Vertices 0..5 with antipodal pairs (0,1), (2,3), (4,5); the 12 edges are
    all other vertex pairs, indexed lexicographically.
    """
    antipodal = {(0, 1), (2, 3), (4, 5)}
    edges = [e for e in combinations(range(6), 2) if e not in antipodal]
    code = _graph_edge_code(6, edges)
    assert code.params == (6, 4, 12, 2)
    return code


_PRISM_ROWS = (
    (1, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (0, 1, 0, 0, 0, 1),
    (0, 0, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 0),
    (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 1, 1),
)


def prism_code() -> FrCode:
    """Edge-to-vertex incidence of the triangular prism: a (9, 2, 6, 3) code.

    Nodes are the nine edges, each storing its two endpoints; meets the dual
    file-size bound with equality at k = 4.
    """
    code = validate_fr(from_matrix(_PRISM_ROWS))
    assert code.params == (9, 2, 6, 3)
    return code


def design_7_4_2() -> TDesign:
    """The 2-(7,4,2) biplane (complement of the Fano plane), verified."""
    structure = from_blocks(
        7,
        [
            (0, 1, 2, 5),
            (0, 1, 4, 6),
            (0, 2, 3, 4),
            (0, 3, 5, 6),
            (1, 2, 3, 6),
            (1, 3, 4, 5),
            (2, 4, 5, 6),
        ],
    )
    return verify_t_design(structure, 2)


def fano_plane() -> TDesign:
    """The Fano plane, the 2-(7,3,1) Steiner triple system, verified."""
    structure = from_blocks(
        7,
        [
            (0, 1, 2),
            (0, 3, 4),
            (0, 5, 6),
            (1, 3, 5),
            (1, 4, 6),
            (2, 3, 6),
            (2, 4, 5),
        ],
    )
    return verify_t_design(structure, 2)


def entries() -> tuple[CatalogEntry, ...]:
    """The canonical catalog, every entry validated at construction."""
    from .designs import design_to_fr

    return (
        CatalogEntry("trivial-2", trivial_code(2), "identity layout on 2 nodes"),
        CatalogEntry("trivial-5", trivial_code(5), "identity layout on 5 nodes"),
        CatalogEntry("repetition-3", repetition_code(3), "one packet copied 3 times"),
        CatalogEntry("complete-graph-4", complete_graph_code(4), "edge incidence of K_4"),
        CatalogEntry("complete-graph-5", complete_graph_code(5), "edge incidence of K_5"),
        CatalogEntry(
            "octahedron",
            octahedron_code(),
            "edge incidence of K_{2,2,2}; substitute layout with the same "
            "(6,4,12,2) parameters, M_3 = 9 verified by enumeration",
        ),
        CatalogEntry(
            "prism",
            prism_code(),
            "triangular-prism edge incidence; tight against the dual bound at k = 4",
        ),
        CatalogEntry(
            "design-7-4-2",
            design_to_fr(design_7_4_2()),
            "storage nodes from the 2-(7,4,2) biplane blocks",
        ),
        CatalogEntry(
            "fano",
            design_to_fr(fano_plane()),
            "storage nodes from the Fano plane lines",
        ),
    )


def names() -> list[str]:
    return [entry.name for entry in entries()]


def get(name: str) -> FrCode:
    """Resolve a catalog name, including parametrized families like trivial-7."""
    for entry in entries():
        if entry.name == name:
            return entry.code
    for prefix, builder in (
        ("trivial-", trivial_code),
        ("repetition-", repetition_code),
        ("complete-graph-", complete_graph_code),
    ):
        if name.startswith(prefix):
            suffix = name[len(prefix):]
            try:
                value = int(suffix)
            except ValueError as exc:
                raise ParameterError(f"unknown catalog name {name!r}") from exc
            return builder(value)
    raise ParameterError(f"unknown catalog name {name!r}")


def design_names() -> list[str]:
    return ["design-7-4-2", "fano"]


def get_design(name: str) -> TDesign:
    if name == "design-7-4-2":
        return design_7_4_2()
    if name == "fano":
        return fano_plane()
    raise ParameterError(f"unknown design name {name!r}")
