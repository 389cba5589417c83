"""Graphs of finite groups, represented by group orders only.

Every quantity computed downstream (Euler characteristic, type invariants,
free rank, counting series, classification) depends on the vertex- and
edge-group orders alone, never on the groups themselves, so a datum is a
half-edge graph plus two order labellings. Edge orders are constant on
{e, bar(e)} and must divide the orders at both endpoints, mirroring the
embeddings of an edge group into its endpoint groups.

Text format (UTF-8, line based, '#' starts a comment, blank lines ignored)::

    vertex <id> <order>
    edge <id> <origin-vertex-id> <terminus-vertex-id> <order>

Each ``edge`` line introduces the half-edge pair ``<id>`` / ``<id>~``;
user-supplied ids must not contain '~'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DanglingVertexRef,
    DivisibilityViolation,
    EdgeOrderNotSymmetric,
    EmptyGraph,
    GogSyntaxError,
    NotConnected,
    NotNormalized,
)
from .graph import Graph, SpanningTree, build_graph, is_connected

BAR_SUFFIX = "~"


@dataclass(frozen=True)
class GraphOfGroups:
    graph: Graph
    vertex_order: dict[str, int]
    edge_order: dict[str, int]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    code: str | None = None
    offender: str | None = None
    detail: str = ""


@dataclass(frozen=True)
class NormalizedGog:
    """A datum whose spanning tree has no trivial edges.

    Along every tree half-edge the edge order is strictly smaller than the
    order at its terminus, i.e. no edge-group embedding along the tree is
    onto.
    """

    gog: GraphOfGroups
    tree: SpanningTree

    def __post_init__(self) -> None:
        g = self.gog
        for e in self.tree.tree_edges:
            if g.edge_order[e] >= g.vertex_order[g.graph.terminus[e]]:
                raise NotNormalized(
                    f"tree half-edge {e!r} has edge order "
                    f"{g.edge_order[e]} >= terminus order"
                )


def validate(gog: GraphOfGroups) -> ValidationReport:
    """Check the datum's invariants; report the first violation found.

    Codes: Empty, EdgeOrderNotSymmetric, DivisibilityViolation, NotConnected.
    """
    g = gog.graph
    if not g.vertices:
        return ValidationReport(False, "Empty", None, "graph has no vertices")

    for e in g.half_edges:
        if gog.edge_order[e] != gog.edge_order[g.bar[e]]:
            return ValidationReport(
                False, "EdgeOrderNotSymmetric", e,
                f"order({e}) = {gog.edge_order[e]} != "
                f"order({g.bar[e]}) = {gog.edge_order[g.bar[e]]}",
            )

    for e in g.half_edges:
        s = gog.edge_order[e]
        for v in (g.origin[e], g.terminus[e]):
            n = gog.vertex_order[v]
            if s < 1 or n < 1 or n % s != 0:
                return ValidationReport(
                    False, "DivisibilityViolation", e,
                    f"edge order {s} does not divide order {n} at vertex {v}",
                )

    if not is_connected(g):
        return ValidationReport(False, "NotConnected", None, "graph is not connected")

    return ValidationReport(True)


def check_valid(gog: GraphOfGroups) -> GraphOfGroups:
    """Raise the error corresponding to the first validation failure."""
    report = validate(gog)
    if report.ok:
        return gog
    exc = {
        "Empty": EmptyGraph,
        "EdgeOrderNotSymmetric": EdgeOrderNotSymmetric,
        "DivisibilityViolation": DivisibilityViolation,
        "NotConnected": NotConnected,
    }[report.code]
    raise exc(report.detail)


def _assemble(
    vertex_orders: dict[str, int],
    edge_specs: list[tuple[str, str, str, int]],
) -> GraphOfGroups:
    for v in vertex_orders:
        if BAR_SUFFIX in v:
            raise GogSyntaxError(f"vertex id {v!r} contains reserved '~'")
    records = []
    edge_order: dict[str, int] = {}
    for name, o, t, order in edge_specs:
        if BAR_SUFFIX in name:
            raise GogSyntaxError(f"edge id {name!r} contains reserved '~'")
        back = name + BAR_SUFFIX
        records.append((name, back, o, t))
        records.append((back, name, t, o))
        edge_order[name] = order
        edge_order[back] = order
    graph = build_graph(sorted(vertex_orders), records)
    return GraphOfGroups(graph, dict(vertex_orders), edge_order)


def build_gog(
    vertex_orders: dict[str, int],
    edge_specs: list[tuple[str, str, str, int]],
) -> GraphOfGroups:
    """Build and validate a datum from (name, origin, terminus, order) edges.

    Synthesizes the half-edge pair name/name~ for each entry, like the parser.
    """
    return check_valid(_assemble(vertex_orders, edge_specs))


def parse_gog(text: str) -> GraphOfGroups:
    """Parse the GOG text format; raises GogSyntaxError with a line number,
    then any validation error."""
    return check_valid(parse_gog_structure(text))


def parse_gog_structure(text: str) -> GraphOfGroups:
    """Parse without semantic validation (syntax and graph shape only)."""
    vertex_orders: dict[str, int] = {}
    edge_specs: list[tuple[str, str, str, int]] = []
    edge_names: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "vertex":
            if len(fields) != 3:
                raise GogSyntaxError(f"line {lineno}: expected 'vertex <id> <order>'")
            _, vid, order_s = fields
            if BAR_SUFFIX in vid:
                raise GogSyntaxError(f"line {lineno}: id {vid!r} contains reserved '~'")
            if vid in vertex_orders:
                raise GogSyntaxError(f"line {lineno}: duplicate vertex {vid!r}")
            vertex_orders[vid] = _parse_order(order_s, lineno)
        elif kind == "edge":
            if len(fields) != 5:
                raise GogSyntaxError(
                    f"line {lineno}: expected 'edge <id> <origin> <terminus> <order>'"
                )
            _, eid, o, t, order_s = fields
            if BAR_SUFFIX in eid:
                raise GogSyntaxError(f"line {lineno}: id {eid!r} contains reserved '~'")
            if eid in edge_names:
                raise GogSyntaxError(f"line {lineno}: duplicate edge {eid!r}")
            order = _parse_order(order_s, lineno)
            if o not in vertex_orders:
                raise DanglingVertexRef(f"line {lineno}: unknown vertex {o!r}")
            if t not in vertex_orders:
                raise DanglingVertexRef(f"line {lineno}: unknown vertex {t!r}")
            edge_names.add(eid)
            edge_specs.append((eid, o, t, order))
        else:
            raise GogSyntaxError(f"line {lineno}: unknown directive {kind!r}")

    return _assemble(vertex_orders, edge_specs)


def _parse_order(s: str, lineno: int) -> int:
    try:
        n = int(s)
    except ValueError:
        raise GogSyntaxError(f"line {lineno}: order {s!r} is not an integer") from None
    if n < 1:
        raise GogSyntaxError(f"line {lineno}: order must be positive, got {n}")
    return n


def serialize_gog(gog: GraphOfGroups) -> str:
    """Canonical text: vertices sorted by id, one line per geometric edge
    (the half-edge with smaller id), edges sorted by id."""
    g = gog.graph
    lines = [f"vertex {v} {gog.vertex_order[v]}" for v in g.vertices]
    for e, _ in g.geometric_edges():
        name = e[:-1] if e.endswith(BAR_SUFFIX) else e
        lines.append(
            f"edge {name} {g.origin[e]} {g.terminus[e]} {gog.edge_order[e]}"
        )
    return "\n".join(lines) + "\n"
