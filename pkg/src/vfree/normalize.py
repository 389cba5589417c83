"""Normalization by contraction of trivial spanning-tree edges.

A spanning-tree half-edge e is *trivial* when its edge order equals the
order at its terminus: the corresponding edge-group embedding is onto, so
the edge carries no amalgamation. Contracting e deletes the geometric edge
{e, bar(e)} and the vertex t(e), re-homing every half-edge incident to
t(e) onto o(e); the fundamental group is unchanged, and so is every
order-determined invariant (m, chi, type, rank, counting series).

Contraction is repeated, always at the smallest-id trivial half-edge,
until none remains. Each step removes one vertex, so at most |V| - 1
steps occur. Non-tree edges with order equality are left alone; only the
tree is constrained.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotTreeEdge, NotTrivial
from .gog import GraphOfGroups, NormalizedGog, check_valid
from .graph import Graph, SpanningTree, spanning_tree


@dataclass(frozen=True)
class ContractionStep:
    contracted_edge: str
    removed_vertex: str
    surviving_vertex: str


def find_trivial_edge(gog: GraphOfGroups, tree: SpanningTree) -> str | None:
    """Smallest-id tree half-edge whose order equals its terminus order.

    Both half-edges of a pair are scanned, so an onto embedding at either
    endpoint is found (at the origin side, via the reversed half-edge).
    """
    g = gog.graph
    for e in sorted(tree.tree_edges):
        if gog.edge_order[e] == gog.vertex_order[g.terminus[e]]:
            return e
    return None


def contract_edge(
    gog: GraphOfGroups, tree: SpanningTree, e1: str
) -> tuple[GraphOfGroups, SpanningTree, ContractionStep]:
    """Contract the trivial tree half-edge e1 into its origin vertex.

    The pair {e1, bar(e1)} and the vertex t(e1) are removed; half-edges
    formerly incident to t(e1) become incident to o(e1). Orders are
    unchanged (the re-homed embeddings are compositions of embeddings).
    The shrunken tree still spans the new graph.
    """
    g = gog.graph
    if e1 not in tree.tree_edges:
        raise NotTreeEdge(e1)
    removed = g.terminus[e1]
    survivor = g.origin[e1]
    if gog.edge_order[e1] != gog.vertex_order[removed]:
        raise NotTrivial(
            f"edge order {gog.edge_order[e1]} != order "
            f"{gog.vertex_order[removed]} at {removed!r}"
        )

    dropped = {e1, g.bar[e1]}
    kept = [e for e in g.half_edges if e not in dropped]

    def rehome(v: str) -> str:
        return survivor if v == removed else v

    new_graph = Graph(
        vertices=tuple(v for v in g.vertices if v != removed),
        half_edges=tuple(kept),
        bar={e: g.bar[e] for e in kept},
        origin={e: rehome(g.origin[e]) for e in kept},
        terminus={e: rehome(g.terminus[e]) for e in kept},
    )
    new_gog = GraphOfGroups(
        graph=new_graph,
        vertex_order={v: n for v, n in gog.vertex_order.items() if v != removed},
        edge_order={e: s for e, s in gog.edge_order.items() if e not in dropped},
    )
    new_tree = SpanningTree(
        graph=new_graph,
        tree_edges=tree.tree_edges - dropped,
        root=rehome(tree.root),
    )
    step = ContractionStep(
        contracted_edge=e1, removed_vertex=removed, surviving_vertex=survivor
    )
    return new_gog, new_tree, step


def normalize(gog: GraphOfGroups) -> tuple[NormalizedGog, list[ContractionStep]]:
    """Contract trivial tree edges until none remains.

    The spanning tree is built once, rooted at the smallest vertex id, and
    shrinks with each contraction. Returns the normalized datum and the
    step log (empty when the input is already normalized).
    """
    check_valid(gog)
    tree = spanning_tree(gog.graph, gog.graph.vertices[0])
    steps: list[ContractionStep] = []
    while True:
        e = find_trivial_edge(gog, tree)
        if e is None:
            return NormalizedGog(gog=gog, tree=tree), steps
        gog, tree, step = contract_edge(gog, tree, e)
        steps.append(step)
