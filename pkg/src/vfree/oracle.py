"""Independent brute-force validators and test-data generators.

The subgroup counter enumerates permutation actions directly and knows
nothing about convolutions or product formulas; it is the ground truth the
counting code is checked against where both apply (trivial vertex groups).
Likewise the orientation checker tries all orientations of a tree rather
than trusting the root-directed construction. Nothing here imports from
the counting or invariants modules.
"""

from __future__ import annotations

import itertools
import math
import random

from .errors import DegreeTooLarge, NonExactDivision, TooLarge
from .gog import GraphOfGroups, build_gog
from .graph import Graph, Orientation, SpanningTree, build_graph

MAX_ORACLE_DEGREE = 6
MAX_ORACLE_TREE_EDGES = 20
MAX_SHAPE_ORDER = 12


def _acts_transitively(perms: tuple[tuple[int, ...], ...], n: int) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == n


def free_group_subgroup_counts(r: int, N: int) -> list[int]:
    """Subgroups of index 1..N in the free group of rank r, by enumeration.

    For each degree n, every r-tuple of permutations of n points is an
    action; counting the transitive tuples t_n and dividing by (n-1)!
    gives the subgroup count. The division must be exact.
    """
    if r < 1:
        raise DegreeTooLarge(f"rank must be >= 1, got {r}")
    if N > MAX_ORACLE_DEGREE:
        raise DegreeTooLarge(f"degree {N} > {MAX_ORACLE_DEGREE}")
    counts = []
    for n in range(1, N + 1):
        perms = list(itertools.permutations(range(n)))
        transitive = 0
        for tup in itertools.product(perms, repeat=r):
            if _acts_transitively(tup, n):
                transitive += 1
        quot, rem = divmod(transitive, math.factorial(n - 1))
        if rem:
            raise NonExactDivision(f"t_{n} = {transitive} not divisible by ({n}-1)!")
        counts.append(quot)
    return counts


def orientation_uniqueness(tree: SpanningTree, v0: str) -> bool:
    """Try all orientations of the tree; exactly one may send e -> t(e)
    bijectively onto the vertices other than v0, and it must equal the
    root-directed orientation."""
    from .graph import orient_from_root  # structural, not arithmetic

    g = tree.graph
    pairs = [(e, g.bar[e]) for e in tree.geometric_tree_edges()]
    if len(pairs) > MAX_ORACLE_TREE_EDGES:
        raise TooLarge(f"{len(pairs)} geometric edges > {MAX_ORACLE_TREE_EDGES}")

    others = set(g.vertices) - {v0}
    winners = []
    for picks in itertools.product(*pairs) if pairs else [()]:
        termini = [g.terminus[e] for e in picks]
        if len(set(termini)) == len(termini) and set(termini) == others:
            winners.append(frozenset(picks))
    return len(winners) == 1 and winners[0] == orient_from_root(tree, v0).chosen


def _shape_data(order_bound: int):
    """Yield (key, vertex_orders, edge_specs) for every normalized shape
    with at most 3 vertices and 2 geometric edges, deduplicated under
    relabeling."""
    B = order_bound
    rng_orders = range(1, B + 1)

    def divs(n: int) -> list[int]:
        return [d for d in range(1, n + 1) if n % d == 0]

    # single vertex, no edges
    for n in rng_orders:
        yield ("point", n), {"v1": n}, []

    # single vertex, one loop (never a tree edge: any divisor order)
    for n in rng_orders:
        for s in divs(n):
            yield ("loop", n, s), {"v1": n}, [("e1", "v1", "v1", s)]

    # single vertex, two loops; loops are interchangeable
    for n in rng_orders:
        ds = divs(n)
        for s1 in ds:
            for s2 in ds:
                if s1 <= s2:
                    yield ("bouquet2", n, s1, s2), {"v1": n}, [
                        ("e1", "v1", "v1", s1),
                        ("e2", "v1", "v1", s2),
                    ]

    # segment; endpoints are interchangeable; tree edge must be strict
    for a in rng_orders:
        for b in rng_orders:
            if a > b:
                continue
            for s in divs(math.gcd(a, b)):
                if s < a and s < b:
                    yield ("segment", a, s, b), {"v1": a, "v2": b}, [
                        ("e1", "v1", "v2", s)
                    ]

    # segment with a loop at the second vertex; no symmetry
    for a in rng_orders:
        for b in rng_orders:
            for s1 in divs(math.gcd(a, b)):
                if not (s1 < a and s1 < b):
                    continue
                for s2 in divs(b):
                    yield ("segment_loop", a, s1, b, s2), {"v1": a, "v2": b}, [
                        ("e1", "v1", "v2", s1),
                        ("e2", "v2", "v2", s2),
                    ]

    # two parallel edges; the smaller-order edge is the BFS tree edge and
    # must be strict; endpoints and edges are interchangeable
    for a in rng_orders:
        for b in rng_orders:
            if a > b:
                continue
            ds = divs(math.gcd(a, b))
            for s1 in ds:
                for s2 in ds:
                    if s1 <= s2 and s1 < a and s1 < b:
                        yield ("double_edge", a, s1, s2, b), {"v1": a, "v2": b}, [
                            ("e1", "v1", "v2", s1),
                            ("e2", "v1", "v2", s2),
                        ]

    # path on three vertices; reversal symmetry
    for a in rng_orders:
        for b in rng_orders:
            for c in rng_orders:
                for s1 in divs(math.gcd(a, b)):
                    if not (s1 < a and s1 < b):
                        continue
                    for s2 in divs(math.gcd(b, c)):
                        if not (s2 < b and s2 < c):
                            continue
                        if (a, s1, b, s2, c) <= (c, s2, b, s1, a):
                            yield ("path", a, s1, b, s2, c), {
                                "v1": a, "v2": b, "v3": c,
                            }, [
                                ("e1", "v1", "v2", s1),
                                ("e2", "v2", "v3", s2),
                            ]


def exhaustive_rank2_shapes(order_bound: int) -> list[GraphOfGroups]:
    """All normalized data with <= 3 vertices, <= 2 geometric edges, and
    orders <= order_bound, deterministic and duplicate-free.

    The list covers every free rank that such shapes realize; callers
    filter by rank. Every datum is a fixed point of normalization (its
    BFS spanning tree has no trivial edges).
    """
    if order_bound > MAX_SHAPE_ORDER:
        raise TooLarge(f"order bound {order_bound} > {MAX_SHAPE_ORDER}")
    seen = set()
    out = []
    for key, vorders, especs in _shape_data(order_bound):
        if key in seen:
            continue
        seen.add(key)
        out.append(build_gog(vorders, especs))
    return out


def random_gog(
    rng: random.Random,
    max_vertices: int = 6,
    max_geometric_edges: int = 6,
    max_order: int = 24,
) -> GraphOfGroups:
    """A random valid connected datum, for property tests.

    Vertex orders are drawn from the divisors of a random base <= max_order,
    which keeps the lcm of the orders (and hence every factorial in the
    counting series) desk-scale while still exercising mixed torsion.
    Edge orders are random divisors of the gcd at their endpoints, so
    trivial edges occur regularly and normalization has real work to do.
    """
    base = rng.randint(1, max_order)
    base_divs = [d for d in range(1, base + 1) if base % d == 0]
    nv = rng.randint(1, max_vertices)
    vertex_orders = {f"v{i}": rng.choice(base_divs) for i in range(1, nv + 1)}
    names = sorted(vertex_orders)

    def random_edge_order(u: str, v: str) -> int:
        g = math.gcd(vertex_orders[u], vertex_orders[v])
        ds = [d for d in range(1, g + 1) if g % d == 0]
        return rng.choice(ds)

    specs = []
    for i in range(2, nv + 1):
        u = f"v{rng.randint(1, i - 1)}"
        v = f"v{i}"
        specs.append((f"e{len(specs) + 1}", u, v, random_edge_order(u, v)))
    extra = rng.randint(0, max_geometric_edges - (nv - 1))
    for _ in range(extra):
        u, v = rng.choice(names), rng.choice(names)
        specs.append((f"e{len(specs) + 1}", u, v, random_edge_order(u, v)))
    return build_gog(vertex_orders, specs)


def random_tree_graph(rng: random.Random, max_geometric_edges: int = 10) -> Graph:
    """A random tree as a half-edge graph (random attachment order)."""
    n_edges = rng.randint(0, max_geometric_edges)
    vertices = [f"v{i:02d}" for i in range(1, n_edges + 2)]
    records = []
    for i in range(2, n_edges + 2):
        u = f"v{rng.randint(1, i - 1):02d}"
        v = f"v{i:02d}"
        name = f"e{i - 1:02d}"
        records.append((name, name + "~", u, v))
        records.append((name + "~", name, v, u))
    return build_graph(vertices, records)
