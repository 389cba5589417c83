"""Shared constructors and strategies for the test suite."""

from __future__ import annotations

import math
import random

from hypothesis import strategies as st

from vfree import build_gog
from vfree.counting import f_series, g_series
from vfree.gog import GraphOfGroups
from vfree.invariants import euler_char, free_rank, m_gamma, type_vector
from vfree.normalize import contract_edge
from vfree.oracle import random_gog


# --- named data --------------------------------------------------------------

def dihedral():
    """C2 * C2: segment with vertex orders 2, 2 and trivial edge group."""
    return build_gog({"a": 2, "b": 2}, [("s", "a", "b", 1)])


def free_bouquet(r: int):
    """Free group of rank r: one trivial vertex carrying r trivial loops."""
    return build_gog(
        {"v": 1}, [(f"l{i}", "v", "v", 1) for i in range(1, r + 1)]
    )


def c2_star_c3():
    return build_gog({"a": 2, "b": 3}, [("s", "a", "b", 1)])


def triple_c2():
    """C2 * C2 * C2 as a path of three order-2 vertices."""
    return build_gog(
        {"a": 2, "b": 2, "c": 2}, [("e", "a", "b", 1), ("f", "b", "c", 1)]
    )


def hnn_loop(n: int, s: int):
    """Single vertex of order n with one loop of order s."""
    return build_gog({"v": n}, [("e", "v", "v", s)])


def segment(a: int, s: int, b: int):
    return build_gog({"a": a, "b": b}, [("s", "a", "b", s)])


def segment_with_loop(a: int, s1: int, b: int, s2: int):
    """Segment a--b with a loop of order s2 at the b side."""
    return build_gog(
        {"a": a, "b": b}, [("e1", "a", "b", s1), ("e2", "b", "b", s2)]
    )


def double_edge(a: int, s1: int, s2: int, b: int):
    return build_gog(
        {"a": a, "b": b}, [("e1", "a", "b", s1), ("e2", "a", "b", s2)]
    )


# --- invariant bundles --------------------------------------------------------

def invariant_signature(gog: GraphOfGroups, depth: int = 0, with_g: bool = False):
    """The order-determined invariants, optionally with a counting prefix."""
    tv = type_vector(gog)
    sig = (m_gamma(gog), euler_char(gog), tv.m, tuple(sorted(tv.zeta.items())),
           free_rank(gog))
    if depth:
        sig = sig + (tuple(f_series(gog, depth)),)
        if with_g:
            sig = sig + (tuple(g_series(gog, depth)),)
    return sig


# --- contraction-order exploration ---------------------------------------------

def trivial_tree_half_edges(gog, tree):
    g = gog.graph
    return [
        e for e in sorted(tree.tree_edges)
        if gog.edge_order[e] == gog.vertex_order[g.terminus[e]]
    ]


def terminal_data_all_orders(gog, tree, _cache=None):
    """Every datum reachable by exhausting trivial-edge contractions,
    branching over all choices at every step. Deduplicated by an
    id-independent structural key."""
    results = {}

    def key(d):
        g = d.graph
        vs = tuple(sorted(d.vertex_order.values()))
        es = tuple(
            sorted(
                (
                    d.edge_order[e],
                    tuple(sorted((d.vertex_order[g.origin[e]],
                                  d.vertex_order[g.terminus[e]]))),
                    g.origin[e] == g.terminus[e],
                )
                for e in g.orientation_reps()
            )
        )
        return vs, es

    def walk(d, t):
        trivial = trivial_tree_half_edges(d, t)
        if not trivial:
            results.setdefault(key(d), d)
            return
        for e in trivial:
            nd, nt, _ = contract_edge(d, t, e)
            walk(nd, nt)

    walk(gog, tree)
    return list(results.values())


# --- strategies -----------------------------------------------------------------

@st.composite
def small_gogs(draw, max_vertices: int = 4, max_base: int = 12,
               max_extra_edges: int = 2):
    """Valid connected data with small orders (lcm bounded by the base)."""
    base = draw(st.integers(1, max_base))
    divs = [d for d in range(1, base + 1) if base % d == 0]
    nv = draw(st.integers(1, max_vertices))
    vorders = {
        f"v{i}": draw(st.sampled_from(divs)) for i in range(1, nv + 1)
    }
    specs = []
    for i in range(2, nv + 1):
        u = f"v{draw(st.integers(1, i - 1))}"
        v = f"v{i}"
        g = math.gcd(vorders[u], vorders[v])
        s = draw(st.sampled_from([d for d in divs if g % d == 0]))
        specs.append((f"e{len(specs) + 1}", u, v, s))
    names = sorted(vorders)
    for _ in range(draw(st.integers(0, max_extra_edges))):
        u = draw(st.sampled_from(names))
        v = draw(st.sampled_from(names))
        g = math.gcd(vorders[u], vorders[v])
        s = draw(st.sampled_from([d for d in divs if g % d == 0]))
        specs.append((f"e{len(specs) + 1}", u, v, s))
    return build_gog(vorders, specs)


def seeded_random_data(seed: int, count: int, **kwargs):
    rng = random.Random(seed)
    return [random_gog(rng, **kwargs) for _ in range(count)]
