"""Shared test utilities: a brute-force vertex connectivity reference,
seeded graph corpora, and exhaustive small-graph enumeration."""

from __future__ import annotations

from itertools import combinations, permutations

from starcut import Graph, build, gen_random_graph, is_connected, mask_connected


def brute_vertex_connectivity(g: Graph) -> int | None:
    """Smallest |S| with g - S disconnected; None when no such S (cliques)."""
    verts = range(g.n)
    for size in range(g.n - 1):
        for sel in combinations(verts, size):
            removed = 0
            for v in sel:
                removed |= 1 << v
            rest = g.full_mask & ~removed
            if rest.bit_count() >= 2 and not mask_connected(g, rest):
                return size
    return None


def connected_corpus(count: int, max_n: int = 10, seed0: int = 0):
    """First `count` seeded (graph, n, p, seed) combos that come out connected.

    Walks seeds deterministically over n in 4..max_n and p in .3/.5/.8, so the
    corpus is stable across runs and machines.
    """
    out = []
    seed = seed0
    while len(out) < count:
        n = 4 + seed % (max_n - 3)
        p = (0.3, 0.5, 0.8)[seed % 3]
        g = gen_random_graph(n, p, seed)
        seed += 1
        if g.n >= 2 and is_connected(g):
            out.append((g, n, p, seed - 1))
    return out


def _canon(n: int, edge_set: frozenset[frozenset[int]]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in map(tuple, edge_set))
        )
        if best is None or relabeled < best:
            best = relabeled
    return (n, best)


def connected_graphs_upto(max_n: int) -> list[Graph]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    found = {}
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            g = build(n, edges)
            if not is_connected(g):
                continue
            key = _canon(n, frozenset(frozenset(e) for e in edges))
            if key not in found:
                found[key] = g
    return list(found.values())
