"""Independent reference implementations used by the tests.

Nothing here imports hyperstar: graphs are rebuilt from the set definition
with itertools and analysed with networkx or plain brute force.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


def brute_graph(n: int, k: int, folded: bool = False) -> nx.Graph:
    """Nodes are frozensets of 1-based elements."""
    verts = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    ground = frozenset(range(1, n + 1))
    g = nx.Graph()
    g.add_nodes_from(verts)
    for v, w in combinations(verts, 2):
        if len(v & w) == k - 1 and ((1 in v) != (1 in w)):
            g.add_edge(v, w)
        elif folded and v | w == ground and not v & w:
            g.add_edge(v, w)
    return g


def colex_key(s: frozenset) -> tuple:
    return tuple(sorted(s, reverse=True))


def as_labels(g: nx.Graph) -> set[frozenset]:
    """Edge set as a set of frozenset pairs of sorted element tuples."""
    return {frozenset((tuple(sorted(a)), tuple(sorted(b)))) for a, b in g.edges()}


def count_automorphisms(g: nx.Graph) -> int:
    return sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())


def scan_count(adjacency) -> int:
    """Automorphisms by trying every vertex permutation."""
    n = len(adjacency)
    edges = {frozenset((u, v)) for u in range(n) for v in adjacency[u]}
    total = 0
    for p in permutations(range(n)):
        if all(frozenset((p[u], p[v])) in edges for u, v in map(tuple, edges)):
            total += 1
    return total


def brute_closure(gens, degree: int) -> set[tuple]:
    """Group generated by ``gens`` via right multiplication BFS."""
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def cycles_through(g: nx.Graph, path, length: int) -> int:
    """Distinct ``length``-cycles containing ``path`` consecutively, counted
    by brute enumeration of simple cycles."""
    want = list(path)
    count = 0
    for cyc in nx.simple_cycles(g, length_bound=length):
        if len(cyc) != length:
            continue
        L = len(cyc)
        found = False
        for seq in (cyc, cyc[::-1]):
            for s in range(L):
                if all(seq[(s + i) % L] == want[i] for i in range(len(want))):
                    found = True
        count += found
    return count
