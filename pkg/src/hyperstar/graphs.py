"""Hyper-star graphs HS(n, k), folded hyper-stars FHS(2k, k), and the
structural metrics needed to check them."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from . import subsets


@dataclass(frozen=True)
class HyperStarGraph:
    n: int
    k: int
    folded: bool
    masks: tuple[int, ...] = field(repr=False)
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def regular(self) -> bool:
        return self.n == 2 * self.k

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def _adjsets(self) -> tuple[frozenset, ...]:
        cached = self.__dict__.get("_adjsets_cache")
        if cached is None:
            cached = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_adjsets_cache", cached)
        return cached

    def edges(self) -> list[tuple[int, int]]:
        """Canonical sorted list of ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(len(self)) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def rank_of(self, mask: int) -> int:
        return subsets.rank_table(self.n, self.k)[mask]

    def vertex(self, elements: Iterable[int]) -> int:
        """Rank of the vertex with the given 1-based elements."""
        return self.rank_of(subsets.from_elements(elements, self.n))

    def label(self, v: int) -> str:
        return subsets.label(self.masks[v], self.n)

    def in_first_part(self, v: int) -> bool:
        return bool(self.masks[v] & 1)

    def complement_of(self, v: int) -> int:
        return self.rank_of(subsets.complement(self.masks[v], self.n))

    @property
    def name(self) -> str:
        return f"{'FHS' if self.folded else 'HS'}({self.n},{self.k})"


def adjacent(v: int, w: int, n: int, folded: bool = False) -> bool:
    """Edge rule on masks: share k-1 elements with 1 in exactly one of them,
    or (folded) be complementary."""
    k = subsets.weight(v)
    if subsets.weight(w) != k:
        raise ValueError("weight mismatch")
    if folded:
        if n != 2 * k:
            raise ValueError(f"folded hyper-star needs n = 2k, got n={n}, k={k}")
        if v ^ w == (1 << n) - 1:
            return True
    return subsets.weight(v & w) == k - 1 and (v ^ w) & 1 == 1


def build(n: int, k: int, folded: bool = False) -> HyperStarGraph:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n > subsets.MAX_N:
        raise ValueError(f"need n <= {subsets.MAX_N}, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}")
    if folded and n != 2 * k:
        raise ValueError(f"folded hyper-star needs n = 2k, got n={n}, k={k}")
    masks = subsets.all_subsets(n, k)
    index = subsets.rank_table(n, k)
    full = (1 << n) - 1
    adjacency = []
    for m in masks:
        # swap element 1 with an element on the other side
        nbrs = []
        if m & 1:
            outside = full & ~m
            for i in range(1, n):
                if outside >> i & 1:
                    nbrs.append(index[(m & ~1) | (1 << i)])
        else:
            for i in range(1, n):
                if m >> i & 1:
                    nbrs.append(index[(m & ~(1 << i)) | 1])
        if folded:
            nbrs.append(index[full & ~m])
        adjacency.append(tuple(sorted(nbrs)))
    return HyperStarGraph(n, k, folded, masks, tuple(adjacency))


def bipartition(g: HyperStarGraph) -> tuple[frozenset, frozenset]:
    """Vertices containing 1, and those that do not."""
    p1 = frozenset(v for v in range(len(g)) if g.in_first_part(v))
    p2 = frozenset(range(len(g))) - p1
    return p1, p2


def bfs_distances(g: HyperStarGraph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * len(g)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: HyperStarGraph) -> bool:
    return len(g) == 0 or min(bfs_distances(g, 0)) >= 0


def girth(g: HyperStarGraph) -> int | None:
    """Shortest cycle length, or ``None`` for a forest."""
    best = math.inf
    adj = g.adjacency
    for s in range(len(g)):
        dist = [-1] * len(g)
        parent = [-1] * len(g)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return None if best is math.inf else int(best)


def eccentricity(g: HyperStarGraph, v: int) -> float:
    dist = bfs_distances(g, v)
    return math.inf if min(dist) < 0 else max(dist)


def diameter(g: HyperStarGraph) -> float:
    """Largest eccentricity; ``math.inf`` when disconnected."""
    return max(eccentricity(g, v) for v in range(len(g)))


def check_path(g: HyperStarGraph, path: Sequence[int]) -> None:
    if len(path) < 2:
        raise ValueError("a path needs at least one edge")
    if len(set(path)) != len(path):
        raise ValueError(f"path repeats a vertex: {list(path)}")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"{g.label(a)} and {g.label(b)} are not adjacent")


def cycles_through_path(g: HyperStarGraph, path: Sequence[int], length: int) -> int:
    """Number of ``length``-cycles (as subgraphs) containing ``path`` as a
    run of consecutive vertices."""
    check_path(g, path)
    edges_in_path = len(path) - 1
    if length < 3 or length <= edges_in_path:
        return 0
    remaining = length - edges_in_path
    start, end = path[0], path[-1]
    if remaining == 1:
        return int(g.has_edge(end, start))
    dist_to_start = bfs_distances(g, start)
    used = set(path)
    adj = g.adjacency
    count = 0

    def extend(u: int, steps_left: int) -> None:
        nonlocal count
        if steps_left == 1:
            if g.has_edge(u, start):
                count += 1
            return
        for w in adj[u]:
            if w in used:
                continue
            d = dist_to_start[w]
            if d < 0 or d > steps_left - 1:
                continue
            used.add(w)
            extend(w, steps_left - 1)
            used.discard(w)

    extend(end, remaining)
    return count


def simple_paths(g: HyperStarGraph, length: int) -> list[tuple[int, ...]]:
    """All simple paths with ``length`` edges, one per orientation."""
    out: list[tuple[int, ...]] = []
    adj = g.adjacency

    def grow(p: list[int]) -> None:
        if len(p) == length + 1:
            out.append(tuple(p))
            return
        for w in adj[p[-1]]:
            if w not in p:
                p.append(w)
                grow(p)
                p.pop()

    for v in range(len(g)):
        grow([v])
    return out


def _max_flow_unit(adj: Sequence[Sequence[int]], s: int, t: int) -> int:
    """Max flow of an undirected graph with unit edge capacities."""
    # residual capacity per ordered pair; each undirected edge gives 1 both ways
    cap: dict[tuple[int, int], int] = {}
    for u, nbrs in enumerate(adj):
        for w in nbrs:
            cap[(u, w)] = 1
    flow = 0
    n = len(adj)
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for w in adj[u]:
                if parent[w] < 0 and cap[(u, w)] > 0:
                    parent[w] = u
                    queue.append(w)
        if parent[t] < 0:
            return flow
        w = t
        while w != s:
            u = parent[w]
            cap[(u, w)] -= 1
            cap[(w, u)] += 1
            w = u
        flow += 1


def edge_connectivity(g: HyperStarGraph) -> int:
    """Minimum edge cut, from max flows between vertex 0 and every other
    vertex.  Disconnected graphs give 0."""
    if len(g) < 2:
        return 0
    if not is_connected(g):
        return 0
    return min(_max_flow_unit(g.adjacency, 0, t) for t in range(1, len(g)))


def to_dot(g: HyperStarGraph) -> str:
    lines = [f'graph "{g.name}" {{']
    for v in range(len(g)):
        lines.append(f'  "{g.label(v)}";')
    for u, v in g.edges():
        lines.append(f'  "{g.label(u)}" -- "{g.label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(g: HyperStarGraph) -> str:
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges())


def metrics(g: HyperStarGraph, connectivity: bool = True) -> dict:
    p1, p2 = bipartition(g)
    diam = diameter(g)
    out = {
        "n": g.n,
        "k": g.k,
        "folded": g.folded,
        "vertices": len(g),
        "edges": g.num_edges,
        "degrees": sorted({g.degree(v) for v in range(len(g))}),
        "girth": girth(g),
        "diameter": None if diam == math.inf else int(diam),
        "bipartition_sizes": [len(p1), len(p2)],
    }
    if connectivity:
        out["edge_connectivity"] = edge_connectivity(g)
    return out


def metrics_json(g: HyperStarGraph) -> str:
    return json.dumps(metrics(g), sort_keys=True)


def expected_edge_count(n: int, k: int, folded: bool = False) -> int:
    """Closed form for the regular case, degree sum otherwise."""
    with_one = comb(n - 1, k - 1)
    return with_one * (n - k) + (comb(n, k) // 2 if folded else 0)
