"""Automorphism groups by exhaustive backtracking, plus the transitivity and
stabiliser certifications built on them.

The search walks a chain of pointwise stabilisers.  At each level it fixes
the images of the earlier base vertices and, for every candidate image of
the next base vertex, asks whether *some* automorphism extends the partial
map.  Candidates already reached by the generators found so far are
skipped, so a failed extension attempt is a proof that the image is not in
the orbit.  The extension search itself assigns vertices in BFS order,
using distances to the base vertices as a cheap but sound refinement.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import graphs, perms
from .graphs import HyperStarGraph
from .groups import CapExceeded, PermGroup, equal_groups

MAX_VERTICES = 300


@dataclass(frozen=True, order=True)
class VertexInvariant:
    degree: int
    neighbor_degrees: tuple[int, ...]
    distance_profile: tuple[int, ...]


def vertex_invariant(g: HyperStarGraph, v: int) -> VertexInvariant:
    dist = graphs.bfs_distances(g, v)
    layers: dict[int, int] = {}
    for d in dist:
        layers[d] = layers.get(d, 0) + 1
    return VertexInvariant(
        g.degree(v),
        tuple(sorted(g.degree(w) for w in g.neighbors(v))),
        tuple(layers[d] for d in sorted(layers)),
    )


class _Searcher:
    """Extension search for one graph; caches all-pairs distances."""

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self.adj = [tuple(a) for a in adjacency]
        self.nv = len(self.adj)
        self.adjsets = [set(a) for a in self.adj]
        self.dist = [self._bfs(s) for s in range(self.nv)]
        invariants = {}
        for v in range(self.nv):
            profile: dict[int, int] = {}
            for d in self.dist[v]:
                profile[d] = profile.get(d, 0) + 1
            invariants[v] = (
                len(self.adj[v]),
                tuple(sorted(len(self.adj[w]) for w in self.adj[v])),
                tuple(sorted(profile.items())),
            )
        self.invariant = invariants
        self.nodes_visited = 0

    def _bfs(self, s: int) -> list[int]:
        dist = [-1] * self.nv
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def candidates(self, fixed: Sequence[tuple[int, int]], x: int) -> list[int]:
        """Images ``y`` of ``x`` compatible with the fixed pairs by invariant
        and by distances."""
        out = []
        inv_x = self.invariant[x]
        for y in range(self.nv):
            if self.invariant[y] != inv_x:
                continue
            if all(self.dist[a][x] == self.dist[b][y] for a, b in fixed):
                out.append(y)
        return out

    def extend(self, fixed: Sequence[tuple[int, int]]) -> tuple[int, ...] | None:
        """Some automorphism mapping each ``a`` to ``b`` for ``(a, b)`` in
        ``fixed``, or ``None`` when none exists."""
        if not fixed:
            raise ValueError("extension search needs at least one fixed pair")
        nv = self.nv
        fwd = [-1] * nv
        bwd = [-1] * nv
        for a, b in fixed:
            if fwd[a] not in (-1, b) or bwd[b] not in (-1, a):
                return None
            if self.invariant[a] != self.invariant[b]:
                return None
            fwd[a], bwd[b] = b, a
        for i, (a, b) in enumerate(fixed):
            for a2, b2 in fixed[:i]:
                if self.dist[a][a2] != self.dist[b][b2]:
                    return None
        anchors = list(fixed)
        root = fixed[0][0]
        # BFS order from the first fixed vertex, so every unfixed vertex has
        # its BFS parent assigned before it
        order = []
        parent = [-1] * nv
        reached = [False] * nv
        reached[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if fwd[u] < 0:
                order.append(u)
            for w in self.adj[u]:
                if not reached[w]:
                    reached[w] = True
                    parent[w] = u
                    queue.append(w)
        if not all(reached):
            raise ValueError("automorphism search needs a connected graph")
        dist = self.dist
        adj, adjsets = self.adj, self.adjsets
        invariant = self.invariant

        def consistent(x: int, y: int) -> bool:
            if invariant[x] != invariant[y]:
                return False
            for a, b in anchors:
                if dist[a][x] != dist[b][y]:
                    return False
            ys = adjsets[y]
            cnt = 0
            for w in adj[x]:
                fw = fwd[w]
                if fw >= 0:
                    if fw not in ys:
                        return False
                    cnt += 1
            for z in adj[y]:
                if bwd[z] >= 0:
                    cnt -= 1
            return cnt == 0

        def assign(i: int) -> bool:
            if i == len(order):
                return True
            x = order[i]
            py = fwd[parent[x]]
            for y in adj[py]:
                if bwd[y] >= 0:
                    continue
                self.nodes_visited += 1
                if not consistent(x, y):
                    continue
                fwd[x], bwd[y] = y, x
                if assign(i + 1):
                    return True
                fwd[x], bwd[y] = -1, -1
            return False

        if assign(0):
            return tuple(fwd)
        return None


def _check_size(g: HyperStarGraph, max_vertices: int) -> None:
    if len(g) > max_vertices:
        raise CapExceeded(f"{g.name} has {len(g)} vertices, cap is {max_vertices}")


def automorphism_group_of(adjacency: Sequence[Sequence[int]]) -> PermGroup:
    """Full automorphism group of a connected graph given by adjacency lists."""
    s = _Searcher(adjacency)
    nv = s.nv
    if nv == 0:
        return PermGroup(0, [])
    gens: list[tuple[int, ...]] = []
    fixed: list[tuple[int, int]] = []
    remaining = list(range(nv))
    while True:
        # next base vertex: first vertex still having more than one candidate
        base_vertex = None
        for v in remaining:
            if len(s.candidates(fixed, v)) > 1:
                base_vertex = v
                break
        if base_vertex is None:
            break
        level_gens = [x for x in gens if all(x[a] == a for a, _ in fixed)]
        orbit = _orbit(base_vertex, level_gens)
        for y in s.candidates(fixed, base_vertex):
            if y in orbit:
                continue
            found = s.extend(fixed + [(base_vertex, y)])
            if found is not None:
                gens.append(found)
                level_gens.append(found)
                orbit = _orbit(base_vertex, level_gens)
        fixed.append((base_vertex, base_vertex))
        remaining.remove(base_vertex)
    return PermGroup(nv, sorted(gens))


def _orbit(point: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        b = queue.popleft()
        for x in gens:
            c = x[b]
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def automorphism_group(g: HyperStarGraph, max_vertices: int = MAX_VERTICES) -> PermGroup:
    _check_size(g, max_vertices)
    if not graphs.is_connected(g):
        raise ValueError(f"{g.name} is disconnected")
    return automorphism_group_of(g.adjacency)


def scan_automorphisms(adjacency: Sequence[Sequence[int]], limit: int = 8) -> int:
    """Count automorphisms by testing every vertex permutation."""
    nv = len(adjacency)
    if nv > limit:
        raise CapExceeded(f"full scan limited to {limit} vertices")
    edges = {frozenset((u, w)) for u in range(nv) for w in adjacency[u]}
    return sum(
        all(frozenset((p[u], p[w])) in edges for u, w in map(tuple, edges))
        for p in permutations(range(nv))
    )


# -- transitivity -----------------------------------------------------------

def _orbits_on(items: Sequence[tuple], gens: Sequence[Sequence[int]], act) -> list[set]:
    index = {it: i for i, it in enumerate(items)}
    seen = [False] * len(items)
    out = []
    for i, it in enumerate(items):
        if seen[i]:
            continue
        orb = {it}
        seen[i] = True
        queue = deque([it])
        while queue:
            x = queue.popleft()
            for gen in gens:
                y = act(gen, x)
                j = index[y]
                if not seen[j]:
                    seen[j] = True
                    orb.add(y)
                    queue.append(y)
        out.append(orb)
    return out


def edge_orbits(g: HyperStarGraph, aut: PermGroup) -> list[set]:
    edges = g.edges()
    return _orbits_on(edges, aut.generators, lambda x, e: tuple(sorted((x[e[0]], x[e[1]]))))


def arc_orbits(g: HyperStarGraph, aut: PermGroup) -> list[set]:
    arcs = [(u, w) for u in range(len(g)) for w in g.neighbors(u)]
    return _orbits_on(arcs, aut.generators, lambda x, a: (x[a[0]], x[a[1]]))


def is_vertex_transitive(g: HyperStarGraph, aut: PermGroup | None = None) -> bool:
    aut = automorphism_group(g) if aut is None else aut
    return aut.is_transitive()


def is_edge_transitive(g: HyperStarGraph, aut: PermGroup | None = None) -> bool:
    aut = automorphism_group(g) if aut is None else aut
    return len(edge_orbits(g, aut)) == 1


def is_arc_transitive(g: HyperStarGraph, aut: PermGroup | None = None) -> bool:
    aut = automorphism_group(g) if aut is None else aut
    return len(arc_orbits(g, aut)) == 1


def neighbor_orbits(g: HyperStarGraph, aut: PermGroup, v: int) -> list[set[int]]:
    """Orbits of the vertex stabiliser on the neighbourhood of ``v``."""
    stab = aut.stabilizer(v)
    nbrs = set(g.neighbors(v))
    out = []
    for o in stab.orbits():
        if o & nbrs:
            out.append(o & nbrs)
    return sorted(out, key=lambda o: (len(o), min(o)))


# -- stabilisers ------------------------------------------------------------

def pointwise_stabilizer(g: HyperStarGraph, aut: PermGroup, fixed_vertices=(),
                         fixed_neighborhoods_of=()) -> PermGroup:
    """Elements of ``aut`` fixing each listed vertex and every neighbour of
    each vertex in ``fixed_neighborhoods_of``."""
    points: list[int] = list(fixed_vertices)
    for v in fixed_neighborhoods_of:
        points.append(v)
        points.extend(g.neighbors(v))
    return aut.pointwise_stabilizer(list(dict.fromkeys(points)))


def L(g: HyperStarGraph, aut: PermGroup, *vertices: int) -> PermGroup:
    """``L_v`` for one vertex, ``L_{v,w}`` for two."""
    return pointwise_stabilizer(g, aut, fixed_neighborhoods_of=vertices)


@dataclass(frozen=True)
class StabilizerBound:
    vertex: int
    neighbor: int
    stabilizer_order: int
    degree: int
    min_neighbor_degree: int
    L_vw_order: int

    @property
    def bound(self) -> int:
        return (math.factorial(self.degree) * math.factorial(self.min_neighbor_degree - 1)
                * self.L_vw_order)

    @property
    def holds(self) -> bool:
        return self.stabilizer_order <= self.bound


def stabilizer_bounds(g: HyperStarGraph, aut: PermGroup, v: int) -> list[StabilizerBound]:
    """``|G_v| <= b! (m-1)! |L_{v,w}|`` for each neighbour ``w`` of minimum
    degree ``m``; ``b`` is the degree of ``v``."""
    stab_order = aut.stabilizer(v).order
    m = min(g.degree(w) for w in g.neighbors(v))
    out = []
    for w in g.neighbors(v):
        if g.degree(w) != m:
            continue
        out.append(StabilizerBound(v, w, stab_order, g.degree(v), m, L(g, aut, v, w).order))
    return out


# -- the structured group ---------------------------------------------------

def structured_generators(k: int) -> list[tuple[int, ...]]:
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    n = 2 * k
    gens = [perms.induced(t, n, k) for t in perms.adjacent_transpositions_fixing_one(n)]
    gens.append(perms.theta(n, k))
    return gens


def induced_subgroup(k: int) -> PermGroup:
    """The maps induced by permutations fixing 1."""
    n = 2 * k
    gens = [perms.induced(t, n, k) for t in perms.adjacent_transpositions_fixing_one(n)]
    return PermGroup(len(perms.vertex_identity(n, k)), gens)


def complement_subgroup(k: int) -> PermGroup:
    th = perms.theta(2 * k, k)
    return PermGroup(len(th), [th])


def structured_group(k: int, folded: bool = False) -> PermGroup:
    """Generated by the induced adjacent transpositions (i i+1), 2 <= i < 2k,
    and complementation.  The vertex set, hence the group, is the same for
    the folded graph."""
    gens = structured_generators(k)
    return PermGroup(len(gens[0]), gens)


@dataclass
class EqualityReport:
    k: int
    hs_order: int
    fhs_order: int
    structured_order: int
    hs_equals_fhs: bool
    hs_equals_structured: bool
    fhs_equals_structured: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def certify_equality(k: int, hs_aut: PermGroup | None = None,
                     fhs_aut: PermGroup | None = None) -> EqualityReport:
    hs = graphs.build(2 * k, k)
    fhs = graphs.build(2 * k, k, folded=True)
    a = automorphism_group(hs) if hs_aut is None else hs_aut
    b = automorphism_group(fhs) if fhs_aut is None else fhs_aut
    st = structured_group(k)
    return EqualityReport(
        k=k,
        hs_order=a.order,
        fhs_order=b.order,
        structured_order=st.order,
        hs_equals_fhs=equal_groups(a, b),
        hs_equals_structured=equal_groups(a, st),
        fhs_equals_structured=equal_groups(b, st),
    )


def aut_report(g: HyperStarGraph, aut: PermGroup | None = None) -> dict:
    aut = automorphism_group(g) if aut is None else aut
    out = {
        "graph": {"n": g.n, "k": g.k, "folded": g.folded},
        "aut_order": aut.order,
        "vertex_transitive": is_vertex_transitive(g, aut),
        "edge_transitive": is_edge_transitive(g, aut),
        "arc_transitive": is_arc_transitive(g, aut),
    }
    if g.regular:
        st = structured_group(g.k, g.folded)
        out["structured_order"] = st.order
        out["groups_equal"] = equal_groups(aut, st)
    else:
        out["structured_order"] = None
        out["groups_equal"] = None
    out["L_vw_trivial"] = all(
        L(g, aut, u, w).order == 1
        for u, w in g.edges()
        if not (g.folded and w == g.complement_of(u))
    )
    return out


def aut_report_json(g: HyperStarGraph, aut: PermGroup | None = None) -> str:
    return json.dumps(aut_report(g, aut), sort_keys=True)
