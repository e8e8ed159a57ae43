"""The verification suite behind ``hyperstar verify``.

Each check rebuilds its inputs from scratch and yields a :class:`Check`
naming the claim it certifies.  Expected values are closed forms in k, so
the same code covers every k in range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from . import autsearch, cayley, graphs, perms
from .groups import PermGroup, closure, equal_groups, identify_small, verify_semidirect

CHECK_NAMES = ("metrics", "aut", "transitivity", "cycles", "cayley")
SAMPLED_PATHS = 500
CLOSURE_LIMIT = 10**5


@dataclass(frozen=True)
class Check:
    claim: str
    description: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"[{tag}] {self.claim} {self.description}{extra}"

    def as_dict(self) -> dict:
        return {"claim": self.claim, "description": self.description,
                "passed": self.passed, "detail": self.detail}


@lru_cache(maxsize=None)
def hs(k: int) -> graphs.HyperStarGraph:
    return graphs.build(2 * k, k)


@lru_cache(maxsize=None)
def fhs(k: int) -> graphs.HyperStarGraph:
    return graphs.build(2 * k, k, folded=True)


@lru_cache(maxsize=None)
def aut(k: int, folded: bool) -> PermGroup:
    return autsearch.automorphism_group(fhs(k) if folded else hs(k))


def clear_caches() -> None:
    for f in (hs, fhs, aut):
        f.cache_clear()


def aut_formula(k: int) -> int:
    return 2 * factorial(2 * k - 1)


# -- metrics ----------------------------------------------------------------

def metric_checks(k: int) -> Iterator[Check]:
    g, f = hs(k), fhs(k)
    n = 2 * k
    yield Check("hs-size", f"{g.name} has C({n},{k}) = {comb(n, k)} vertices and "
                f"{k * comb(n, k) // 2} edges",
                len(g) == comb(n, k) and g.num_edges == k * comb(n, k) // 2)
    yield Check("fhs-degree", f"{f.name} is {k + 1}-regular with {f.num_edges} edges",
                all(f.degree(v) == k + 1 for v in range(len(f)))
                and f.num_edges == (k + 1) * comb(n, k) // 2)
    p1, p2 = graphs.bipartition(f)
    crossing = all((u in p1) != (w in p1) for u, w in f.edges())
    yield Check("bipartite", f"{f.name} parts have {comb(n - 1, k - 1)} vertices each and "
                "every edge crosses", len(p1) == len(p2) == comb(n - 1, k - 1) and crossing)
    gh, gf = graphs.girth(g), graphs.girth(f)
    yield Check("girth", f"girth({g.name}) = 6", gh == 6, f"got {gh}")
    yield Check("girth", f"girth({f.name}) = 4", gf == 4, f"got {gf}")
    dh, df = graphs.diameter(g), graphs.diameter(f)
    yield Check("diameter", f"diameter({g.name}) = {2 * k - 1}", dh == 2 * k - 1, f"got {dh}")
    yield Check("diameter", f"diameter({f.name}) = {k}", df == k, f"got {df}")
    ec = graphs.edge_connectivity(f)
    yield Check("edge-connectivity", f"edge connectivity of {f.name} = {k + 1}", ec == k + 1,
                f"got {ec}")


# -- automorphism groups ----------------------------------------------------

def aut_checks(k: int) -> Iterator[Check]:
    a, b = aut(k, False), aut(k, True)
    g = hs(k)
    expected = aut_formula(k)
    yield Check("aut-order", f"|Aut({g.name})| = 2*(2k-1)! = {expected}", a.order == expected,
                f"got {a.order}")
    st = autsearch.structured_group(k)
    yield Check("aut-structure", f"Aut({g.name}) equals the group of induced maps and "
                "complementation", equal_groups(a, st))
    n_grp = autsearch.induced_subgroup(k)
    q_grp = autsearch.complement_subgroup(k)
    ok = (n_grp.order == factorial(2 * k - 1) and q_grp.order == 2
          and verify_semidirect(a, n_grp, q_grp))
    yield Check("semidirect", f"Aut({g.name}) = N x| Q with |N| = {factorial(2 * k - 1)}, |Q| = 2",
                ok)
    if a.order <= CLOSURE_LIMIT:
        elems = a.elements()
        failures = sum(perms.decompose(x, k) is None for x in elems)
        yield Check("decompose", f"every element of Aut({g.name}) factors as "
                    "complement^i * induced", failures == 0, f"{failures} failures")
    eq = equal_groups(a, b)
    if k >= 3:
        yield Check("fhs-aut-equal", f"Aut({fhs(k).name}) = Aut({g.name})",
                    eq and b.order == expected, f"orders {a.order} and {b.order}")
    else:
        yield Check("fhs-aut-exception", f"Aut({fhs(k).name}) != Aut({g.name}) at k=2 "
                    "(12 vs 72)", not eq and a.order == 12 and b.order == 72,
                    f"orders {a.order} and {b.order}")
    for grp, label in ((a, f"Aut({g.name})"), (b, f"Aut({fhs(k).name})"),
                       (st, "structured group"), (n_grp, "induced subgroup")):
        if grp.order <= CLOSURE_LIMIT:
            size = len(closure(grp.generators, grp.degree, CLOSURE_LIMIT))
            yield Check("chain-oracle", f"stabilizer chain order of {label} matches closure",
                        size == grp.order, f"chain {grp.order}, closure {size}")
    if k == 2:
        scanned = autsearch.scan_automorphisms(g.adjacency)
        yield Check("scan-oracle", f"full permutation scan of {g.name} counts {a.order}",
                    scanned == a.order, f"scan {scanned}")
        kind = identify_small(a)
        yield Check("dihedral", f"Aut({g.name}) is dihedral of order 12",
                    kind.kind == "dihedral" and kind.order == 12, str(kind))
    if k >= 3:
        for gr, grp in ((hs(k), a), (fhs(k), b)):
            bad = [(u, w) for u, w in gr.edges()
                   if not (gr.folded and w == gr.complement_of(u))
                   and autsearch.L(gr, grp, u, w).order != 1]
            yield Check("rigidity", f"L_vw is trivial on every non-complement edge of {gr.name}",
                        not bad, f"{len(bad)} nontrivial")
        bounds = [bd for v in range(len(g)) for bd in autsearch.stabilizer_bounds(g, a, v)]
        yield Check("stabilizer-bound", f"|G_v| <= b!(m-1)!|L_vw| at every vertex of {g.name}",
                    all(bd.holds for bd in bounds),
                    f"|G_v| = {bounds[0].stabilizer_order}, bound {bounds[0].bound}")


def transitivity_checks(k: int) -> Iterator[Check]:
    g, f = hs(k), fhs(k)
    a, b = aut(k, False), aut(k, True)
    yield Check("symmetric", f"{g.name} is vertex-, edge- and arc-transitive",
                autsearch.is_vertex_transitive(g, a) and autsearch.is_edge_transitive(g, a)
                and autsearch.is_arc_transitive(g, a))
    yield Check("fhs-vertex-transitive", f"{f.name} is vertex-transitive",
                autsearch.is_vertex_transitive(f, b))
    if k >= 3:
        yield Check("fhs-not-arc-transitive", f"{f.name} is not arc-transitive",
                    not autsearch.is_arc_transitive(f, b))
        v = 0
        orbs = autsearch.neighbor_orbits(f, b, v)
        vc = f.complement_of(v)
        yield Check("fhs-fixed-complement", f"G_v fixes v^c and is transitive on the other "
                    f"{k} neighbours in {f.name}",
                    orbs == sorted([{vc}, set(f.neighbors(v)) - {vc}], key=len))


# -- cycles -----------------------------------------------------------------

def _three_paths(g: graphs.HyperStarGraph, sample: int | None, seed: int) -> list:
    paths = graphs.simple_paths(g, 3)
    if sample is None or sample >= len(paths):
        return paths
    return random.Random(seed).sample(paths, sample)


def cycle_checks(k: int, seed: int = 0) -> Iterator[Check]:
    g, f = hs(k), fhs(k)
    sample = None if k <= 3 else SAMPLED_PATHS
    mode = "all" if sample is None else f"{sample} sampled"
    paths = _three_paths(g, sample, seed)
    bad = [p for p in paths if graphs.cycles_through_path(g, p, 6) != 1]
    yield Check("unique-6-cycle", f"{mode} 3-paths of {g.name} lie in exactly one 6-cycle",
                not bad, f"{len(paths)} paths, {len(bad)} bad")

    if k < 3:
        # FHS(4,2) is K_{3,3}; the folded cycle claims only concern k >= 3
        return
    comp = [f.complement_of(v) for v in range(len(f))]
    edges = [(u, w) for u, w in f.edges() if w != comp[u]]
    bad = [e for e in edges if graphs.cycles_through_path(f, e, 4) != 1]
    yield Check("unique-4-cycle", f"non-complement edges of {f.name} lie in exactly one 4-cycle",
                not bad, f"{len(edges)} edges, {len(bad)} bad")
    comp_edges = [(u, comp[u]) for u in range(len(f)) if u < comp[u]]
    counts = {graphs.cycles_through_path(f, e, 4) for e in comp_edges}
    yield Check("complement-4-cycles", f"complement edges of {f.name} lie in {k} 4-cycles",
                counts == {k}, f"counts {sorted(counts)}")

    fpaths = folded_three_paths(f)
    if sample is not None and len(fpaths) > sample:
        fpaths = random.Random(seed + 1).sample(fpaths, sample)
    counts = [graphs.cycles_through_path(f, p, 6) for p in fpaths]
    bad = sum(c != 1 for c in counts)
    yield Check("fhs-unique-6-cycle", f"{mode} 3-paths u-w-v-v^c (u != w^c) of {f.name} lie in "
                "exactly one 6-cycle", bad == 0,
                f"{len(fpaths)} paths, {bad} bad, counts {sorted(set(counts))}")
    yield from _induced_edge_checks(f, comp)


def folded_three_paths(f: graphs.HyperStarGraph) -> list[tuple[int, ...]]:
    """3-paths u-w-v-v^c of a folded graph with u != w^c."""
    comp = [f.complement_of(v) for v in range(len(f))]
    return [p for p in graphs.simple_paths(f, 3) if p[3] == comp[p[2]] and p[0] != comp[p[1]]]


def induced_edge_count(g: graphs.HyperStarGraph, v: int, w: int,
                       neighborhoods: graphs.HyperStarGraph | None = None) -> int:
    """Edges of ``g`` induced on N(v) | N(w) minus {v, w}.  Neighbourhoods
    are taken in ``neighborhoods`` (default ``g`` itself)."""
    nb = g if neighborhoods is None else neighborhoods
    region = (set(nb.neighbors(v)) | set(nb.neighbors(w))) - {v, w}
    return sum(1 for x, y in g.edges() if x in region and y in region)


def _induced_edge_checks(f: graphs.HyperStarGraph, comp: list[int]) -> Iterator[Check]:
    """For v in the first part: the region around a non-complement edge spans
    one edge (v^c w^c), the region around {v, v^c} spans k.  Restricting to
    unfolded neighbourhoods the first region spans none."""
    k = f.k
    h = hs(k)
    p1 = [v for v in range(len(f)) if f.in_first_part(v)]
    pairs = [(v, w) for v in p1 for w in f.neighbors(v) if w != comp[v]]
    folded_counts = {induced_edge_count(f, v, w) for v, w in pairs}
    unfolded_counts = {induced_edge_count(f, v, w, h) for v, w in pairs}
    with_comp = {induced_edge_count(f, v, comp[v]) for v in p1}
    yield Check("induced-edges", f"in {f.name}, N(v)|N(v^c)-{{v,v^c}} spans {k} edges while "
                "N(v)|N(w)-{v,w} spans 1 (0 with unfolded neighbourhoods) for w != v^c",
                with_comp == {k} and folded_counts == {1} and unfolded_counts == {0},
                f"complement {sorted(with_comp)}, other {sorted(folded_counts)}, "
                f"unfolded {sorted(unfolded_counts)}")


# -- Cayley -----------------------------------------------------------------

def cayley_checks(k: int, cap: int = cayley.DEFAULT_SEARCH_CAP) -> Iterator[Check]:
    g, f = hs(k), fhs(k)
    if k == 2:
        vh = cayley.is_cayley(g, aut(k, False), cap)
        vf = cayley.is_cayley(f, aut(k, True), cap)
        kh = {(kd.kind, kd.order) for kd in vh.witness_kinds}
        kf = {(kd.kind, kd.abelian, kd.order) for kd in vf.witness_kinds}
        yield Check("cayley-k2", f"{g.name} is Cayley with a cyclic regular subgroup of order 6",
                    vh.is_cayley and ("cyclic", 6) in kh, ", ".join(sorted(set(map(str, vh.witness_kinds)))))
        yield Check("cayley-k2", f"{f.name} is Cayley with a nonabelian regular subgroup of order 6",
                    vf.is_cayley and any(not ab and o == 6 for _, ab, o in kf),
                    ", ".join(sorted(set(map(str, vf.witness_kinds)))))
        return
    filt = cayley.divisibility_filter(k)
    if k == 3:
        vh = cayley.is_cayley(g, aut(k, False), cap)
        vf = cayley.is_cayley(f, aut(k, True), cap)
        yield Check("not-cayley", f"{g.name} not Cayley: {vh.method}",
                    not vh.is_cayley and vh.exhaustive)
        yield Check("not-cayley", f"{f.name} not Cayley: {vf.method}",
                    not vf.is_cayley and vf.exhaustive and vf.is_cayley == vh.is_cayley)
        yield Check("involutions", "all 25 involutions fixing 1 fix a vertex of HS(6,3)",
                    cayley.involution_fixed_vertex_check()
                    and len(perms.involutions_fixing_one(6)) == 25)
        yield Check("filter", "divisibility filter is inconclusive at k=3", filt.passes,
                    filt.reason())
        return
    yield Check("filter", f"divisibility filter rules out a regular subgroup at k={k}",
                not filt.passes and not filt.k_condition, filt.reason())


def filter_table_check(lo: int = 4, hi: int = 10) -> Check:
    failing = [k for k in range(lo, hi + 1) if not cayley.divisibility_filter(k).passes]
    agree = all(cayley.divisibility_filter(k).passes == ((k + 1) % (k - 1) == 0)
                for k in range(3, hi + 1))
    return Check("filter", f"divisibility filter fails for every k in {lo}..{hi}",
                 failing == list(range(lo, hi + 1)) and agree)


RUNNERS = {
    "metrics": metric_checks,
    "aut": aut_checks,
    "transitivity": transitivity_checks,
    "cycles": cycle_checks,
    "cayley": cayley_checks,
}


def run(ks, which=CHECK_NAMES, cayley_cap: int = cayley.DEFAULT_SEARCH_CAP) -> list[Check]:
    out: list[Check] = []
    for k in ks:
        for name in which:
            if name == "cayley":
                out.extend(cayley_checks(k, cayley_cap))
            else:
                out.extend(RUNNERS[name](k))
    if "cayley" in which:
        out.append(filter_table_check())
    return out
