"""Cayley recognition: an exhaustive search for regular subgroups of the
automorphism group, the binomial divisibility filter for k >= 3, and the
fixed-vertex check on involutions of HS(6,3)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import autsearch, perms
from .graphs import HyperStarGraph
from .groups import (
    CapExceeded,
    GroupKind,
    Perm,
    PermGroup,
    identify_small,
    ident,
    is_identity,
    mul,
    perm_order,
)

DEFAULT_SEARCH_CAP = 10**4


@dataclass(frozen=True)
class FilterResult:
    k: int
    binomial_lhs: int  # C(2k-1, k-2)
    binomial_rhs: int  # C(2k, k) / 2
    divides: bool
    k_condition: bool  # (k - 1) | (k + 1)

    @property
    def passes(self) -> bool:
        return self.divides

    def reason(self) -> str:
        verb = "divides" if self.divides else "does not divide"
        return f"C({2 * self.k - 1},{self.k - 2}) = {self.binomial_lhs} {verb} {self.binomial_rhs}"

    def as_dict(self) -> dict:
        return {
            "binomial_lhs": self.binomial_lhs,
            "binomial_rhs": self.binomial_rhs,
            "divides": self.divides,
            "k_condition": self.k_condition,
        }


def divisibility_filter(k: int) -> FilterResult:
    """Necessary condition for a regular subgroup of Aut(HS(2k,k)).

    Half of a regular subgroup preserves the parts; its ground-set action on
    {2..2k} would be (k-1)-homogeneous, hence also (k-2)-homogeneous since
    2(k-1) <= 2k-1, so C(2k-1, k-2) must divide C(2k, k) / 2.  Failing
    means no regular subgroup exists.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    lhs = comb(2 * k - 1, k - 2)
    rhs = comb(2 * k, k) // 2
    return FilterResult(k, lhs, rhs, rhs % lhs == 0, (k + 1) % (k - 1) == 0)


def fixed_vertices_of(sigma: perms.Permutation, k: int) -> list[int]:
    vp = perms.induced(sigma, 2 * k, k)
    return [v for v, w in enumerate(vp) if v == w]


def involution_fixed_vertex_check() -> bool:
    """Every involution of {1..6} fixing 1 fixes a vertex of HS(6,3)."""
    return all(fixed_vertices_of(s, 3) for s in perms.involutions_fixing_one(6))


# -- regular subgroup search ------------------------------------------------

def _close(elements: set[Perm], g: Perm, limit: int) -> set[Perm] | None:
    """``<elements, g>`` as an element set, or ``None`` as soon as it grows
    past ``limit`` or picks up a non-identity element with a fixed point."""
    out = set(elements)
    frontier = [g] if g not in out else []
    gens = [g] + [x for x in elements if not is_identity(x)]
    while frontier:
        x = frontier.pop()
        if x in out:
            continue
        if not is_identity(x) and any(i == y for i, y in enumerate(x)):
            return None
        out.add(x)
        if len(out) > limit:
            return None
        for s in gens:
            for y in (mul(s, x), mul(x, s)):
                if y not in out:
                    frontier.append(y)
    return out


@dataclass
class SearchResult:
    witnesses: list[PermGroup]
    nodes: int

    @property
    def witness(self) -> PermGroup | None:
        return self.witnesses[0] if self.witnesses else None


def find_regular_subgroup(group: PermGroup, nv: int | None = None,
                          cap: int = DEFAULT_SEARCH_CAP,
                          part_of: Sequence[bool] | None = None) -> PermGroup | None:
    return search_regular_subgroup(group, nv, cap, part_of).witness


def search_regular_subgroup(group: PermGroup, nv: int | None = None,
                            cap: int = DEFAULT_SEARCH_CAP,
                            part_of: Sequence[bool] | None = None,
                            find_all: bool = False) -> SearchResult:
    """Exhaustive search for subgroups acting regularly on the points.

    A regular subgroup holds exactly one element sending point 0 to each
    point.  The search repeatedly takes the smallest point not yet reached
    from 0, branches over the fixed-point-free elements sending 0 there,
    and closes up; closures that acquire a fixed point or grow past ``nv``
    are cut.  With ``part_of`` (a 2-colouring preserved or swapped by every
    element), a completed subgroup must also split evenly between
    colour-preserving and colour-swapping elements.

    Stops at the first witness unless ``find_all`` is set, in which case
    every regular subgroup is returned once, in discovery order.
    """
    nv = group.degree if nv is None else nv
    if nv != group.degree:
        raise ValueError(f"regular action needs {group.degree} points, got nv={nv}")
    if group.order > cap:
        raise CapExceeded(f"group of order {group.order} exceeds search cap {cap}; "
                          "use the divisibility filter")
    if not group.is_transitive() or group.order % nv:
        return SearchResult([], 0)
    classes: dict[int, list[Perm]] = {v: [] for v in range(nv)}
    for x in group.elements(cap):
        if is_identity(x):
            continue
        if nv % perm_order(x):
            continue
        if any(i == y for i, y in enumerate(x)):
            continue
        classes[x[0]].append(x)
    nodes = 0
    found: dict[frozenset, None] = {}

    def balanced(elems: set[Perm]) -> bool:
        if part_of is None:
            return True
        swaps = sum(part_of[x[0]] != part_of[0] for x in elems)
        return 2 * swaps == len(elems)

    def grow(elems: set[Perm]) -> bool:
        """True once the search may stop."""
        nonlocal nodes
        nodes += 1
        if len(elems) == nv:
            if not balanced(elems):
                raise AssertionError("regular subgroup with unequal part split")
            found.setdefault(frozenset(elems))
            return not find_all
        reached = {x[0] for x in elems}
        target = next(v for v in range(nv) if v not in reached)
        for x in classes[target]:
            closed = _close(elems, x, nv)
            if closed is not None and grow(closed):
                return True
        return False

    grow({ident(nv)})
    witnesses = [PermGroup(nv, sorted(x for x in elems if not is_identity(x)))
                 for elems in found]
    return SearchResult(witnesses, nodes)


def part_split(witness: PermGroup, g: HyperStarGraph) -> tuple[int, int]:
    """Numbers of part-preserving and part-swapping elements."""
    keep = swap = 0
    for x in witness.elements():
        if g.in_first_part(0) == g.in_first_part(x[0]):
            keep += 1
        else:
            swap += 1
    return keep, swap


@dataclass
class CayleyVerdict:
    graph: HyperStarGraph
    is_cayley: bool
    method: str
    witness: PermGroup | None = None
    witness_kind: GroupKind | None = None
    filter_result: FilterResult | None = None
    exhaustive: bool = False
    involution_check: bool | None = None
    # every regular subgroup, when the search enumerated them all
    witness_kinds: list[GroupKind] = field(default_factory=list)

    def __post_init__(self):
        if self.is_cayley:
            w = self.witness
            if w is None or not w.is_regular() or w.order != len(self.graph):
                raise AssertionError("Cayley verdict without a valid regular witness")

    def as_dict(self) -> dict:
        g = self.graph
        return {
            "graph": {"n": g.n, "k": g.k, "folded": g.folded},
            "is_cayley": self.is_cayley,
            "method": self.method,
            "exhaustive": self.exhaustive,
            "witness_order": self.witness.order if self.witness else None,
            "witness_kind": str(self.witness_kind) if self.witness_kind else None,
            "witness_kinds": sorted({str(kd) for kd in self.witness_kinds}),
            "filter": self.filter_result.as_dict() if self.filter_result else None,
            "involution_check": self.involution_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def is_cayley(g: HyperStarGraph, aut: PermGroup | None = None,
              cap: int = DEFAULT_SEARCH_CAP, enumerate_limit: int = 1000) -> CayleyVerdict:
    """Decide whether ``g`` is a Cayley graph.

    Groups within ``cap`` are searched exhaustively; when the group order is
    at most ``enumerate_limit`` every regular subgroup is listed and the
    witness is the first cyclic one if any.  Beyond ``cap``, regular graphs
    with k >= 3 fall back to the divisibility filter; a passing filter there
    is inconclusive and raises.
    """
    filt = divisibility_filter(g.k) if g.regular and g.k >= 3 else None
    involution = involution_fixed_vertex_check() if g.regular and g.k == 3 else None
    if aut is None:
        aut = autsearch.automorphism_group(g)
    if aut.order <= cap:
        part_of = [g.in_first_part(v) for v in range(len(g))] if g.regular else None
        res = search_regular_subgroup(aut, len(g), cap, part_of,
                                      find_all=aut.order <= enumerate_limit)
        if res.witnesses:
            kinds = [identify_small(w) for w in res.witnesses]
            pick = next((i for i, kd in enumerate(kinds) if kd.kind == "cyclic"), 0)
            return CayleyVerdict(g, True, "search", res.witnesses[pick], kinds[pick],
                                 filt, True, involution, kinds)
        method = "exhaustion" + (" + involution argument" if involution else "")
        return CayleyVerdict(g, False, method, None, None, filt, True, involution)
    if filt is not None and not filt.passes:
        return CayleyVerdict(g, False, "divisibility filter", None, None, filt, False, involution)
    raise CapExceeded(f"|Aut({g.name})| = {aut.order} exceeds search cap {cap} "
                      "and no arithmetic certificate applies")
