"""Permutation groups on points 0..degree-1 via a deterministic stabilizer
chain (Schreier-Sims).

Group elements are tuples: ``g[i]`` is the image of point ``i``.  Products
compose right to left, ``mul(g, h)[i] == g[h[i]]``.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

Perm = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 10**6


class CapExceeded(RuntimeError):
    """A computation was asked to enumerate more than its configured cap."""


def element_cap() -> int:
    return int(os.environ.get("HYPERSTAR_CAP_ORDER", DEFAULT_ELEMENT_CAP))


def mul(g: Perm, h: Perm) -> Perm:
    return tuple(map(g.__getitem__, h))


def inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def ident(degree: int) -> Perm:
    return tuple(range(degree))


def is_identity(g: Perm) -> bool:
    return g == _ident(len(g))


@lru_cache(maxsize=64)
def _ident(degree: int) -> Perm:
    return tuple(range(degree))


def perm_order(g: Perm) -> int:
    seen = [False] * len(g)
    order = 1
    for i in range(len(g)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        order = order * length // gcd(order, length)
    return order


def power(g: Perm, e: int) -> Perm:
    result = ident(len(g))
    base = g
    while e:
        if e & 1:
            result = mul(base, result)
        base = mul(base, base)
        e >>= 1
    return result


def fixed_points(g: Perm) -> list[int]:
    return [i for i, x in enumerate(g) if i == x]


class _Level:
    __slots__ = ("point", "gens", "transversal", "inverses", "tested")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        # orbit point -> element mapping self.point to it; entries never change
        # once set, so Schreier generators already sifted stay valid
        e = ident(degree)
        self.transversal: dict[int, Perm] = {point: e}
        self.inverses: dict[int, Perm] = {point: e}
        self.tested: set[tuple[int, int]] = set()

    def add_generator(self, g: Perm) -> None:
        self.gens.append(g)
        trans = self.transversal
        queue = deque(trans)
        while queue:
            b = queue.popleft()
            ub = trans[b]
            for s in self.gens:
                c = s[b]
                if c not in trans:
                    u = mul(s, ub)
                    trans[c] = u
                    self.inverses[c] = inv(u)
                    queue.append(c)


class PermGroup:
    """Finitely generated permutation group with exact order and membership.

    ``base_prefix`` forces the first base points, which is how point
    stabilisers are read off the chain.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (),
                 base_prefix: Sequence[int] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
            if sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation")
            gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._levels: list[_Level] = [_Level(p, degree) for p in base_prefix]
        self._stabilizers: dict[tuple[int, ...], PermGroup] = {}
        self._schreier_sims()

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]], degree: int | None = None,
                        base_prefix: Sequence[int] = ()) -> "PermGroup":
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = len(gens[0])
        return cls(degree, gens, base_prefix)

    # -- construction -------------------------------------------------------

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        for j in range(start, len(self._levels)):
            lvl = self._levels[j]
            u_inv = lvl.inverses.get(g[lvl.point])
            if u_inv is None:
                return g, j
            g = mul(u_inv, g)
        return g, len(self._levels)

    def _new_base_point(self, g: Perm) -> int:
        for i, x in enumerate(g):
            if i != x:
                return i
        raise AssertionError("identity has no moved point")

    def _schreier_sims(self) -> None:
        levels = self._levels
        degree = self.degree
        for g in self.generators:
            if is_identity(g):
                continue
            if all(g[l.point] == l.point for l in levels):
                levels.append(_Level(self._new_base_point(g), degree))
            # g belongs to the stabiliser of each base point up to the first it moves
            for lvl in levels:
                lvl.add_generator(g)
                if g[lvl.point] != lvl.point:
                    break

        i = len(levels) - 1
        while i >= 0:
            lvl = levels[i]
            restart = None
            for b in list(lvl.transversal):
                ub = lvl.transversal[b]
                for si in range(len(lvl.gens)):
                    if (b, si) in lvl.tested:
                        continue
                    lvl.tested.add((b, si))
                    s = lvl.gens[si]
                    h = mul(lvl.inverses[s[b]], mul(s, ub))
                    if is_identity(h):
                        continue
                    residue, j = self._strip(h, i + 1)
                    if is_identity(residue):
                        continue
                    if j == len(levels):
                        levels.append(_Level(self._new_base_point(residue), degree))
                    for l in range(i + 1, j + 1):
                        levels[l].add_generator(residue)
                    restart = j
                    break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    # -- queries ------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [l.point for l in self._levels]

    @property
    def transversal_sizes(self) -> list[int]:
        return [len(l.transversal) for l in self._levels]

    @property
    def order(self) -> int:
        out = 1
        for l in self._levels:
            out *= len(l.transversal)
        return out

    def __len__(self) -> int:
        return self.order

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree or sorted(g) != list(range(self.degree)):
            return False
        residue, _ = self._strip(g, 0)
        return is_identity(residue)

    __contains__ = contains

    def strong_generators(self, level: int = 0) -> list[Perm]:
        """Generators of the pointwise stabiliser of the first ``level``
        base points."""
        if level >= len(self._levels):
            return []
        return list(self._levels[level].gens)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        points = tuple(dict.fromkeys(points))
        if list(self.base[: len(points)]) == list(points):
            return PermGroup(self.degree, self.strong_generators(len(points)))
        # peel one point at a time, memoising each prefix; each step rebases
        # a smaller group
        cache = self._stabilizers
        group, start = self, 0
        for i in range(len(points), 0, -1):
            hit = cache.get(points[:i])
            if hit is not None:
                group, start = hit, i
                break
        for i in range(start, len(points)):
            if group.order > 1:
                p = points[i]
                if group.base[:1] != [p]:
                    group = PermGroup(group.degree, group.generators, base_prefix=[p])
                group = PermGroup(group.degree, group.strong_generators(1))
            cache[points[: i + 1]] = group
        return group

    def stabilizer(self, point: int) -> "PermGroup":
        return self.pointwise_stabilizer([point])

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            b = queue.popleft()
            for s in self.generators:
                c = s[b]
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        return seen

    def orbits(self) -> list[set[int]]:
        out = []
        seen: set[int] = set()
        for p in range(self.degree):
            if p not in seen:
                o = self.orbit(p)
                seen |= o
                out.append(o)
        return out

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def is_semiregular(self) -> bool:
        """Every non-identity element is fixed-point-free, i.e. each point
        stabiliser is trivial."""
        return all(self.order == len(o) for o in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order == self.degree

    def elements(self, cap: int | None = None) -> list[Perm]:
        """All elements, in a deterministic order."""
        cap = element_cap() if cap is None else cap
        if self.order > cap:
            raise CapExceeded(f"group of order {self.order} exceeds element cap {cap}")
        out = [ident(self.degree)]
        for lvl in reversed(self._levels):
            reps = [lvl.transversal[b] for b in sorted(lvl.transversal)]
            out = [mul(u, g) for u in reps for g in out]
        return out

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def report(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "n_generators": len(self.generators),
            "transitive": self.is_transitive(),
            "semiregular": self.is_semiregular(),
            "regular": self.is_regular(),
            "orbits": sorted((len(o) for o in self.orbits()), reverse=True),
        }

    def report_json(self) -> str:
        return json.dumps(self.report(), sort_keys=True)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={len(self.generators)})"


def from_generators(gens: Sequence[Sequence[int]], degree: int | None = None) -> PermGroup:
    return PermGroup.from_generators(gens, degree)


def closure(gens: Sequence[Sequence[int]], degree: int, cap: int = 10**5) -> set[Perm]:
    """Every element of ``<gens>`` by breadth-first multiplication; the
    independent check on chain orders."""
    e = ident(degree)
    gens = [tuple(g) for g in gens]
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(s, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
                queue.append(y)
    return seen


def equal_groups(g: PermGroup, h: PermGroup) -> bool:
    return (
        g.degree == h.degree
        and g.order == h.order
        and all(h.contains(x) for x in g.generators)
        and all(g.contains(x) for x in h.generators)
    )


def is_normal(n: PermGroup, g: PermGroup) -> bool:
    """``n`` is a normal subgroup of ``g``."""
    if not n.is_subgroup_of(g):
        return False
    return all(n.contains(mul(mul(x, y), inv(x))) for x in g.generators for y in n.generators)


def intersection_is_trivial(n: PermGroup, q: PermGroup) -> bool:
    """Checks ``n & q == 1`` by scanning the smaller group's elements."""
    small, big = (n, q) if n.order <= q.order else (q, n)
    return all(is_identity(x) or not big.contains(x) for x in small.elements())


def verify_semidirect(g: PermGroup, n: PermGroup, q: PermGroup) -> bool:
    """``g`` is the internal semidirect product of ``n`` by ``q``."""
    for sub in (n, q):
        if not sub.is_subgroup_of(g):
            raise ValueError("supplied subgroup is not contained in the group")
    return (
        is_normal(n, g)
        and intersection_is_trivial(n, q)
        and n.order * q.order == g.order
    )


@dataclass(frozen=True)
class GroupKind:
    kind: str  # "cyclic", "dihedral", "symmetric3", "other"
    order: int
    abelian: bool

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Z{self.order}"
        if self.kind == "dihedral":
            return f"D{self.order}"
        if self.kind == "symmetric3":
            return "Sym(3)"
        return f"other({self.order})"


def identify_small(g: PermGroup, cap: int = 10**4) -> GroupKind:
    """Recognise cyclic and dihedral groups; ``D_6`` is reported as Sym(3).

    Dihedral of order 2m: some element r of order m and an involution s
    outside <r> with s r s = r^-1.
    """
    order = g.order
    if order > cap:
        raise CapExceeded(f"order {order} exceeds identification cap {cap}")
    abelian = g.is_abelian()
    elems = g.elements()
    orders = {x: perm_order(x) for x in elems}
    if any(o == order for o in orders.values()):
        return GroupKind("cyclic", order, True)
    if order % 2 == 0 and order >= 4:
        m = order // 2
        involutions = [x for x, o in orders.items() if o == 2]
        for r in elems:
            if orders[r] != m:
                continue
            r_inv = inv(r)
            cyc = {power(r, e) for e in range(m)}
            for s in involutions:
                if s not in cyc and mul(mul(s, r), s) == r_inv:
                    kind = "symmetric3" if order == 6 else "dihedral"
                    return GroupKind(kind, order, abelian)
    return GroupKind("other", order, abelian)
