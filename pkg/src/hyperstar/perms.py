"""Ground-set permutations and the vertex maps they induce.

A :class:`Permutation` acts on the 1-based ground set {1..n}.  Vertex maps
are plain tuples over vertex ranks (``vp[r]`` is the image of rank ``r``);
that is also the point-permutation format used by :mod:`hyperstar.groups`.
"""

from __future__ import annotations

import random
from itertools import permutations
from math import lcm
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import subsets

VertexPermutation = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return cycle_notation(self)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        image = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                image[a - 1] = b
        return cls(tuple(image))

    def order(self) -> int:
        return lcm(1, *(len(c) for c in cycles(self)))

    def apply_to_mask(self, mask: int) -> int:
        out = 0
        for x in subsets.elements(mask):
            out |= 1 << (self.image[x - 1] - 1)
        return out


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.image[x - 1] for x in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.image, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest element."""
    seen = set()
    out = []
    for i in range(1, p.n + 1):
        if i in seen or p(i) == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p(i)
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p(j)
        out.append(tuple(cyc))
    return out


def cycle_notation(p: Permutation) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def parse_cycles(text: str, n: int) -> Permutation:
    text = text.strip()
    if text in ("", "()"):
        return identity(n)
    cyc = []
    for chunk in text.strip("()").split(")("):
        cyc.append([int(x) for x in chunk.replace(",", " ").split()])
    return Permutation.from_cycles(n, *cyc)


def transposition(n: int, a: int, b: int) -> Permutation:
    return Permutation.from_cycles(n, (a, b))


def random_fixing_one(n: int, rng: random.Random) -> Permutation:
    rest = list(range(2, n + 1))
    rng.shuffle(rest)
    return Permutation((1, *rest))


def fixing_one(n: int) -> Iterator[Permutation]:
    """All permutations of {1..n} with 1 as a fixed point."""
    for rest in permutations(range(2, n + 1)):
        yield Permutation((1, *rest))


# -- vertex maps ------------------------------------------------------------

def vertex_identity(n: int, k: int) -> VertexPermutation:
    return tuple(range(len(subsets.all_subsets(n, k))))


def induced(sigma: Permutation, n: int, k: int) -> VertexPermutation:
    """Vertex map ``v -> {sigma(x) : x in v}`` on weight-k subsets."""
    if sigma.n != n:
        raise ValueError(f"permutation acts on 1..{sigma.n}, need 1..{n}")
    masks = subsets.all_subsets(n, k)
    index = subsets.rank_table(n, k)
    bit_image = [1 << (x - 1) for x in sigma.image]
    out = []
    for m in masks:
        image = 0
        i = 0
        while m:
            if m & 1:
                image |= bit_image[i]
            m >>= 1
            i += 1
        out.append(index[image])
    return tuple(out)


def theta(n: int, k: int) -> VertexPermutation:
    """Complementation ``v -> X - v``."""
    if n != 2 * k:
        raise ValueError(f"complementation needs n = 2k, got n={n}, k={k}")
    masks = subsets.all_subsets(n, k)
    index = subsets.rank_table(n, k)
    return tuple(index[subsets.complement(m, n)] for m in masks)


def compose_vertex(p: VertexPermutation, q: VertexPermutation) -> VertexPermutation:
    return tuple(p[i] for i in q)


def is_automorphism(vp: VertexPermutation, adjacency: Sequence[Sequence[int]]) -> bool:
    if sorted(vp) != list(range(len(adjacency))):
        return False
    nbr_sets = [set(a) for a in adjacency]
    return all(
        len(adjacency[u]) == len(adjacency[vp[u]])
        and all(vp[w] in nbr_sets[vp[u]] for w in adjacency[u])
        for u in range(len(adjacency))
    )


@dataclass(frozen=True)
class StructuredAut:
    """The vertex map ``theta**flip`` applied after the map induced by
    ``sigma``; ``sigma`` must fix 1."""

    sigma: Permutation
    flip: int = 0

    def __post_init__(self):
        if self.sigma(1) != 1:
            raise ValueError(f"sigma must fix 1, got {self.sigma}")
        if self.flip not in (0, 1):
            raise ValueError(f"flip must be 0 or 1, got {self.flip}")

    def __mul__(self, other: "StructuredAut") -> "StructuredAut":
        # complementation commutes with every induced map, since
        # sigma(X - v) = X - sigma(v); so the product renormalises trivially.
        return StructuredAut(compose(self.sigma, other.sigma), self.flip ^ other.flip)

    def __str__(self) -> str:
        return f"{self.sigma}{' theta' if self.flip else ''}"


def realize(a: StructuredAut, k: int) -> VertexPermutation:
    n = 2 * k
    vp = induced(a.sigma, n, k)
    if a.flip:
        vp = compose_vertex(theta(n, k), vp)
    return vp


def _witness_pairs(n: int, k: int) -> list[tuple[int, int]]:
    """For each ground element x, two k-subsets meeting exactly in {x}."""
    out = []
    for x in range(1, n + 1):
        rest = [y for y in range(1, n + 1) if y != x]
        a = subsets.from_elements([x, *rest[: k - 1]], n)
        b = subsets.from_elements([x, *rest[k - 1: 2 * k - 2]], n)
        out.append((a, b))
    return out


def decompose(vp: VertexPermutation, k: int) -> StructuredAut | None:
    """Recover ``(sigma, flip)`` with ``realize(...) == vp``; ``None`` when
    ``vp`` is not of that form."""
    n = 2 * k
    masks = subsets.all_subsets(n, k)
    index = subsets.rank_table(n, k)
    if len(vp) != len(masks):
        return None
    base = index[subsets.from_elements(range(1, k + 1), n)]
    flip = 0 if masks[vp[base]] & 1 else 1
    if flip:
        th = theta(n, k)
        vp_n = compose_vertex(th, vp)
    else:
        vp_n = tuple(vp)
    image = []
    for a, b in _witness_pairs(n, k):
        common = masks[vp_n[index[a]]] & masks[vp_n[index[b]]]
        if subsets.weight(common) != 1:
            return None
        image.append(subsets.elements(common)[0])
    if image[0] != 1 or sorted(image) != list(range(1, n + 1)):
        return None
    result = StructuredAut(Permutation(tuple(image)), flip)
    if realize(result, k) != tuple(vp):
        return None
    return result


def involutions_fixing_one(n: int) -> list[Permutation]:
    """Order-2 permutations of {1..n} that fix 1."""
    return [p for p in fixing_one(n) if p.order() == 2]


def adjacent_transpositions_fixing_one(n: int) -> list[Permutation]:
    """(i i+1) for 2 <= i <= n-1; they generate the stabiliser of 1."""
    return [transposition(n, i, i + 1) for i in range(2, n)]
