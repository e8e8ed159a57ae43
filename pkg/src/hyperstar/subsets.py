"""k-subsets of {1..n} stored as integer bitmasks.

Element ``i`` lives at bit ``i - 1``.  Subsets of a fixed weight are indexed
by their colexicographic rank, so ``{1, .., k}`` has rank 0.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_N = 62


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"ground set size must be in 1..{MAX_N}, got {n}")


def weight(mask: int) -> int:
    return bin(mask).count("1")


def from_elements(elements: Iterable[int], n: int) -> int:
    """Mask of a set of 1-based elements."""
    _check_n(n)
    mask = 0
    for x in elements:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside 1..{n}")
        mask |= 1 << (x - 1)
    return mask


def elements(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def contains(mask: int, x: int) -> bool:
    return bool(mask >> (x - 1) & 1)


def rank(mask: int, n: int, k: int) -> int:
    """Colex rank of a weight-``k`` subset of {1..n}."""
    _check_n(n)
    if mask >> n:
        raise ValueError(f"mask {mask:#x} has bits beyond position {n}")
    if weight(mask) != k:
        raise ValueError(f"weight mismatch: expected {k}, got {weight(mask)}")
    r = 0
    for i, x in enumerate(elements(mask), start=1):
        r += comb(x - 1, i)
    return r


def unrank(r: int, n: int, k: int) -> int:
    """Inverse of :func:`rank`."""
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"weight {k} outside 0..{n}")
    if not 0 <= r < comb(n, k):
        raise ValueError(f"rank {r} outside [0, {comb(n, k)})")
    mask = 0
    x = n
    for i in range(k, 0, -1):
        # largest x with C(x-1, i) <= r
        while comb(x - 1, i) > r:
            x -= 1
        r -= comb(x - 1, i)
        mask |= 1 << (x - 1)
        x -= 1
    return mask


@lru_cache(maxsize=None)
def all_subsets(n: int, k: int) -> tuple[int, ...]:
    """Every weight-``k`` mask, indexed by colex rank."""
    return tuple(unrank(r, n, k) for r in range(comb(n, k)))


@lru_cache(maxsize=None)
def rank_table(n: int, k: int) -> dict[int, int]:
    return {m: r for r, m in enumerate(all_subsets(n, k))}


def complement(mask: int, n: int) -> int:
    _check_n(n)
    return ((1 << n) - 1) & ~mask


def to_bitstring(mask: int, n: int) -> str:
    """Characteristic sequence; position 1 is the leftmost symbol."""
    _check_n(n)
    if mask >> n:
        raise ValueError(f"mask {mask:#x} has bits beyond position {n}")
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def from_bitstring(bits: str | Sequence[int]) -> tuple[int, int]:
    """Parse a characteristic sequence, returning ``(mask, n)``."""
    symbols = [str(b) for b in bits]
    n = len(symbols)
    _check_n(n)
    mask = 0
    for i, s in enumerate(symbols):
        if s == "1":
            mask |= 1 << i
        elif s != "0":
            raise ValueError(f"bad symbol {s!r} at position {i + 1}")
    return mask, n


def label(mask: int, n: int) -> str:
    """Text form used in figures: ``123`` when n <= 9, else ``1,2,10``."""
    sep = "" if n <= 9 else ","
    return sep.join(str(x) for x in elements(mask))


def parse_label(text: str, n: int) -> int:
    text = text.strip().strip("{}")
    if "," in text or n > 9:
        parts = [int(p) for p in text.split(",") if p.strip()]
    else:
        parts = [int(c) for c in text]
    return from_elements(parts, n)


def bitstring_neighbors(bits: str) -> Iterator[str]:
    """Neighbours under the exchange rule: swap the first symbol with a
    different symbol elsewhere."""
    first = bits[0]
    for i in range(1, len(bits)):
        if bits[i] != first:
            yield bits[i] + bits[1:i] + first + bits[i + 1:]
