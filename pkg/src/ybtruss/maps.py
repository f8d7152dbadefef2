"""Finite self-maps of {0, ..., n-1} stored as tuples.

A map ``f`` is a tuple with ``f[i]`` the image of ``i``.  Composition follows
function notation: ``compose(f, g)`` is ``f o g``, i.e. apply ``g`` first.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

FinMap = tuple[int, ...]


def as_map(values: Iterable[int], n: int | None = None) -> FinMap:
    """Coerce to a tuple and check every entry lies in range."""
    f = tuple(int(v) for v in values)
    size = len(f) if n is None else n
    if len(f) != size:
        raise ValueError(f"map has length {len(f)}, expected {size}")
    for i, v in enumerate(f):
        if not 0 <= v < size:
            raise ValueError(f"entry {i} -> {v} out of range [0, {size})")
    return f


def identity(n: int) -> FinMap:
    return tuple(range(n))


def const(n: int, value: int) -> FinMap:
    return (value,) * n


def compose(f: Sequence[int], g: Sequence[int]) -> FinMap:
    return tuple(f[x] for x in g)


def compose_all(maps: Iterable[Sequence[int]], n: int) -> FinMap:
    """Compose left to right: ``compose_all([f, g, h]) == f o g o h``."""
    out = identity(n)
    for f in maps:
        out = compose(out, f)
    return out


def power(f: Sequence[int], k: int) -> FinMap:
    out = identity(len(f))
    for _ in range(k):
        out = compose(f, out)
    return out


def is_bijective(f: Sequence[int]) -> bool:
    return len(set(f)) == len(f)


def inverse(f: Sequence[int]) -> FinMap:
    if not is_bijective(f):
        raise ValueError(f"map {tuple(f)} is not a permutation")
    inv = [0] * len(f)
    for i, v in enumerate(f):
        inv[v] = i
    return tuple(inv)


def is_idempotent(f: Sequence[int]) -> bool:
    return all(f[f[i]] == f[i] for i in range(len(f)))


def cycle_type(f: Sequence[int]) -> tuple:
    """Relabelling invariant of a self-map.

    For a permutation this is the sorted cycle lengths; for a general map the
    sorted (tail length, cycle length) pairs of every point, plus image size.
    """
    n = len(f)
    shape = []
    for x in range(n):
        seen = {}
        y, step = x, 0
        while y not in seen:
            seen[y] = step
            y = f[y]
            step += 1
        shape.append((seen[y], step - seen[y]))
    return (len(set(f)), tuple(sorted(shape)))


def all_perms(n: int) -> list[FinMap]:
    return [tuple(p) for p in permutations(range(n))]


def all_maps(n: int) -> list[FinMap]:
    from itertools import product

    return [tuple(p) for p in product(range(n), repeat=n)]


def cycle_perm(n: int, *cycles: Sequence[int]) -> FinMap:
    """Build a permutation of {0..n-1} from disjoint cycles."""
    f = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            f[x] = cyc[(i + 1) % len(cyc)]
    return as_map(f)
