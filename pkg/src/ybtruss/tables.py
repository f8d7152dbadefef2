"""Binary operation tables on {0, ..., m-1}: associativity, identities, inverses."""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence

Table = tuple[tuple[int, ...], ...]


def as_table(rows, m: int) -> Table:
    t = tuple(tuple(int(v) for v in row) for row in rows)
    if len(t) != m or any(len(row) != m for row in t):
        raise ValueError(f"operation table must be {m}x{m}")
    for a, row in enumerate(t):
        for b, v in enumerate(row):
            if not 0 <= v < m:
                raise ValueError(f"entry [{a}][{b}] = {v} out of range [0, {m})")
    return t


def assoc_witness(t: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int]]:
    m = len(t)
    for a, b, c in product(range(m), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return (a, b, c)
    return None


def identity_element(t: Sequence[Sequence[int]]) -> Optional[int]:
    m = len(t)
    for e in range(m):
        if all(t[e][x] == x and t[x][e] == x for x in range(m)):
            return e
    return None


def inverses(t: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Two-sided inverses if ``t`` is a group table, else None."""
    if assoc_witness(t) is not None:
        return None
    e = identity_element(t)
    if e is None:
        return None
    m = len(t)
    inv = []
    for a in range(m):
        cands = [b for b in range(m) if t[a][b] == e and t[b][a] == e]
        if not cands:
            return None
        inv.append(cands[0])
    return tuple(inv)


def is_group(t) -> bool:
    return inverses(t) is not None


def left_cancel_witness(t) -> Optional[tuple[int, int, int]]:
    """(a, b, c) with a+b = a+c and b != c, or None."""
    m = len(t)
    for a in range(m):
        seen = {}
        for b in range(m):
            v = t[a][b]
            if v in seen:
                return (a, seen[v], b)
            seen[v] = b
    return None


def is_right_cancellative(t) -> bool:
    m = len(t)
    return all(len({t[a][b] for a in range(m)}) == m for b in range(m))


def cyclic(m: int) -> Table:
    return tuple(tuple((a + b) % m for b in range(m)) for a in range(m))


def from_perm_group(elements: Sequence[Sequence[int]]) -> Table:
    """Multiplication table of a list of permutations, a*b = a o b."""
    elts = [tuple(p) for p in elements]
    index = {p: i for i, p in enumerate(elts)}
    return tuple(tuple(index[tuple(a[x] for x in b)] for b in elts) for a in elts)
