"""Named small examples used by the tests, the scripts and the data files."""

from __future__ import annotations

from itertools import permutations

from . import maps, tables
from .semitruss import SemiTruss, from_skew_brace
from .solution import Solution


def flip(n: int) -> Solution:
    ident = maps.identity(n)
    return Solution(n, [ident] * n, [ident] * n)


def twisted_flip(tau) -> Solution:
    """r(x, y) = (y, tau(x))."""
    n = len(tau)
    return Solution(n, [maps.identity(n)] * n, [tuple(tau)] * n)


def twist(tau) -> Solution:
    """Involutive r(x, y) = (tau(y), tau(x)) for an involution tau."""
    n = len(tau)
    return Solution(n, [tuple(tau)] * n, [tuple(tau)] * n)


def candc(prime: bool = False) -> Solution:
    """Two-point solution with lam = id, rho_1 = id, rho_0 constant.

    The constant is 0, or 1 for the primed variant.
    """
    c = 1 if prime else 0
    return Solution(2, [(0, 1), (0, 1)], [(c, c), (0, 1)])


def right_projection(n: int = 2) -> Solution:
    """r(x, y) = (y, y)."""
    return Solution(n, [maps.identity(n)] * n, [maps.const(n, y) for y in range(n)])


def circnotgroup() -> SemiTruss:
    """Four-point semitruss with a+b = b, sig_b = const b, lam in {id, (02)(13)}."""
    m = 4
    swap = (2, 3, 0, 1)
    lam = [maps.identity(m), maps.identity(m), swap, swap]
    add = [[b for b in range(m)] for _ in range(m)]
    mul = [[lam[a][b] for b in range(m)] for a in range(m)]
    sig = [maps.const(m, b) for b in range(m)]
    return SemiTruss(m, add, mul, lam, sig)


def right_zero(n: int) -> SemiTruss:
    """a+b = a o b = b, lam = id, sig_a = const a."""
    add = [list(range(n)) for _ in range(n)]
    return SemiTruss(n, add, add, [maps.identity(n)] * n, [maps.const(n, a) for a in range(n)])


def two_element_monoid() -> SemiTruss:
    """{0, 1} under multiplication for both operations; sig_0 = const 0, sig_1 = id."""
    t = [[0, 0], [0, 1]]
    return SemiTruss(2, t, t, [(0, 1), (0, 1)], [(0, 0), (0, 1)])


def trivial_brace(n: int) -> SemiTruss:
    t = tables.cyclic(n)
    return from_skew_brace(t, t)


def s3_elements() -> list[tuple[int, ...]]:
    return sorted(permutations(range(3)))


def s3_table() -> tables.Table:
    return tables.from_perm_group(s3_elements())


def s3_conjugation_brace() -> SemiTruss:
    t = s3_table()
    return from_skew_brace(t, t)
