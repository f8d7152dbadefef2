"""Finite set-theoretic solutions r(x, y) = (lam_x(y), rho_y(x)).

Elements are ``0..n-1``.  ``lam[x]`` is the map ``y -> lam_x(y)`` and
``rho[y]`` is the map ``x -> rho_y(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional

from . import maps
from .errors import InputError, InvariantError, PreconditionError, ResourceError
from .maps import FinMap

ISO_GUARD = 8


@dataclass(frozen=True)
class Solution:
    n: int
    lam: tuple[FinMap, ...]
    rho: tuple[FinMap, ...]

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise InputError("carrier size must be positive")
        try:
            lam = tuple(maps.as_map(row, n) for row in self.lam)
            rho = tuple(maps.as_map(row, n) for row in self.rho)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if len(lam) != n or len(rho) != n:
            raise InputError(f"expected {n} lambda and rho rows")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rho", rho)

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.lam[x][y], self.rho[y][x]

    @classmethod
    def from_function(cls, n: int, r: Callable[[int, int], tuple[int, int]]) -> "Solution":
        lam = [[0] * n for _ in range(n)]
        rho = [[0] * n for _ in range(n)]
        for x, y in product(range(n), repeat=2):
            u, v = r(x, y)
            lam[x][y] = u
            rho[y][x] = v
        return cls(n, lam, rho)

    @property
    def lnd(self) -> bool:
        return all(maps.is_bijective(f) for f in self.lam)

    @property
    def rnd(self) -> bool:
        return all(maps.is_bijective(f) for f in self.rho)

    def table(self) -> tuple[int, ...]:
        """r as a self-map of X^2, pairs encoded as ``x * n + y``."""
        n = self.n
        return tuple(self.lam[x][y] * n + self.rho[y][x] for x in range(n) for y in range(n))

    def key(self) -> tuple:
        return (self.lam, self.rho)

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": [list(r) for r in self.lam], "rho": [list(r) for r in self.rho]}


def from_pair_table(n: int, table) -> Solution:
    """Inverse of :meth:`Solution.table`."""
    return Solution.from_function(n, lambda x, y: divmod(table[x * n + y], n))


# -- braid relation ---------------------------------------------------------


@dataclass
class YBEReport:
    valid: bool
    violations: list = field(default_factory=list)


def check_ybe(S: Solution, limit: Optional[int] = None) -> YBEReport:
    """Check the three component identities of the braid relation.

    ``violations`` holds ``(a, b, c, tag)`` for every failing triple, where
    ``tag`` is one of ``"lam"``, ``"mixed"``, ``"rho"``.
    """
    lam, rho, n = S.lam, S.rho, S.n
    bad = []
    for a, b, c in product(range(n), repeat=3):
        if lam[a][lam[b][c]] != lam[lam[a][b]][lam[rho[b][a]][c]]:
            bad.append((a, b, c, "lam"))
        if lam[rho[lam[b][c]][a]][rho[c][b]] != rho[lam[rho[b][a]][c]][lam[a][b]]:
            bad.append((a, b, c, "mixed"))
        if rho[c][rho[b][a]] != rho[rho[c][b]][rho[lam[b][c]][a]]:
            bad.append((a, b, c, "rho"))
        if limit is not None and len(bad) >= limit:
            break
    return YBEReport(not bad, bad)


def is_solution(S: Solution) -> bool:
    return check_ybe(S, limit=1).valid


def braid_relation_holds(n: int, r: Callable[[int, int], tuple[int, int]]) -> bool:
    """Direct check of r12 r23 r12 = r23 r12 r23 on X^3."""
    for x, y, z in product(range(n), repeat=3):
        a, b = r(x, y)
        b, c = r(b, z)
        a, b = r(a, b)
        lhs = (a, b, c)
        b, c = r(y, z)
        a, b = r(x, b)
        b, c = r(b, c)
        if lhs != (a, b, c):
            return False
    return True


# -- properties -------------------------------------------------------------


@dataclass(frozen=True)
class PropertyFlags:
    lnd: bool
    rnd: bool
    bijective: bool
    involutive: bool
    idempotent: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify(S: Solution) -> PropertyFlags:
    t = S.table()
    tt = maps.compose(t, t)
    return PropertyFlags(
        lnd=S.lnd,
        rnd=S.rnd,
        bijective=maps.is_bijective(t),
        involutive=tt == maps.identity(len(t)),
        idempotent=tt == t,
    )


def _require_lnd(S: Solution) -> None:
    for x, f in enumerate(S.lam):
        if not maps.is_bijective(f):
            raise PreconditionError(f"solution is not left non-degenerate: lambda_{x} = {f}")


def lam_inverses(S: Solution) -> tuple[FinMap, ...]:
    _require_lnd(S)
    return tuple(maps.inverse(f) for f in S.lam)


def sigma_maps(S: Solution) -> tuple[FinMap, ...]:
    """sigma_y(x) = lam_y rho_{lam_x^{-1}(y)}(x), for a left non-degenerate S."""
    inv = lam_inverses(S)
    n = S.n
    return tuple(
        tuple(S.lam[y][S.rho[inv[x][y]][x]] for x in range(n)) for y in range(n)
    )


def derived_solution(S: Solution) -> Solution:
    """The derived solution s(x, y) = (y, sigma_y(x))."""
    sig = sigma_maps(S)
    s = Solution(S.n, [maps.identity(S.n)] * S.n, sig)
    if is_solution(S) and not is_solution(s):
        raise InvariantError("derived solution fails the braid relation")
    if classify(s).bijective != classify(S).bijective:
        raise InvariantError("derived solution and solution disagree on bijectivity")
    return s


def phi_conjugate(S: Solution) -> Solution:
    """phi^{-1} s phi with phi(a, b) = (a, lam_a(b)); equals S for solutions."""
    sig = sigma_maps(S)
    inv = lam_inverses(S)
    n = S.n

    def r(a, b):
        c = S.lam[a][b]
        # s(a, c) = (c, sigma_c(a)); then apply phi^{-1}
        return c, inv[c][sig[c][a]]

    return Solution.from_function(n, r)


def compose_solutions(S: Solution, T: Solution) -> tuple[int, ...]:
    """Pair table of S o T."""
    return maps.compose(S.table(), T.table())


def inverse_solution(S: Solution) -> Solution:
    sig = sigma_maps(S)
    for a, f in enumerate(sig):
        if not maps.is_bijective(f):
            raise PreconditionError(f"solution not bijective: sigma_{a} = {f} is not a permutation")
    sig_inv = [maps.inverse(f) for f in sig]
    inv = lam_inverses(S)
    n = S.n

    def r(a, b):
        u = sig_inv[a][S.lam[a][b]]
        return u, inv[u][a]

    R = Solution.from_function(n, r)
    ident = maps.identity(n * n)
    if compose_solutions(S, R) != ident or compose_solutions(R, S) != ident:
        raise InvariantError("computed inverse does not invert r")
    return R


@dataclass
class DiagonalResult:
    q: FinMap
    bijective: bool


def diagonal(S: Solution) -> DiagonalResult:
    inv = lam_inverses(S)
    q = tuple(inv[x][x] for x in range(S.n))
    bij = maps.is_bijective(q)
    if S.rnd and is_solution(S):
        if not bij:
            raise InvariantError("diagonal map of a non-degenerate solution is not injective")
        pairs = {(S.lam[x], S.rho[x]) for x in range(S.n)}
        if len(pairs) == S.n:
            qinv = tuple(maps.inverse(S.rho[a])[a] for a in range(S.n))
            if qinv != maps.inverse(q):
                raise InvariantError("diagonal inverse is not a -> rho_a^{-1}(a)")
    return DiagonalResult(q, bij)


# -- isomorphism ------------------------------------------------------------


def relabel(S: Solution, f) -> Solution:
    """Transport S along the bijection f: X -> X."""
    n = S.n
    finv = maps.inverse(f)
    lam = [[f[S.lam[finv[x]][finv[y]]] for y in range(n)] for x in range(n)]
    rho = [[f[S.rho[finv[y]][finv[x]]] for x in range(n)] for y in range(n)]
    return Solution(n, lam, rho)


def _point_invariant(S: Solution, x: int) -> tuple:
    return (maps.cycle_type(S.lam[x]), maps.cycle_type(S.rho[x]), S.lam[x][x] == x, S.rho[x][x] == x)


def is_morphism(S: Solution, T: Solution, f) -> bool:
    """(f x f) r_S = r_T (f x f)."""
    for x, y in product(range(S.n), repeat=2):
        u, v = S(x, y)
        if (f[u], f[v]) != T(f[x], f[y]):
            return False
    return True


def are_isomorphic(S: Solution, T: Solution) -> Optional[FinMap]:
    """Return a bijection f with (f x f) r_S = r_T (f x f), or None."""
    if S.n != T.n:
        return None
    n = S.n
    if n > ISO_GUARD:
        raise ResourceError(f"isomorphism search over {n}! bijections exceeds guard n <= {ISO_GUARD}")
    inv_s = [_point_invariant(S, x) for x in range(n)]
    inv_t = [_point_invariant(T, x) for x in range(n)]
    if sorted(inv_s) != sorted(inv_t):
        return None
    f = [-1] * n
    used = [False] * n

    def consistent(k):
        # pairs touching the newest point; outputs checked where already assigned
        for x in range(k + 1):
            for a, b in ((x, k), (k, x)):
                u, v = S(a, b)
                tu, tv = T(f[a], f[b])
                if (u <= k and f[u] != tu) or (v <= k and f[v] != tv):
                    return False
        return True

    def search(k):
        if k == n:
            return is_morphism(S, T, f)
        for y in range(n):
            if not used[y] and inv_s[k] == inv_t[y]:
                f[k] = y
                used[y] = True
                if consistent(k) and search(k + 1):
                    return True
                used[y] = False
        f[k] = -1
        return False

    if search(0):
        return tuple(f)
    return None


# -- retract ----------------------------------------------------------------


@dataclass
class RetractResult:
    quotient: Solution
    proj: FinMap
    well_defined: bool


def retract_solution(S: Solution) -> RetractResult:
    """Quotient by x ~ y iff (lam_x, rho_x) = (lam_y, rho_y)."""
    n = S.n
    labels: dict[tuple, int] = {}
    proj = []
    reps = []
    for x in range(n):
        key = (S.lam[x], S.rho[x])
        if key not in labels:
            labels[key] = len(reps)
            reps.append(x)
        proj.append(labels[key])
    m = len(reps)
    well_defined = True
    lam = [[0] * m for _ in range(m)]
    rho = [[0] * m for _ in range(m)]
    seen_l: dict = {}
    seen_r: dict = {}
    for x, y in product(range(n), repeat=2):
        cx, cy = proj[x], proj[y]
        lv, rv = proj[S.lam[x][y]], proj[S.rho[y][x]]
        if seen_l.setdefault((cx, cy), lv) != lv or seen_r.setdefault((cy, cx), rv) != rv:
            well_defined = False
        lam[cx][cy] = seen_l[(cx, cy)]
        rho[cy][cx] = seen_r[(cy, cx)]
    Q = Solution(m, lam, rho)
    if well_defined and not is_solution(Q):
        well_defined = False
    if S.lnd and S.rnd and classify(S).bijective and is_solution(S):
        if not well_defined:
            raise InvariantError("retract of a bijective non-degenerate solution is not well defined")
        if not (Q.lnd and Q.rnd):
            raise InvariantError("retract of a bijective non-degenerate solution is degenerate")
    return RetractResult(Q, tuple(proj), well_defined)


def retract_tower(S: Solution) -> list[Solution]:
    """S, Ret(S), Ret^2(S), ... until the size stops shrinking."""
    tower = [S]
    while True:
        res = retract_solution(tower[-1])
        if not res.well_defined:
            raise PreconditionError("retract is not well defined for this solution")
        if res.quotient.n == tower[-1].n:
            return tower
        tower.append(res.quotient)


def trivial(n: int) -> Solution:
    """The flip r(x, y) = (y, x)."""
    return Solution(n, [maps.identity(n)] * n, [maps.identity(n)] * n)


def iter_all_maps_n2() -> Iterator[tuple[int, ...]]:
    """All 256 self-maps of X^2 for |X| = 2, as pair tables."""
    return (tuple(t) for t in product(range(4), repeat=4))
