"""Exhaustive enumeration of small solutions, with isomorphism dedup.

Candidates are parameterised by lambda rows and rho rows.  For each choice
of lambda rows, the first braid identity restricts every rho cell
(rho_b(a) = c needs lam_{lam_a(b)} lam_c = lam_a lam_b); rho rows are then
filled one at a time and the remaining identities are checked on every
triple whose rho rows are already fixed.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional

from . import maps
from .errors import InvariantError, PreconditionError, ResourceError
from .monoid import grow_classes
from .solution import Solution, check_ybe, classify

DEFAULT_BUDGET = 10_000_000
MAX_N = 4


@dataclass(frozen=True)
class SearchSpec:
    n: int
    require_lnd: bool = True
    require_rnd: bool = False
    require_bijective: bool = False
    require_involutive: bool = False
    dedup: bool = False
    budget: int = DEFAULT_BUDGET
    jobs: int = 1

    def candidate_count(self) -> int:
        n = self.n
        lam_rows = len(maps.all_perms(n)) if self.require_lnd else n ** n
        rho_rows = len(maps.all_perms(n)) if self.require_rnd else n ** n
        return lam_rows ** n * rho_rows ** n

    def check(self) -> None:
        n = self.n
        if n < 1:
            raise PreconditionError("n must be positive")
        if n > MAX_N:
            raise PreconditionError(f"no census for n = {n} > {MAX_N}")
        if n == 3 and not self.require_lnd:
            raise PreconditionError("n = 3 needs the left non-degenerate constraint")
        if n == 4 and not (self.require_lnd and self.require_rnd):
            raise PreconditionError("n = 4 needs both non-degeneracy constraints")
        count = self.candidate_count()
        if count > self.budget:
            raise ResourceError(f"search space has {count} candidates, over the budget of {self.budget}")


@dataclass
class Census:
    spec: SearchSpec
    solutions: list
    candidates: int
    summary: dict = field(default_factory=dict)


# -- core search ------------------------------------------------------------------


def _triple_ok(lam, rho, a, b, c) -> Optional[bool]:
    """Second and third braid identities at (a, b, c); None if an unset rho row is needed."""
    rb, rc = rho[b], rho[c]
    if rb is None or rc is None:
        return None
    lbc = lam[b][c]
    r1 = rho[lbc]
    if r1 is None:
        return None
    x = rb[a]
    r2 = rho[lam[x][c]]
    r3 = rho[rc[b]]
    if r2 is None or r3 is None:
        return None
    if lam[r1[a]][rc[b]] != r2[lam[a][b]]:
        return False
    return rc[x] == r3[r1[a]]


def _search_lambda(n: int, lam: tuple, rho_rows: list, out: list) -> None:
    # allowed rho_b(a) values from the first identity
    allowed = [[None] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        target = maps.compose(lam[a], lam[b])
        head = lam[lam[a][b]]
        allowed[b][a] = {c for c in range(n) if maps.compose(head, lam[c]) == target}
    row_cands = [[r for r in rho_rows if all(r[a] in allowed[b][a] for a in range(n))] for b in range(n)]
    if any(not rc for rc in row_cands):
        return
    rho: list = [None] * n
    triples = list(product(range(n), repeat=3))

    def rec(b: int) -> None:
        if b == n:
            out.append(Solution(n, lam, tuple(rho)))
            return
        for r in row_cands[b]:
            rho[b] = r
            if all(_triple_ok(lam, rho, *t) is not False for t in triples):
                rec(b + 1)
        rho[b] = None

    rec(0)


def _shard(args) -> list:
    n, first, lnd, rnd = args
    lam_rows = maps.all_perms(n) if lnd else maps.all_maps(n)
    rho_rows = maps.all_perms(n) if rnd else maps.all_maps(n)
    out: list = []
    for rest in product(lam_rows, repeat=n - 1):
        _search_lambda(n, (lam_rows[first],) + rest, rho_rows, out)
    return out


def canonical(S: Solution) -> Solution:
    """Least relabelling of S under the key (lam, rho)."""
    best = None
    for p in permutations(range(S.n)):
        finv = maps.inverse(p)
        lam = tuple(tuple(p[S.lam[finv[x]][finv[y]]] for y in range(S.n)) for x in range(S.n))
        rho = tuple(tuple(p[S.rho[finv[y]][finv[x]]] for x in range(S.n)) for y in range(S.n))
        if best is None or (lam, rho) < best:
            best = (lam, rho)
    return Solution(S.n, *best)


def flag_key(S: Solution) -> str:
    f = classify(S)
    return ",".join(k for k, v in f.as_dict().items() if v) or "none"


def enumerate_solutions(spec: SearchSpec) -> Census:
    spec.check()
    n = spec.n
    lam_rows = maps.all_perms(n) if spec.require_lnd else maps.all_maps(n)
    jobs = [(n, i, spec.require_lnd, spec.require_rnd) for i in range(len(lam_rows))]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            parts = list(pool.map(_shard, jobs))
    else:
        parts = [_shard(j) for j in jobs]
    sols = [S for part in parts for S in part]
    keep = []
    for S in sols:
        f = classify(S)
        if spec.require_bijective and not f.bijective:
            continue
        if spec.require_involutive and not f.involutive:
            continue
        if spec.require_rnd and not f.rnd:
            continue
        keep.append(S)
    if spec.dedup:
        keep = list({canonical(S) for S in keep})
    keep.sort(key=Solution.key)
    for S in keep:
        if not check_ybe(S, limit=1).valid:
            raise InvariantError(f"emitted table fails the braid relation: {S}")
    summary = {"n": n, "total": len(keep), "by_flags": dict(sorted(Counter(flag_key(S) for S in keep).items()))}
    return Census(spec, keep, spec.candidate_count(), summary)


# -- audits -------------------------------------------------------------------------


def audit_theorem_b(n: int, jobs: int = 1, budget: int = DEFAULT_BUDGET) -> dict:
    """rnd <=> bijective over every left non-degenerate solution on n points."""
    if n > 3:
        raise PreconditionError("the full census is limited to n <= 3")
    census = enumerate_solutions(SearchSpec(n, require_lnd=True, budget=budget, jobs=jobs))
    bad = []
    for S in census.solutions:
        f = classify(S)
        if f.rnd != f.bijective:
            bad.append(S.to_json())
    if bad:
        raise InvariantError(f"{len(bad)} counterexamples to rnd <=> bijective, first {bad[0]}")
    return {"n": n, "checked": len(census.solutions), "counterexamples": 0,
            "rnd_bijective": sum(classify(S).rnd for S in census.solutions)}


def dim_r2(S: Solution) -> int:
    return grow_classes(S, 2, "multiplicative").dims[2]


def audit_involutive_dim(n: int, jobs: int = 1, budget: int = DEFAULT_BUDGET) -> dict:
    """Maximum of dim R_2 over bijective non-degenerate solutions, and who attains it."""
    if n > 3:
        raise PreconditionError("the full census is limited to n <= 3")
    spec = SearchSpec(n, require_lnd=True, require_rnd=True, require_bijective=True, dedup=True, budget=budget, jobs=jobs)
    census = enumerate_solutions(spec)
    rows = [(S, dim_r2(S), classify(S).involutive) for S in census.solutions]
    top = max(d for _, d, _ in rows)
    maximizers = [S for S, d, _ in rows if d == top]
    involutive = [S for S, _, inv in rows if inv]
    exact = {S.key() for S in maximizers} == {S.key() for S in involutive}
    if not exact:
        raise InvariantError("maximizers of dim R_2 are not exactly the involutive solutions")
    return {"n": n, "classes": len(rows), "max_dim_r2": top, "maximizers": len(maximizers),
            "involutive": len(involutive), "maximizers_are_involutive": exact,
            "dims": sorted(Counter(d for _, d, _ in rows).items())}
