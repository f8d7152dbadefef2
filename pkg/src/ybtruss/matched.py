"""Matched product systems of semitrusses and of solutions.

Product carriers are flattened as ``a * |A2| + u``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import maps
from .errors import InputError, InvariantError, PreconditionError
from .maps import FinMap
from .semitruss import SemiTruss, associated_solution, verify_semitruss
from .solution import Solution, check_ybe


def _perm_rows(rows, count: int, size: int, name: str) -> tuple[FinMap, ...]:
    try:
        out = tuple(maps.as_map(r, size) for r in rows)
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from None
    if len(out) != count:
        raise InputError(f"{name} needs {count} rows, got {len(out)}")
    for i, f in enumerate(out):
        if not maps.is_bijective(f):
            raise InputError(f"{name}[{i}] = {f} is not a permutation")
    return out


@dataclass(frozen=True)
class MatchedSystemST:
    A1: SemiTruss
    A2: SemiTruss
    alpha: tuple  # alpha[u] permutes A1
    beta: tuple  # beta[a] permutes A2

    def __post_init__(self):
        object.__setattr__(self, "alpha", _perm_rows(self.alpha, self.A2.m, self.A1.m, "alpha"))
        object.__setattr__(self, "beta", _perm_rows(self.beta, self.A1.m, self.A2.m, "beta"))

    def to_json(self) -> dict:
        return {"A1": self.A1.to_json(), "A2": self.A2.to_json(),
                "alpha": [list(r) for r in self.alpha], "beta": [list(r) for r in self.beta]}


@dataclass(frozen=True)
class MatchedSystemSol:
    rS: Solution
    rT: Solution
    alpha: tuple  # alpha[u] permutes S
    beta: tuple  # beta[a] permutes T

    def __post_init__(self):
        object.__setattr__(self, "alpha", _perm_rows(self.alpha, self.rT.n, self.rS.n, "alpha"))
        object.__setattr__(self, "beta", _perm_rows(self.beta, self.rS.n, self.rT.n, "beta"))

    def to_json(self) -> dict:
        return {"S": self.rS.to_json(), "T": self.rT.to_json(),
                "alpha": [list(r) for r in self.alpha], "beta": [list(r) for r in self.beta]}


def _first(pred, *ranges):
    for t in product(*ranges):
        if not pred(*t):
            return t
    return None


@dataclass
class SystemReport:
    conditions: dict

    @property
    def valid(self) -> bool:
        return all(w is None for w in self.conditions.values())

    def to_json(self) -> dict:
        return {"valid": self.valid,
                "conditions": {k: {"pass": w is None, "witness": None if w is None else list(w)}
                               for k, w in self.conditions.items()}}


def validate_system_semitruss(sys: MatchedSystemST) -> SystemReport:
    A1, A2, al, be = sys.A1, sys.A2, sys.alpha, sys.beta
    R1, R2 = range(A1.m), range(A2.m)
    ali = [maps.inverse(f) for f in al]
    bei = [maps.inverse(f) for f in be]
    c = {
        "alpha_additive": _first(lambda u, a, b: al[u][A1.add[a][b]] == A1.add[al[u][a]][al[u][b]], R2, R1, R1),
        "alpha_hom": _first(lambda u, v, a: al[A2.mul[u][v]][a] == al[u][al[v][a]], R2, R2, R1),
        "beta_additive": _first(lambda a, u, v: be[a][A2.add[u][v]] == A2.add[be[a][u]][be[a][v]], R1, R2, R2),
        "beta_hom": _first(lambda a, b, u: be[A1.mul[a][b]][u] == be[a][be[b][u]], R1, R1, R2),
        "alphabetalambda_1": _first(
            lambda a, u, b: A1.lam[a][al[bei[a][u]][b]] == al[u][A1.lam[ali[u][a]][b]], R1, R2, R1),
        "alphabetalambda_2": _first(
            lambda a, u, v: A2.lam[u][be[ali[u][a]][v]] == be[a][A2.lam[bei[a][u]][v]], R1, R2, R2),
        "alphabetac_1": _first(lambda u, a, b: al[u][A1.sig[a][b]] == A1.sig[al[u][a]][al[u][b]], R2, R1, R1),
        "alphabetac_2": _first(lambda a, u, v: be[a][A2.sig[u][v]] == A2.sig[be[a][u]][be[a][v]], R1, R2, R2),
    }
    return SystemReport(c)


def matched_product_semitruss(sys: MatchedSystemST) -> SemiTruss:
    rep = validate_system_semitruss(sys)
    if not rep.valid:
        name = next(k for k, w in rep.conditions.items() if w is not None)
        raise PreconditionError(f"invalid matched system: {name} fails at {rep.conditions[name]}")
    A1, A2, al, be = sys.A1, sys.A2, sys.alpha, sys.beta
    m1, m2 = A1.m, A2.m
    m = m1 * m2
    ali = [maps.inverse(f) for f in al]
    bei = [maps.inverse(f) for f in be]
    add = [[0] * m for _ in range(m)]
    mul = [[0] * m for _ in range(m)]
    lam = [[0] * m for _ in range(m)]
    sig = [[0] * m for _ in range(m)]
    for a, u, b, v in product(range(m1), range(m2), range(m1), range(m2)):
        x, y = a * m2 + u, b * m2 + v
        add[x][y] = A1.add[a][b] * m2 + A2.add[u][v]
        mul[x][y] = al[u][A1.mul[ali[u][a]][b]] * m2 + be[a][A2.mul[bei[a][u]][v]]
        lam[x][y] = A1.lam[a][al[bei[a][u]][b]] * m2 + A2.lam[u][be[ali[u][a]][v]]
        sig[x][y] = A1.sig[a][b] * m2 + A2.sig[u][v]
    unit = None
    if A1.unit is not None and A2.unit is not None:
        unit = A1.unit * m2 + A2.unit
    P = SemiTruss(m, add, mul, lam, sig, unit)
    prep = verify_semitruss(P)
    if not prep.valid:
        raise InvariantError(f"matched product fails axioms {prep.failed()}")
    return P


def validate_system_solutions(sys: MatchedSystemSol) -> SystemReport:
    S, T, al, be = sys.rS, sys.rT, sys.alpha, sys.beta
    RS, RT = range(S.n), range(T.n)
    ali = [maps.inverse(f) for f in al]
    bei = [maps.inverse(f) for f in be]
    c = {
        "s1": _first(lambda u, v, a: al[u][al[v][a]] == al[T.lam[u][v]][al[T.rho[v][u]][a]], RT, RT, RS),
        "s2": _first(lambda a, b, u: be[a][be[b][u]] == be[S.lam[a][b]][be[S.rho[b][a]][u]], RS, RS, RT),
        "s3": _first(
            lambda a, b, u: S.rho[ali[u][b]][ali[be[a][u]][a]]
            == ali[be[S.rho[b][a]][bei[b][u]]][S.rho[b][a]], RS, RS, RT),
        "s4": _first(
            lambda a, u, v: T.rho[bei[a][v]][bei[al[u][a]][u]]
            == bei[al[T.rho[v][u]][ali[v][a]]][T.rho[v][u]], RS, RT, RT),
        "s5": _first(lambda a, u, b: S.lam[a][al[bei[a][u]][b]] == al[u][S.lam[ali[u][a]][b]], RS, RT, RS),
        "s6": _first(lambda a, u, v: T.lam[u][be[ali[u][a]][v]] == be[a][T.lam[bei[a][u]][v]], RS, RT, RT),
    }
    return SystemReport(c)


def matched_product_solutions(sys: MatchedSystemSol, check: bool = True) -> Solution:
    if check:
        rep = validate_system_solutions(sys)
        if not rep.valid:
            name = next(k for k, w in rep.conditions.items() if w is not None)
            raise PreconditionError(f"invalid matched system: {name} fails at {rep.conditions[name]}")
    S, T, al, be = sys.rS, sys.rT, sys.alpha, sys.beta
    nS, nT = S.n, T.n
    ali = [maps.inverse(f) for f in al]
    bei = [maps.inverse(f) for f in be]

    def r(x, y):
        a, u = divmod(x, nT)
        b, v = divmod(y, nT)
        abar, ubar = ali[u][a], bei[a][u]
        A = al[u][S.lam[abar][b]]
        U = be[a][T.lam[ubar][v]]
        Abar, Ubar = ali[U][A], bei[A][U]
        left = ali[Ubar][S.rho[al[ubar][b]][a]]
        right = bei[Abar][T.rho[be[abar][v]][u]]
        return A * nT + U, left * nT + right

    P = Solution.from_function(nS * nT, r)
    if check and not check_ybe(P, limit=1).valid:
        raise InvariantError("matched product of solutions fails the braid relation")
    return P


def induced_solution_system(sys: MatchedSystemST) -> MatchedSystemSol:
    return MatchedSystemSol(associated_solution(sys.A1), associated_solution(sys.A2), sys.alpha, sys.beta)


def compatibility_mismatches(sys: MatchedSystemST) -> list:
    """Pairs where r of the product semitruss differs from the matched product of solutions."""
    left = associated_solution(matched_product_semitruss(sys))
    right = matched_product_solutions(induced_solution_system(sys))
    n = left.n
    return [(x, y) for x, y in product(range(n), repeat=2) if left(x, y) != right(x, y)]


def random_systems(rS: Solution, rT: Solution, tries: int, seed: int = 0) -> list[MatchedSystemSol]:
    """Valid systems among ``tries`` random choices of alpha and beta."""
    rng = random.Random(seed)
    permsS, permsT = maps.all_perms(rS.n), maps.all_perms(rT.n)
    found = []
    for _ in range(tries):
        al = [rng.choice(permsS) for _ in range(rT.n)]
        be = [rng.choice(permsT) for _ in range(rS.n)]
        sys = MatchedSystemSol(rS, rT, al, be)
        if validate_system_solutions(sys).valid:
            found.append(sys)
    return found
