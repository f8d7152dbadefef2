"""Finite YB-semitrusses (A, +, o, lambda, sigma).

The rho-map is never stored; it is always recomputed as
rho_b(a) = lam^{-1}_{lam_a(b)} sig_{lam_a(b)}(a).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from . import maps, tables
from .errors import InputError, InvariantError, PreconditionError
from .maps import FinMap
from .solution import Solution, check_ybe, classify, compose_solutions, inverse_solution, derived_solution

AXIOMS = (
    "add_assoc",
    "mul_assoc",
    "lambda_additive",
    "lambda_hom",
    "sumcirc",
    "csum",
    "sigma_additive",
    "sigma_antihom",
    "clambda",
)


@dataclass(frozen=True)
class SemiTruss:
    m: int
    add: tables.Table
    mul: tables.Table
    lam: tuple[FinMap, ...]
    sig: tuple[FinMap, ...]
    unit: Optional[int] = None

    def __post_init__(self):
        m = int(self.m)
        if m < 1:
            raise InputError("carrier size must be positive")
        try:
            add = tables.as_table(self.add, m)
            mul = tables.as_table(self.mul, m)
            lam = tuple(maps.as_map(r, m) for r in self.lam)
            sig = tuple(maps.as_map(r, m) for r in self.sig)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if len(lam) != m or len(sig) != m:
            raise InputError(f"expected {m} lambda and sigma rows")
        for a, f in enumerate(lam):
            if not maps.is_bijective(f):
                raise InputError(f"lambda_{a} = {f} is not a permutation")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "sig", sig)
        if self.unit is not None:
            u = int(self.unit)
            if not 0 <= u < m:
                raise InputError(f"unit {u} out of range")
            object.__setattr__(self, "unit", u)
            bad = unital_failures(self, u)
            if bad:
                raise InputError("declared unit violates the unital conditions: " + "; ".join(bad))

    def rho(self) -> tuple[FinMap, ...]:
        """rho[b][a] = rho_b(a)."""
        m = self.m
        inv = [maps.inverse(f) for f in self.lam]
        out = []
        for b in range(m):
            row = []
            for a in range(m):
                c = self.lam[a][b]
                row.append(inv[c][self.sig[c][a]])
            out.append(tuple(row))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "add": [list(r) for r in self.add],
            "mul": [list(r) for r in self.mul],
            "lambda": [list(r) for r in self.lam],
            "sigma": [list(r) for r in self.sig],
            "unit": self.unit,
        }


def unital_failures(T: SemiTruss, u: int) -> list[str]:
    m, bad = T.m, []
    if any(T.add[u][x] != x or T.add[x][u] != x for x in range(m)):
        bad.append(f"{u} is not an identity of +")
    if any(T.mul[u][x] != x or T.mul[x][u] != x for x in range(m)):
        bad.append(f"{u} is not an identity of o")
    if T.lam[u] != maps.identity(m):
        bad.append(f"lambda_{u} != id")
    if T.sig[u] != maps.identity(m):
        bad.append(f"sigma_{u} != id")
    for a in range(m):
        if T.lam[a][u] != u:
            bad.append(f"lambda_{a}({u}) != {u}")
            break
    for a in range(m):
        if T.sig[a][u] != u:
            bad.append(f"sigma_{a}({u}) != {u}")
            break
    return bad


# -- axioms -----------------------------------------------------------------


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)  # name -> witness tuple or None
    condc1: Optional[tuple] = None
    sumgroup: Optional[bool] = None

    @property
    def valid(self) -> bool:
        return all(w is None for w in self.results.values())

    def failed(self) -> list[str]:
        return [k for k, w in self.results.items() if w is not None]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "axioms": {k: {"pass": w is None, "witness": None if w is None else list(w)} for k, w in self.results.items()},
            "condc1": {"pass": self.condc1 is None, "witness": None if self.condc1 is None else list(self.condc1)},
            "sumgroup": self.sumgroup,
        }


def _first(pred, m: int, k: int):
    for t in product(range(m), repeat=k):
        if not pred(*t):
            return t
    return None


def verify_semitruss(T: SemiTruss) -> AxiomReport:
    m, add, mul, lam, sig = T.m, T.add, T.mul, T.lam, T.sig
    res = {
        "add_assoc": tables.assoc_witness(add),
        "mul_assoc": tables.assoc_witness(mul),
        "lambda_additive": _first(lambda a, b, d: lam[a][add[b][d]] == add[lam[a][b]][lam[a][d]], m, 3),
        "lambda_hom": _first(lambda a, b, d: lam[a][lam[b][d]] == lam[mul[a][b]][d], m, 3),
        "sumcirc": _first(lambda a, b: add[a][lam[a][b]] == mul[a][b], m, 2),
        "csum": _first(lambda a, b: add[a][b] == add[b][sig[b][a]], m, 2),
        "sigma_additive": _first(lambda a, b, d: sig[a][add[b][d]] == add[sig[a][b]][sig[a][d]], m, 3),
        "sigma_antihom": _first(lambda a, b, d: sig[add[a][b]][d] == sig[b][sig[a][d]], m, 3),
        "clambda": _first(lambda a, d, b: sig[lam[a][d]][lam[a][b]] == lam[a][sig[d][b]], m, 3),
    }
    rep = AxiomReport(res)
    rep.condc1 = _first(lambda a, b, d: sig[a][sig[b][d]] == sig[sig[a][b]][sig[a][d]], m, 3)
    if tables.is_group(add):
        rep.sumgroup = tables.is_group(mul)
        if rep.valid and not rep.sumgroup:
            raise InvariantError("(A,+) is a group but (A,o) is not")
    if rep.valid and rep.condc1 is not None:
        raise InvariantError(f"condc1 fails at {rep.condc1} although all axioms hold")
    return rep


def _require_valid(T: SemiTruss) -> AxiomReport:
    rep = verify_semitruss(T)
    if not rep.valid:
        name = rep.failed()[0]
        raise PreconditionError(f"not a YB-semitruss: axiom {name} fails at {rep.results[name]}")
    return rep


# -- solutions ----------------------------------------------------------------


def _raw_solution(T: SemiTruss) -> Solution:
    return Solution(T.m, T.lam, T.rho())


def associated_solution(T: SemiTruss) -> Solution:
    _require_valid(T)
    S = _raw_solution(T)
    if not check_ybe(S, limit=1).valid:
        raise InvariantError("associated solution fails the braid relation")
    # r = phi^{-1} s phi with phi(a, b) = (a, lam_a(b))
    inv = [maps.inverse(f) for f in T.lam]
    for a, b in product(range(T.m), repeat=2):
        c = T.lam[a][b]
        if (c, inv[c][T.sig[c][a]]) != S(a, b):
            raise InvariantError(f"conjugation identity fails at {(a, b)}")
    return S


def associated_derived(T: SemiTruss) -> Solution:
    _require_valid(T)
    s = Solution(T.m, [maps.identity(T.m)] * T.m, T.sig)
    if not check_ybe(s, limit=1).valid:
        raise InvariantError("derived solution fails the braid relation")
    if derived_solution(_raw_solution(T)) != s:
        raise InvariantError("derived solution of r_A differs from s_A")
    return s


def opposite(T: SemiTruss) -> SemiTruss:
    for a, f in enumerate(T.sig):
        if not maps.is_bijective(f):
            raise PreconditionError(f"no opposite: sigma_{a} not invertible")
    m = T.m
    sinv = [maps.inverse(f) for f in T.sig]
    add_op = tuple(tuple(T.add[b][a] for b in range(m)) for a in range(m))
    lam = [maps.compose(sinv[a], T.lam[a]) for a in range(m)]
    O = SemiTruss(m, add_op, T.mul, lam, sinv, T.unit)
    _require_valid(O)
    if verify_semitruss(T).valid:
        if _raw_solution(O) != inverse_solution(_raw_solution(T)):
            raise InvariantError("opposite does not give the inverse solution")
    return O


# -- idempotents ------------------------------------------------------------


def idempotent_sets(T: SemiTruss) -> tuple[frozenset, frozenset, dict]:
    m, add, mul, lam, sig = T.m, T.add, T.mul, T.lam, T.sig
    Ep = frozenset(e for e in range(m) if add[e][e] == e)
    Ec = frozenset(e for e in range(m) if mul[e][e] == e)
    ident = maps.identity(m)

    def closed(E, op):
        return all(op[a][b] in E for a in E for b in E)

    rep = {
        "lambda_id_on_Ecirc": all(lam[e] == ident for e in Ec),
        "sigma_idempotent_on_Eplus": all(maps.is_idempotent(sig[e]) for e in Ep),
        "Ecirc_in_Eplus": Ec <= Ep,
        "Eplus_closed": closed(Ep, add) and closed(Ep, mul)
        and all(lam[a][e] in Ep and sig[a][e] in Ep for a in Ep for e in Ep),
        "Ecirc_closed": closed(Ec, mul) and closed(Ec, add) and all(lam[a][e] in Ec for a in Ec for e in Ec),
    }
    if classify(_raw_solution(T)).bijective:
        rep["commutative"] = all(
            add[a][b] == add[b][a] for a in Ep for b in Ep
        ) and all(mul[a][b] == mul[b][a] for a in Ec for b in Ec)
    e = T.unit if T.unit is not None else tables.identity_element(add)
    rep["unital"] = e is not None and not unital_failures(T, e)
    if verify_semitruss(T).valid:
        failed = [k for k, v in rep.items() if k != "unital" and not v]
        if failed:
            raise InvariantError(f"idempotent claims fail: {failed}")
    return Ep, Ec, rep


# -- constructors ---------------------------------------------------------------


def from_skew_brace(add, mul) -> SemiTruss:
    m = len(add)
    add, mul = tables.as_table(add, m), tables.as_table(mul, m)
    neg = tables.inverses(add)
    if neg is None:
        raise PreconditionError("not a skew brace: + is not a group")
    if tables.inverses(mul) is None:
        raise PreconditionError("not a skew brace: o is not a group")
    e = tables.identity_element(add)
    if tables.identity_element(mul) != e:
        raise PreconditionError("not a skew brace: + and o have different identities")
    for a, b, d in product(range(m), repeat=3):
        lhs = mul[a][add[b][d]]
        rhs = add[add[mul[a][b]][neg[a]]][mul[a][d]]
        if lhs != rhs:
            raise PreconditionError(f"not a skew brace: law fails at {(a, b, d)}")
    lam = [[add[neg[a]][mul[a][b]] for b in range(m)] for a in range(m)]
    sig = [[add[add[neg[b]][a]][b] for a in range(m)] for b in range(m)]
    T = SemiTruss(m, add, mul, lam, sig, e)
    _require_valid(T)
    fl = classify(_raw_solution(T))
    if not (fl.lnd and fl.rnd and fl.bijective):
        raise InvariantError("skew brace solution is not bijective non-degenerate")
    return T


def from_semibrace(add, mul) -> SemiTruss:
    m = len(add)
    add, mul = tables.as_table(add, m), tables.as_table(mul, m)
    w = tables.assoc_witness(add)
    if w is not None:
        raise PreconditionError(f"not a semi-brace: + not associative at {w}")
    w = tables.left_cancel_witness(add)
    if w is not None:
        raise PreconditionError(f"not a semi-brace: + not left cancellative, {w[0]}+{w[1]} = {w[0]}+{w[2]}")
    bar = tables.inverses(mul)
    if bar is None:
        raise PreconditionError("not a semi-brace: o is not a group")
    for a, b, d in product(range(m), repeat=3):
        if mul[a][add[b][d]] != add[mul[a][b]][mul[a][add[bar[a]][d]]]:
            raise PreconditionError(f"not a semi-brace: law fails at {(a, b, d)}")
    lam = [[mul[a][add[bar[a]][b]] for b in range(m)] for a in range(m)]
    sig = [[add[add[lam[b][bar[b]]][a]][b] for a in range(m)] for b in range(m)]
    e = tables.identity_element(mul)
    T = SemiTruss(m, add, mul, lam, sig)
    if not unital_failures(T, e):
        T = SemiTruss(m, add, mul, lam, sig, e)
    _require_valid(T)
    return T


# -- homomorphisms and the retract ----------------------------------------------------


def check_homomorphism(T1: SemiTruss, T2: SemiTruss, f) -> dict:
    f = maps.as_map(f, T1.m) if T1.m == T2.m else tuple(f)
    if len(f) != T1.m or any(not 0 <= v < T2.m for v in f):
        raise InputError("f must map carrier(T1) into carrier(T2)")
    m = T1.m
    rep = {
        "add": _first(lambda a, b: f[T1.add[a][b]] == T2.add[f[a]][f[b]], m, 2),
        "mul": _first(lambda a, b: f[T1.mul[a][b]] == T2.mul[f[a]][f[b]], m, 2),
        "lambda": _first(lambda a, b: f[T1.lam[a][b]] == T2.lam[f[a]][f[b]], m, 2),
        "sigma": _first(lambda a, b: f[T1.sig[b][a]] == T2.sig[f[b]][f[a]], m, 2),
    }
    out = {"valid": all(w is None for w in rep.values()), "conditions": rep, "surjective": set(f) == set(range(T2.m))}
    if out["valid"] and out["surjective"]:
        r1, r2 = T1.rho(), T2.rho()
        w = _first(lambda a, b: r2[f[a]][f[b]] == f[r1[a][b]], m, 2)
        out["rho_compatible"] = w is None
        if w is not None:
            raise InvariantError(f"surjective homomorphism not rho-compatible at {w}")
    return out


@dataclass
class RetractAudit:
    well_defined: bool
    epimorphism: bool
    nondegenerate: bool
    cancellative: bool
    sigma_forced: bool
    skew_brace_hypothesis: bool
    skew_brace: Optional[bool]

    def to_json(self) -> dict:
        return dict(self.__dict__)


def retract_semitruss(T: SemiTruss):
    """Return (G, f, audit) where G identifies a, b with equal (sig, lam, rho)."""
    _require_valid(T)
    rho = T.rho()
    m = T.m
    for b, g in enumerate(rho):
        if not maps.is_bijective(g):
            raise PreconditionError(f"degenerate semitruss: rho_{b} = {g} is not a permutation")
    key = {}
    proj = []
    reps = []
    for a in range(m):
        k = (T.sig[a], T.lam[a], rho[a])
        if k not in key:
            key[k] = len(reps)
            reps.append(a)
        proj.append(key[k])
    k = len(reps)
    well = True
    tabs = {}
    for name, op in (("add", T.add), ("mul", T.mul), ("lam", T.lam), ("sig", None)):
        t = {}
        for a, b in product(range(m), repeat=2):
            v = proj[T.sig[a][b]] if op is None else proj[op[a][b]]
            if t.setdefault((proj[a], proj[b]), v) != v:
                well = False
        tabs[name] = [[t[(i, j)] for j in range(k)] for i in range(k)]
    if not well:
        raise InvariantError("retract operations depend on representatives")
    unit = proj[T.unit] if T.unit is not None else None
    G = SemiTruss(k, tabs["add"], tabs["mul"], tabs["lam"], tabs["sig"], unit)
    f = tuple(proj)
    epi = check_homomorphism(T, G, f)["valid"] and verify_semitruss(G).valid
    SG = associated_solution(G)
    nondeg = SG.lnd and SG.rnd
    cancel = tables.left_cancel_witness(G.mul) is None and tables.is_right_cancellative(G.mul)
    forced = all(
        T.sig[a] == T.sig[b]
        for a in range(m) for b in range(m)
        if T.lam[a] == T.lam[b] and rho[a] == rho[b]
    )
    ident = maps.identity(m)
    hyp = all(
        any(maps.compose(T.lam[a], T.lam[b]) == ident and maps.compose(rho[b], rho[a]) == ident for b in range(m))
        for a in range(m)
    )
    sb = (tables.is_group(G.add) and tables.is_group(G.mul)) if hyp else None
    audit = RetractAudit(well, epi, nondeg, cancel, forced, hyp, sb)
    if not (epi and nondeg and cancel and forced and sb in (None, True)):
        raise InvariantError(f"retract audit failed: {audit}")
    return G, f, audit


def triple_partition(T: SemiTruss) -> list[frozenset]:
    """Classes of a by the triple (sig_a, lam_a, rho_a), by direct comparison."""
    rho = T.rho()
    classes: list[list[int]] = []
    for a in range(T.m):
        for c in classes:
            b = c[0]
            if T.sig[a] == T.sig[b] and T.lam[a] == T.lam[b] and rho[a] == rho[b]:
                c.append(a)
                break
        else:
            classes.append([a])
    return [frozenset(c) for c in classes]
