"""The semigroup C = <sigma_x> of endomorphisms and its left simple decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Union

from . import maps
from .errors import InvariantError
from .maps import FinMap
from .semitruss import SemiTruss
from .solution import Solution, classify, sigma_maps


@dataclass
class CSemigroup:
    size: int  # carrier size the maps act on
    elements: list  # BFS order from the generators
    gens: list
    idempotents: list = field(default_factory=list)

    def __contains__(self, f) -> bool:
        return tuple(f) in self._index

    def __post_init__(self):
        self._index = {f: i for i, f in enumerate(self.elements)}

    def products(self, f: FinMap) -> tuple[set, set]:
        """(C f, f C) as sets of maps."""
        return ({maps.compose(g, f) for g in self.elements}, {maps.compose(f, g) for g in self.elements})


def closure(gens, size: int) -> list[FinMap]:
    gens = [tuple(g) for g in gens]
    elements: list[FinMap] = []
    seen = set()
    for g in gens:
        if g not in seen:
            seen.add(g)
            elements.append(g)
    i = 0
    while i < len(elements):
        f = elements[i]
        for g in gens:
            h = maps.compose(f, g)
            if h not in seen:
                seen.add(h)
                elements.append(h)
        i += 1
    return elements


def _sources(source: Union[SemiTruss, Solution]) -> tuple[int, list]:
    if isinstance(source, SemiTruss):
        return source.m, list(source.sig)
    return source.n, list(sigma_maps(source))


def generate_c(source: Union[SemiTruss, Solution]) -> CSemigroup:
    size, gens = _sources(source)
    elements = closure(gens, size)
    C = CSemigroup(size, elements, gens, [f for f in elements if maps.is_idempotent(f)])
    w = normality_witness(C)
    if w is not None:
        raise InvariantError(f"sigma_f C is not inside C sigma_f for f = {w}")
    return C


def normality_witness(C: CSemigroup):
    for f in C.elements:
        left = {maps.compose(h, f) for h in C.elements}
        for g in C.elements:
            if maps.compose(f, g) not in left:
                return f
    return None


def left_ideals_two_sided(C: CSemigroup) -> bool:
    """Every principal left ideal C^1 f is also a right ideal."""
    for f in C.elements:
        ideal = {f} | C.products(f)[0]
        if any(maps.compose(h, g) not in ideal for h in ideal for g in C.elements):
            return False
    return True


def idempotent_exponent(C: CSemigroup) -> int:
    v = 1
    while not all(maps.is_idempotent(maps.power(g, v)) for g in C.gens):
        v += 1
    return v


def band_check(C: CSemigroup, v: int | None = None) -> tuple[bool, list]:
    """Whether the subsemigroup generated by the v-th powers of the generators is a band."""
    if v is None:
        v = idempotent_exponent(C)
    sub = closure([maps.power(g, v) for g in C.gens], C.size)
    return all(maps.is_idempotent(f) for f in sub), sub


def condc1_witness(T: SemiTruss):
    s = T.sig
    for a, b in product(range(T.m), repeat=2):
        if maps.compose(s[a], s[b]) != maps.compose(s[s[a][b]], s[a]):
            return (a, b)
    return None


# -- left simple decomposition ----------------------------------------------------


def maximal_subgroup(C: CSemigroup, e: FinMap) -> list[FinMap]:
    local = [g for g in C.elements if maps.compose(g, e) == g and maps.compose(e, g) == g]
    return [g for g in local if any(maps.compose(g, h) == e and maps.compose(h, g) == e for h in local)]


def ideal_chain_sketch(C: CSemigroup) -> list[dict]:
    """Distinct principal two-sided ideals C^1 f C^1, smallest first."""
    seen = {}
    for f in C.elements:
        left = {f} | C.products(f)[0]
        ideal = left | {maps.compose(h, g) for h in left for g in C.elements}
        seen.setdefault(frozenset(ideal), f)
    out = [{"generator": list(f), "size": len(I)} for I, f in seen.items()]
    return sorted(out, key=lambda d: (d["size"], d["generator"]))


def _restricted_solution(T: SemiTruss, block: list[int]):
    """s_A on a subset closed under sigma, relabelled 0..k-1, or None if not closed."""
    idx = {a: i for i, a in enumerate(block)}
    k = len(block)
    rho = []
    for b in block:
        row = []
        for a in block:
            c = T.sig[b][a]
            if c not in idx:
                return None
            row.append(idx[c])
        rho.append(row)
    return Solution(k, [maps.identity(k)] * k, rho)


def left_simple_decomposition(T: SemiTruss) -> dict:
    C = generate_c(T)
    for f in C.elements:
        Cf = C.products(f)[0]
        if Cf != set(C.elements):
            return {
                "left_simple": False,
                "witness": list(f),
                "left_ideal": sorted(list(g) for g in Cf),
                "chain_sketch": ideal_chain_sketch(C),
            }
    m = T.m
    blocks = []
    owner = [-1] * m
    for e in C.idempotents:
        G = maximal_subgroup(C, e)
        Gs = set(G)
        Ae = [a for a in range(m) if T.sig[a] in Gs]
        for a in Ae:
            if owner[a] != -1:
                raise InvariantError(f"element {a} lies in two blocks")
            owner[a] = len(blocks)
        GA = sorted({g[a] for g in G for a in Ae})
        left_ideal = all(T.add[b][a] in set(Ae) for b in range(m) for a in Ae)
        sub = _restricted_solution(T, GA)
        fl = classify(sub) if sub is not None else None
        ok = fl is not None and fl.bijective and fl.lnd and fl.rnd
        blocks.append({
            "idempotent": list(e),
            "group_order": len(G),
            "block": Ae,
            "image": GA,
            "left_ideal": left_ideal,
            "restricted_bijective_nondegenerate": ok,
        })
    if -1 in owner:
        raise InvariantError(f"element {owner.index(-1)} lies in no block")
    cross = True
    for a, b in product(range(m), repeat=2):
        f = C.idempotents[owner[b]]
        if T.sig[b][a] != T.sig[f[b]][f[a]]:
            cross = False
    report = {"left_simple": True, "blocks": blocks, "cross_terms": cross}
    if not (cross and all(bl["left_ideal"] and bl["restricted_bijective_nondegenerate"] for bl in blocks)):
        raise InvariantError(f"decomposition claims fail: {report}")
    return report
